#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lma/root_datum.hpp"
#include "lma/util.hpp"

namespace lma {

// Handle into a FiniteWeylGroup's element table. Elements are numbered by
// (length, ShortLex reduced word); index 0 is the identity.
struct WeylElement {
  std::uint32_t idx = 0;

  bool operator==(const WeylElement&) const = default;
};

// Fully enumerated finite Weyl group with Cayley tables and a memoized
// Bruhat order. Immutable after generate(); Bruhat rows are filled lazily
// behind a mutex so concurrent queries stay logically pure.
class FiniteWeylGroup {
 public:
  // BFS closure under the simple reflections; throws ResourceError if the
  // group order exceeds the element budget.
  static FiniteWeylGroup generate(const RootDatum& datum,
                                  std::uint64_t budget = 1'000'000);

  const RootDatum& datum() const { return *datum_; }
  std::size_t size() const { return n_; }
  int rank() const { return rank_; }

  WeylElement identity() const { return {0}; }
  WeylElement simple(int i) const { return {simple_[static_cast<std::size_t>(i)]}; }

  int length(WeylElement w) const { return length_[w.idx]; }
  const std::vector<std::uint8_t>& word(WeylElement w) const { return word_[w.idx]; }

  WeylElement right_mult(WeylElement w, int i) const {
    return WeylElement{right_[w.idx * rank_ + i].val()};
  }
  WeylElement left_mult(int i, WeylElement w) const {
    return WeylElement{left_[w.idx * rank_ + i].val()};
  }
  WeylElement mult(WeylElement a, WeylElement b) const;
  WeylElement inverse(WeylElement w) const { return {inverse_[w.idx]}; }

  bool right_descent(WeylElement w, int i) const {
    return length_[right_[w.idx * rank_ + i].val()] < length_[w.idx];
  }
  bool left_descent(WeylElement w, int i) const {
    return length_[left_[w.idx * rank_ + i].val()] < length_[w.idx];
  }

  // Signed image of positive root k under w: +(m+1)/-(m+1) for +/- beta_m.
  int root_image(WeylElement w, std::size_t k) const {
    return rimg_[w.idx * nroots_ + k];
  }
  // True iff w(beta_k) < 0.
  bool inverts_root(WeylElement w, std::size_t k) const {
    return rimg_[w.idx * nroots_ + k] < 0;
  }

  Coweight act(WeylElement w, const Coweight& lam) const;
  // Action on an arbitrary root-lattice vector (simple-root coordinates).
  std::vector<int> act_root(WeylElement w, std::vector<int> v) const;

  // Reflection associated with positive root k (hash lookup by root images).
  WeylElement reflection(std::size_t k) const;

  bool bruhat_leq(WeylElement u, WeylElement w) const;
  // Lower Bruhat set of w as a bitset over element indices.
  const Bitset& bruhat_row(WeylElement w) const;

  WeylElement longest_element() const { return longest_; }
  WeylElement longest_element(const std::vector<int>& J) const;

  // W_J, sorted by (length, index).
  std::vector<WeylElement> subgroup_elements(const std::vector<int>& J) const;
  // W^J: minimal length coset representatives of W/W_J, in element order.
  std::vector<WeylElement> minimal_reps(const std::vector<int>& J) const;
  // Unique minimal element of W_Y * y.
  WeylElement min_coset_rep(const std::vector<int>& Y, WeylElement y) const;
  // w = w^J * w_J with w^J in W^J, w_J in W_J, lengths additive.
  std::pair<WeylElement, WeylElement> parabolic_decompose(WeylElement w,
                                                          const std::vector<int>& J) const;
  bool in_min_reps(WeylElement w, const std::vector<int>& J) const;

  // "e" or "s1.s2.s1" (ShortLex-minimal reduced word, 1-based indices).
  std::string to_string(WeylElement w) const;
  std::optional<WeylElement> parse(const std::string& s) const;

 private:
  struct Idx {  // storage helper so tables stay 32-bit
    std::uint32_t v = 0;
    std::uint32_t val() const { return v; }
    operator WeylElement() const { return {v}; }
  };

  const RootDatum* datum_ = nullptr;
  std::size_t n_ = 0;
  int rank_ = 0;
  std::size_t nroots_ = 0;
  std::vector<std::uint32_t> simple_;
  std::vector<int> length_;
  std::vector<std::vector<std::uint8_t>> word_;
  std::vector<Idx> right_;  // n_ * rank_
  std::vector<Idx> left_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::int32_t> rimg_;  // n_ * nroots_, signed indices
  std::vector<std::int32_t> cmat_;  // n_ * rank_ * rank_, lattice action
  WeylElement longest_{0};

  // Behind a pointer so the group stays movable.
  mutable std::unique_ptr<std::mutex> bruhat_mutex_ = std::make_unique<std::mutex>();
  mutable std::vector<Bitset> bruhat_rows_;
  mutable std::vector<std::uint8_t> bruhat_built_;

  const Bitset& bruhat_row_locked(std::uint32_t w) const;
};

}  // namespace lma
