#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lma/cartan.hpp"
#include "lma/util.hpp"
#include "json.hpp"

namespace lma {

enum class Lattice { adjoint, simply_connected };

std::string lattice_name(Lattice l);
Lattice parse_lattice(const std::string& s);

// Integer coordinate vector in the chosen cocharacter lattice basis:
// fundamental coweights for the adjoint lattice, simple coroots for the
// simply connected one.
struct Coweight {
  std::vector<int> coords;

  bool operator==(const Coweight&) const = default;
};

// Root-system arithmetic for a split simple type. Immutable after build();
// all queries are pure and safe to share across threads.
class RootDatum {
 public:
  static RootDatum build(const CartanType& type, Lattice lattice);

  const CartanType& type() const { return type_; }
  Lattice lattice() const { return lattice_; }
  int rank() const { return type_.rank; }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Positive roots in simple-root coordinates, sorted by height then
  // lexicographic; downstream iteration orders inherit this.
  const std::vector<std::vector<int>>& positive_roots() const { return roots_; }
  // Coroots in simple-coroot coordinates, aligned with positive_roots().
  const std::vector<std::vector<int>>& positive_coroots() const { return coroots_; }

  std::size_t highest_root_index() const { return highest_; }
  const std::vector<int>& highest_root() const { return roots_[highest_]; }
  const std::vector<int>& highest_coroot() const { return coroots_[highest_]; }

  int root_height(std::size_t k) const { return heights_[k]; }
  // Signed lookup: returns +(k+1) / -(k+1) if v = +/- positive root k, 0 else.
  int root_lookup(const std::vector<int>& v) const;

  // <lambda, alpha> for alpha in simple-root coordinates.
  long long pairing(const Coweight& lam, const std::vector<int>& root) const;
  long long simple_pairing(const Coweight& lam, int i) const;
  long long coroot_pairing_with_root(std::size_t coroot_idx, const std::vector<int>& root) const;
  long long two_rho_pairing(const Coweight& lam) const;

  bool is_dominant(const Coweight& lam) const;
  bool is_zero(const Coweight& lam) const;

  // I(lambda) = { i : <lambda, alpha_i> = 0 }, 0-based indices; requires
  // dominant lambda.
  std::vector<int> type_map(const Coweight& lam) const;

  bool is_minuscule(const Coweight& lam) const;
  // Nonzero minuscule coweights that lie in the chosen lattice, derived from
  // the highest-root coefficients.
  std::vector<Coweight> list_minuscule() const;

  Coweight zero() const { return Coweight{std::vector<int>(rank(), 0)}; }
  // All dominant lattice coweights with <lambda, 2rho> <= bound, enumerated
  // deterministically (lex over fundamental-coweight coordinates).
  std::vector<Coweight> dominant_coweights_up_to(long long bound) const;
  // Fundamental coweight omega_i^vee; nullopt if it is not in the lattice.
  std::optional<Coweight> fundamental_coweight(int i) const;
  // Coweight coords of the coroot aligned with positive root k.
  Coweight coroot_as_coweight(std::size_t k) const;

  // s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^vee.
  Coweight apply_simple_reflection(int i, const Coweight& lam) const;
  // Action matrix of s_i on the lattice basis (row-major, m[r][c]: image
  // coord r from source coord c).
  std::vector<std::vector<int>> simple_reflection_matrix(int i) const;

  // Relative root length data: d_i = (alpha_i, alpha_i)/2, normalized to
  // minimal positive integers.
  const std::vector<int>& root_length_scale() const { return dvec_; }

  std::uint64_t fundamental_group_order() const;

  nlohmann::ordered_json to_json() const;

 private:
  CartanType type_{Family::A, 1};
  Lattice lattice_ = Lattice::adjoint;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> coroots_;
  std::vector<int> heights_;
  std::size_t highest_ = 0;
  std::vector<int> dvec_;
  std::vector<long long> rho2_;  // <.,2rho> pairing vector in lattice coords
  // lookup map root coords -> index, built once
  std::vector<std::pair<std::vector<int>, int>> lookup_;
};

}  // namespace lma
