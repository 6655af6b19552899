#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lma/admissible.hpp"
#include "lma/affine.hpp"
#include "json.hpp"

namespace lma {

// B x B-orbit label [J, x, y] of the wonderful compactification; x must be
// J-minimal (x in W^J).
struct OrbitLabel {
  std::vector<int> J;  // sorted 0-based simple indices
  WeylElement x;
  WeylElement y;

  bool operator==(const OrbitLabel&) const = default;
};

using WeylPair = std::pair<WeylElement, WeylElement>;

// Set of (x, y) pairs with x in W^J, y in W_0, cut out of the Z'_J slice by
// some closure formula; members sorted by (x index, y index).
struct SliceSet {
  std::vector<int> J;
  std::vector<WeylPair> members;
  std::string provenance;
};

// [J, x', y'] lies in the closure of [J', x, y] iff J subset J' and there is
// u in W_{J'} with x u <= x' and y' <= y u. (a is the smaller orbit here.)
bool closure_leq(const FiniteWeylGroup& g, const OrbitLabel& a, const OrbitLabel& b);

// (x', y') = q precedes (x, y) = p in the closure order on Z'_J:
// exists u in W_J with x u <= x' and y' <= y u. Throws DomainError if a first
// component is not J-minimal.
bool preceq(const FiniteWeylGroup& g, const std::vector<int>& J, const WeylPair& p,
            const WeylPair& q);

// Precomputed closure order over W^J x W_0 for one J: pair index
// p = (position of x in W^J) * |W_0| + y.idx, with downset bitsets.
class SlicePlan {
 public:
  SlicePlan(const FiniteWeylGroup& g, std::vector<int> J);

  const std::vector<int>& J() const { return J_; }
  const std::vector<WeylElement>& xs() const { return xs_; }
  std::size_t num_pairs() const { return xs_.size() * nW_; }
  std::size_t pair_index(WeylElement x, WeylElement y) const;
  WeylPair pair_at(std::size_t p) const {
    return {xs_[p / nW_], WeylElement{static_cast<std::uint32_t>(p % nW_)}};
  }
  // q preceq p
  bool leq(std::size_t q, std::size_t p) const { return down_[p].test(q); }
  const Bitset& down(std::size_t p) const { return down_[p]; }

  // Maximal members of an arbitrary subset under preceq.
  std::vector<std::size_t> maxima(const std::vector<std::size_t>& subset) const;

 private:
  const FiniteWeylGroup* g_;
  std::vector<int> J_;
  std::vector<WeylElement> xs_;
  std::vector<std::size_t> xpos_;  // by element idx; npos if not in W^J
  std::size_t nW_ = 0;
  std::vector<Bitset> down_;
};

// closure(B) cap Z'_J, direct formula {(x,y) : y <= x}.
SliceSet b_closure_slice(const FiniteWeylGroup& g, const std::vector<int>& J);
// Same slice via the closure criterion applied to [S, 1, 1]:
// exists u in W_0 with u <= x and y <= u.
SliceSet b_closure_slice_dual(const FiniteWeylGroup& g, const std::vector<int>& J);

// closure(P_Y) cap Z'_J, direct formula {(x,y) : min(W_Y y) <= x}.
SliceSet p_closure_slice(const FiniteWeylGroup& g, const std::vector<int>& J,
                         const std::vector<int>& Y);
// Same slice via the criterion applied to [S, 1, w_Y]:
// exists u in W_0 with u <= x and y <= w_Y u.
SliceSet p_closure_slice_dual(const FiniteWeylGroup& g, const std::vector<int>& J,
                              const std::vector<int>& Y);

// Q_mu = {(x,y) in W^{I(mu)} x W_0 : y <= x}. Throws DomainError unless mu is
// dominant minuscule.
SliceSet q_mu(const AffineWeyl& ctx, const Coweight& mu);

// (x, y) -> x t_mu y^{-1}.
AffineElement helam_map(const AffineWeyl& ctx, const Coweight& mu, const WeylPair& p);

// Weyl point (c, d)·h'_J normalized to its orbit label (J, c^J, d c_J^{-1}).
OrbitLabel weyl_point_normalize(const FiniteWeylGroup& g, WeylElement c, WeylElement d,
                                const std::vector<int>& J);

// Verification reports. Schema:
// { "check", "instance", "status", "counterexample", "coverage", "sizes" }.
nlohmann::ordered_json verify_helam_poset_iso(const AffineWeyl& ctx,
                                              const BoundedWindow& window,
                                              const Coweight& mu);
nlohmann::ordered_json verify_adm_bijection(const AffineWeyl& ctx,
                                            const BoundedWindow& window,
                                            const Coweight& mu);
// Both slice formulas on one (J, Y); exhaustive pair-by-pair comparison.
nlohmann::ordered_json verify_slice_formulas(const FiniteWeylGroup& g,
                                             const std::vector<int>& J,
                                             const std::vector<int>& Y);
nlohmann::ordered_json corollary_coverage_report(const FiniteWeylGroup& g,
                                                 const std::vector<int>& J,
                                                 const std::vector<int>& Y);

// A^Y(mu) = p_closure_slice(I(mu), Y) plus the Weyl-point underapproximation
// built from Q_mu; report carries the coverage fraction.
struct SpecialFiberSupport {
  SliceSet slice;                       // the defining formula
  std::vector<std::size_t> maxima;      // preceq-maxima, as plan pair indices
  nlohmann::ordered_json report;
};
SpecialFiberSupport special_fiber_support(const AffineWeyl& ctx, const Coweight& mu,
                                          const std::vector<int>& Y);

// Cover pairs (q, p), q covered by p under preceq, within a subset of plan
// pair indices; output sorted.
std::vector<std::pair<std::size_t, std::size_t>> slice_covers(
    const SlicePlan& plan, const std::vector<std::size_t>& subset);

// All subsets of {0..rank-1}, sorted by (size, lex); used by CLI and tests.
std::vector<std::vector<int>> all_subsets(int rank);

std::string subset_to_string(const std::vector<int>& J);

}  // namespace lma
