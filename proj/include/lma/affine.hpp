#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lma/weyl.hpp"

namespace lma {

// t_lambda * w in the extended affine Weyl group X_* >< W_0.
// (lambda, w)(lambda', w') = (lambda + w lambda', w w').
struct AffineElement {
  Coweight lambda;
  WeylElement w;

  bool operator==(const AffineElement&) const = default;
};

struct AffineElementHash {
  std::size_t operator()(const AffineElement& x) const {
    std::size_t h = VectorHash{}(x.lambda.coords);
    return h * 31 + x.w.idx;
  }
};

// Class of the translation part in X_* / Q^vee. residues are canonical
// (componentwise mod the elementary divisors); index is their mixed-radix
// encoding, used for the "omega[k]" display.
struct OmegaClass {
  std::vector<long long> residues;
  std::uint64_t index = 0;

  bool operator==(const OmegaClass&) const = default;
};

struct AffineRootPartition {
  std::size_t levi_count = 0;       // roots with <lambda, alpha> = 0 (both signs)
  std::size_t negative_count = 0;   // roots with <lambda, alpha> <= -1
  std::size_t positive_count = 0;   // roots with <lambda, alpha> >= +1
  long long fiber_dimension = 0;    // #{(alpha>0, n>=1) : n <= <lambda,alpha>} = <lambda,2rho>
  long long paper_expression = 0;   // <lambda,2rho> - l(w_S), reported, not asserted
  std::vector<int> levi_type;       // I(lambda)
};

// Quasi-Coxeter context for the extended affine Weyl group: multiplication,
// Iwahori-Matsumoto length, Omega components, reduced decompositions. Holds
// pointers to an externally owned datum/group pair (see Instance).
class AffineWeyl {
 public:
  AffineWeyl(const RootDatum& datum, const FiniteWeylGroup& group);

  const RootDatum& datum() const { return *datum_; }
  const FiniteWeylGroup& group() const { return *group_; }

  AffineElement identity() const { return {datum_->zero(), group_->identity()}; }
  AffineElement translation(Coweight lam) const { return {std::move(lam), group_->identity()}; }
  AffineElement from_finite(WeylElement w) const { return {datum_->zero(), w}; }

  AffineElement mult(const AffineElement& a, const AffineElement& b) const;
  AffineElement inverse(const AffineElement& a) const;

  // Iwahori-Matsumoto length. Convention is pinned by l(t_lambda) =
  // <lambda, 2rho> for dominant lambda together with the requirement that
  // translations by W_0-conjugates of a minuscule coweight bound the full
  // W_0 t_mu W_0 double coset from above:
  //   l(t_lambda w) = sum_{a>0, w^-1 a>0} |<lambda,a>|
  //                 + sum_{a>0, w^-1 a<0} |<lambda,a>+1|.
  long long length(const AffineElement& x) const;

  int num_affine_simples() const { return datum_->rank() + 1; }
  // i = 0 is the affine reflection t_{-theta^vee} s_theta; i >= 1 are the
  // finite simple reflections.
  const AffineElement& affine_simple(int i) const { return simples_[static_cast<std::size_t>(i)]; }
  AffineElement left_mult_simple(int i, const AffineElement& x) const {
    return mult(simples_[static_cast<std::size_t>(i)], x);
  }
  AffineElement right_mult_simple(const AffineElement& x, int i) const {
    return mult(x, simples_[static_cast<std::size_t>(i)]);
  }

  OmegaClass omega_component(const AffineElement& x) const;
  std::uint64_t fundamental_group_order() const { return omega_order_; }

  // x = s_{i1} ... s_{il} * tau with tau of length zero; letters extracted by
  // stripping the smallest-index left descent (0 before 1).
  struct ReducedDecomposition {
    std::vector<int> letters;
    AffineElement omega_part;
  };
  ReducedDecomposition reduced_decomposition(const AffineElement& x) const;

  // {u : u <= x}, via repeated deletion from the reduced decomposition.
  std::vector<AffineElement> lower_interval(const AffineElement& x) const;

  AffineRootPartition affine_root_partition(const Coweight& lam) const;

  // "t[1,0]·s1.s2"
  std::string to_string(const AffineElement& x) const;
  // quasi-Coxeter display "omega[k]·s0.s2"
  std::string to_string_quasi_coxeter(const AffineElement& x) const;

 private:
  const RootDatum* datum_;
  const FiniteWeylGroup* group_;
  std::vector<AffineElement> simples_;
  // Smith data for X_*/Q^vee (adjoint lattice; trivial for simply connected).
  std::vector<long long> omega_diag_;
  std::vector<std::vector<long long>> omega_left_;
  std::uint64_t omega_order_ = 1;
};

// Enumerated slab of the extended affine Weyl group up to a length bound,
// with memoized Bruhat order. Element order: (length, lambda lex, w index).
class BoundedWindow {
 public:
  // Bruhat order is computed over everything enumerated; restrict_class keeps
  // only one Omega class (left-multiplication by affine simples preserves the
  // class, so the order recursion stays closed).
  static BoundedWindow build(const AffineWeyl& ctx, long long bound,
                             std::uint64_t budget = 5'000'000,
                             const OmegaClass* restrict_class = nullptr);

  long long bound() const { return bound_; }
  std::size_t size() const { return elements_.size(); }
  const AffineElement& element(std::size_t i) const { return elements_[i]; }
  long long length(std::size_t i) const { return lengths_[i]; }
  std::optional<std::size_t> index_of(const AffineElement& x) const;

  bool leq(std::size_t u, std::size_t w) const { return lower_[w].test(u); }
  const Bitset& lower(std::size_t w) const { return lower_[w]; }

  // Covering pairs (u, w), u covered by w, within an arbitrary subset.
  std::vector<std::pair<std::size_t, std::size_t>> covers(
      const std::vector<std::size_t>& subset) const;

  std::vector<std::uint8_t> serialize(const AffineWeyl& ctx) const;
  static std::optional<BoundedWindow> deserialize(const AffineWeyl& ctx,
                                                  const std::vector<std::uint8_t>& blob);
  static std::uint32_t format_version();

 private:
  void build_bruhat(const AffineWeyl& ctx);

  long long bound_ = 0;
  std::vector<AffineElement> elements_;
  std::vector<long long> lengths_;
  std::vector<Bitset> lower_;
  std::unordered_map<AffineElement, std::size_t, AffineElementHash> index_;
};

// Owns one (datum, group, affine context) triple with stable addresses.
struct Instance {
  std::unique_ptr<RootDatum> datum;
  std::unique_ptr<FiniteWeylGroup> group;
  std::unique_ptr<AffineWeyl> affine;

  static Instance make(const CartanType& type, Lattice lattice,
                       std::uint64_t budget = 1'000'000);
};

}  // namespace lma
