// Test-side oracles, deliberately implemented along different routes than the
// library: subword-based Bruhat order, geometric (alcove-separation) length
// counting, and definition-chasing set constructions.
#pragma once

#include <numeric>
#include <unordered_set>
#include <vector>

#include "lma/admissible.hpp"
#include "lma/affine.hpp"
#include "lma/weyl.hpp"

namespace oracles {

// {u : u <= w} from the subword property: products of subsequences of one
// fixed reduced word of w.
inline lma::Bitset bruhat_lower_subword(const lma::FiniteWeylGroup& g,
                                        lma::WeylElement w) {
  lma::Bitset s(g.size());
  s.set(g.identity().idx);
  for (std::uint8_t letter : g.word(w)) {
    lma::Bitset next = s;
    s.for_each_set([&](std::size_t u) {
      next.set(g.right_mult(lma::WeylElement{static_cast<std::uint32_t>(u)}, letter).idx);
    });
    s = std::move(next);
  }
  return s;
}

inline bool bruhat_leq_subword(const lma::FiniteWeylGroup& g, lma::WeylElement u,
                               lma::WeylElement w) {
  return bruhat_lower_subword(g, w).test(u.idx);
}

// Same idea one level up: subsequence products of an affine reduced word,
// followed by the length-zero part.
inline std::unordered_set<lma::AffineElement, lma::AffineElementHash>
affine_lower_subword(const lma::AffineWeyl& ctx, const lma::AffineElement& w) {
  auto rd = ctx.reduced_decomposition(w);
  std::unordered_set<lma::AffineElement, lma::AffineElementHash> s;
  s.insert(ctx.identity());
  for (int letter : rd.letters) {
    auto next = s;
    for (const auto& u : s) next.insert(ctx.right_mult_simple(u, letter));
    s = std::move(next);
  }
  std::unordered_set<lma::AffineElement, lma::AffineElementHash> out;
  for (const auto& u : s) out.insert(ctx.mult(u, rd.omega_part));
  return out;
}

// Iwahori-Matsumoto length as a count of affine hyperplanes H_{alpha,k}
// separating the base alcove from its image under v -> w(v) - lambda. Exact
// rational arithmetic over a common denominator N > height(theta).
inline long long alcove_separation_length(const lma::AffineWeyl& ctx,
                                          const lma::AffineElement& x) {
  const lma::RootDatum& rd = ctx.datum();
  const lma::FiniteWeylGroup& g = ctx.group();
  long long N = rd.root_height(rd.highest_root_index()) + 1;

  // Interior point p of the base alcove: <p, alpha_i> = 1/N. In adjoint
  // coordinates that is p_i = 1/N; in coroot coordinates solve via the
  // fundamental coweights (all entries rational with denominator N). To stay
  // in integers, track q_beta = N * <p, beta> = height(beta).
  long long total = 0;
  lma::WeylElement winv = g.inverse(x.w);
  for (std::size_t k = 0; k < rd.positive_roots().size(); ++k) {
    const auto& beta = rd.positive_roots()[k];
    // a/N = <p, beta>, b/N = <w(p) - lambda, beta> = <p, w^{-1} beta> - c.
    long long a = rd.root_height(k);
    std::vector<int> wb(beta);
    wb = g.act_root(winv, wb);
    long long hw = std::accumulate(wb.begin(), wb.end(), 0LL);
    long long c = rd.pairing(x.lambda, beta);
    long long b = hw - c * N;
    // Integers strictly between a/N and b/N; neither endpoint is integral
    // because 0 < |height| < N.
    long long lo = std::min(a, b), hi = std::max(a, b);
    total += lma::floor_div(hi, N) - lma::floor_div(lo, N);
  }
  return total;
}

// Adm(mu) assembled from scratch: union of affine subword lower sets of the
// translation points of the W_0-orbit of mu.
inline std::unordered_set<lma::AffineElement, lma::AffineElementHash> adm_brute(
    const lma::AffineWeyl& ctx, const lma::Coweight& mu) {
  const lma::FiniteWeylGroup& g = ctx.group();
  std::unordered_set<std::vector<int>, lma::VectorHash> orbit;
  for (std::uint32_t wi = 0; wi < g.size(); ++wi)
    orbit.insert(g.act(lma::WeylElement{wi}, mu).coords);
  std::unordered_set<lma::AffineElement, lma::AffineElementHash> out;
  for (const auto& lam : orbit) {
    auto lower = affine_lower_subword(ctx, ctx.translation(lma::Coweight{lam}));
    out.insert(lower.begin(), lower.end());
  }
  return out;
}

// l(w) = #{alpha > 0 : w(alpha) < 0}, recomputed through the root action
// rather than the stored inversion table.
inline int finite_length_by_inversions(const lma::FiniteWeylGroup& g,
                                       lma::WeylElement w) {
  const lma::RootDatum& rd = g.datum();
  int count = 0;
  for (const auto& beta : rd.positive_roots()) {
    std::vector<int> img = g.act_root(w, beta);
    bool neg = true;
    for (int c : img)
      if (c > 0) neg = false;
    if (neg) ++count;
  }
  return count;
}

}  // namespace oracles
