#pragma once

#include <string>
#include <vector>

#include "lma/affine.hpp"
#include "json.hpp"

namespace lma {

// Kottwitz-Rapoport admissible set Adm(mu) = {w : w <= t_lambda for some
// lambda in the W_0-orbit of mu}, realized as indices into a BoundedWindow.
struct AdmissibleSet {
  Coweight mu;
  const BoundedWindow* window = nullptr;
  std::vector<std::size_t> elements;  // window indices, in window order
  std::vector<std::size_t> maxima;    // subset of elements
  Bitset membership;                  // over window indices
};

// Requires window bound >= <mu, 2rho> and the window to contain the Omega
// class of mu. Throws DomainError on non-dominant mu, ResourceError if some
// t_lambda falls outside the window.
AdmissibleSet compute_adm(const AffineWeyl& ctx, const BoundedWindow& window,
                          const Coweight& mu);

// Two-sided W_Y-classes of Adm(mu). Each class is keyed by the unique
// Bruhat-maximal element of the full double coset W_Y w W_Y (which may lie
// outside Adm); members/representative are the intersection with Adm.
struct ParahoricClass {
  AffineElement key;                   // max of W_Y w W_Y
  std::vector<std::size_t> members;    // window indices, in window order
  std::size_t representative = 0;      // member of maximal length
  bool maximal = false;                // Bruhat-maximal among classes
};

struct ParahoricProjection {
  std::vector<int> Y;
  std::vector<ParahoricClass> classes;  // sorted by (rep length, rep index)
  std::size_t maxima_count = 0;
};

ParahoricProjection parahoric_project(const AffineWeyl& ctx, const AdmissibleSet& adm,
                                      const std::vector<int>& Y);

// Cover relations of Adm(mu) under the affine Bruhat order, as pairs of
// positions into adm.elements.
std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const AdmissibleSet& adm);

nlohmann::ordered_json adm_report(const AffineWeyl& ctx, const AdmissibleSet& adm,
                                  const ParahoricProjection* proj = nullptr);

std::string adm_dot(const AffineWeyl& ctx, const AdmissibleSet& adm);

}  // namespace lma
