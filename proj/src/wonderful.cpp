#include "lma/wonderful.hpp"

#include <algorithm>
#include <unordered_set>

namespace lma {

namespace {

void require_min_rep(const FiniteWeylGroup& g, WeylElement x, const std::vector<int>& J,
                     const char* who) {
  if (!g.in_min_reps(x, J))
    throw DomainError(std::string(who) + ": first component is not J-minimal");
}

nlohmann::ordered_json instance_json(const FiniteWeylGroup& g,
                                     const Coweight* mu,
                                     const std::vector<int>* J,
                                     const std::vector<int>* Y) {
  nlohmann::ordered_json j;
  j["type"] = g.datum().type().to_string();
  j["lattice"] = lattice_name(g.datum().lattice());
  if (mu)
    j["mu"] = mu->coords;
  else
    j["mu"] = nullptr;
  auto put_subset = [](nlohmann::ordered_json& out, const char* key,
                       const std::vector<int>* sub) {
    if (!sub) {
      out[key] = nullptr;
      return;
    }
    auto arr = nlohmann::ordered_json::array();
    for (int i : *sub) arr.push_back(i + 1);
    out[key] = std::move(arr);
  };
  put_subset(j, "J", J);
  put_subset(j, "Y", Y);
  return j;
}

nlohmann::ordered_json make_report(const std::string& check,
                                   nlohmann::ordered_json instance,
                                   const std::string& status,
                                   nlohmann::ordered_json counterexample,
                                   nlohmann::ordered_json coverage,
                                   nlohmann::ordered_json sizes) {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["instance"] = std::move(instance);
  j["status"] = status;
  j["counterexample"] = std::move(counterexample);
  j["coverage"] = std::move(coverage);
  j["sizes"] = std::move(sizes);
  return j;
}

SliceSet slice_from_pred(const FiniteWeylGroup& g, const std::vector<int>& J,
                         const std::function<bool(WeylElement, WeylElement)>& pred,
                         std::string provenance) {
  SliceSet s;
  s.J = J;
  s.provenance = std::move(provenance);
  for (WeylElement x : g.minimal_reps(J))
    for (std::uint32_t yi = 0; yi < g.size(); ++yi)
      if (pred(x, WeylElement{yi})) s.members.push_back({x, WeylElement{yi}});
  std::sort(s.members.begin(), s.members.end(),
            [](const WeylPair& a, const WeylPair& b) {
              if (a.first.idx != b.first.idx) return a.first.idx < b.first.idx;
              return a.second.idx < b.second.idx;
            });
  return s;
}

}  // namespace

bool closure_leq(const FiniteWeylGroup& g, const OrbitLabel& a, const OrbitLabel& b) {
  require_min_rep(g, a.x, a.J, "closure_leq");
  require_min_rep(g, b.x, b.J, "closure_leq");
  if (!std::includes(b.J.begin(), b.J.end(), a.J.begin(), a.J.end())) return false;
  for (WeylElement u : g.subgroup_elements(b.J)) {
    if (g.bruhat_leq(g.mult(b.x, u), a.x) && g.bruhat_leq(a.y, g.mult(b.y, u)))
      return true;
  }
  return false;
}

bool preceq(const FiniteWeylGroup& g, const std::vector<int>& J, const WeylPair& p,
            const WeylPair& q) {
  require_min_rep(g, p.first, J, "preceq");
  require_min_rep(g, q.first, J, "preceq");
  for (WeylElement u : g.subgroup_elements(J)) {
    if (g.bruhat_leq(g.mult(p.first, u), q.first) &&
        g.bruhat_leq(q.second, g.mult(p.second, u)))
      return true;
  }
  return false;
}

SlicePlan::SlicePlan(const FiniteWeylGroup& g, std::vector<int> J)
    : g_(&g), J_(std::move(J)), nW_(g.size()) {
  xs_ = g.minimal_reps(J_);
  xpos_.assign(g.size(), static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < xs_.size(); ++a) xpos_[xs_[a].idx] = a;

  std::vector<WeylElement> wj = g.subgroup_elements(J_);
  std::size_t np = num_pairs();
  // Warm the lazy Bruhat cache before the parallel section so reads below are
  // contention-free.
  for (std::uint32_t yi = 0; yi < g.size(); ++yi) (void)g.bruhat_row(WeylElement{yi});

  down_.assign(np, Bitset{});
  parallel_for(np, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
      WeylElement x = xs_[p / nW_];
      WeylElement y{static_cast<std::uint32_t>(p % nW_)};
      Bitset row(np);
      for (WeylElement u : wj) {
        WeylElement xu = g.mult(x, u);
        WeylElement yu = g.mult(y, u);
        const Bitset& ylow = g.bruhat_row(yu);
        for (std::size_t a = 0; a < xs_.size(); ++a) {
          if (!g.bruhat_leq(xu, xs_[a])) continue;
          std::size_t base = a * nW_;
          ylow.for_each_set([&](std::size_t yp) { row.set(base + yp); });
        }
      }
      down_[p] = std::move(row);
    }
  });
}

std::size_t SlicePlan::pair_index(WeylElement x, WeylElement y) const {
  std::size_t a = xpos_[x.idx];
  if (a == static_cast<std::size_t>(-1))
    throw DomainError("SlicePlan::pair_index: x is not J-minimal");
  return a * nW_ + y.idx;
}

std::vector<std::size_t> SlicePlan::maxima(const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> out;
  for (std::size_t p : subset) {
    bool maximal = true;
    for (std::size_t q : subset) {
      if (q != p && down_[q].test(p) && !down_[p].test(q)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(p);
  }
  return out;
}

SliceSet b_closure_slice(const FiniteWeylGroup& g, const std::vector<int>& J) {
  return slice_from_pred(
      g, J, [&](WeylElement x, WeylElement y) { return g.bruhat_leq(y, x); },
      "y <= x");
}

SliceSet b_closure_slice_dual(const FiniteWeylGroup& g, const std::vector<int>& J) {
  return slice_from_pred(
      g, J,
      [&](WeylElement x, WeylElement y) {
        for (std::uint32_t ui = 0; ui < g.size(); ++ui) {
          WeylElement u{ui};
          if (g.bruhat_leq(u, x) && g.bruhat_leq(y, u)) return true;
        }
        return false;
      },
      "exists u: u <= x and y <= u");
}

SliceSet p_closure_slice(const FiniteWeylGroup& g, const std::vector<int>& J,
                         const std::vector<int>& Y) {
  return slice_from_pred(
      g, J,
      [&](WeylElement x, WeylElement y) {
        return g.bruhat_leq(g.min_coset_rep(Y, y), x);
      },
      "min(W_Y y) <= x");
}

SliceSet p_closure_slice_dual(const FiniteWeylGroup& g, const std::vector<int>& J,
                              const std::vector<int>& Y) {
  WeylElement wy = g.longest_element(Y);
  return slice_from_pred(
      g, J,
      [&](WeylElement x, WeylElement y) {
        for (std::uint32_t ui = 0; ui < g.size(); ++ui) {
          WeylElement u{ui};
          if (g.bruhat_leq(u, x) && g.bruhat_leq(y, g.mult(wy, u))) return true;
        }
        return false;
      },
      "exists u: u <= x and y <= w_Y u");
}

SliceSet q_mu(const AffineWeyl& ctx, const Coweight& mu) {
  const RootDatum& rd = ctx.datum();
  if (!rd.is_dominant(mu) || !rd.is_minuscule(mu))
    throw DomainError("q_mu: mu must be dominant minuscule");
  SliceSet s = b_closure_slice(ctx.group(), rd.type_map(mu));
  s.provenance = "Q_mu: y <= x over W^{I(mu)} x W_0";
  return s;
}

AffineElement helam_map(const AffineWeyl& ctx, const Coweight& mu, const WeylPair& p) {
  const FiniteWeylGroup& g = ctx.group();
  return {g.act(p.first, mu), g.mult(p.first, g.inverse(p.second))};
}

OrbitLabel weyl_point_normalize(const FiniteWeylGroup& g, WeylElement c, WeylElement d,
                                const std::vector<int>& J) {
  auto [cj_min, cj] = g.parabolic_decompose(c, J);
  return {J, cj_min, g.mult(d, g.inverse(cj))};
}

nlohmann::ordered_json verify_helam_poset_iso(const AffineWeyl& ctx,
                                              const BoundedWindow& window,
                                              const Coweight& mu) {
  const FiniteWeylGroup& g = ctx.group();
  const RootDatum& rd = ctx.datum();
  if (!rd.is_dominant(mu) || !rd.is_minuscule(mu))
    throw DomainError("verify_helam_poset_iso: mu must be dominant minuscule");
  std::vector<int> J = rd.type_map(mu);
  SlicePlan plan(g, J);
  std::size_t np = plan.num_pairs();

  std::vector<std::size_t> windex(np);
  for (std::size_t p = 0; p < np; ++p) {
    auto [x, y] = plan.pair_at(p);
    auto idx = window.index_of(helam_map(ctx, mu, {x, y}));
    if (!idx)
      throw ResourceError("verify_helam_poset_iso: window does not contain an image");
    windex[p] = *idx;
  }

  nlohmann::ordered_json instance = instance_json(g, &mu, &J, nullptr);
  nlohmann::ordered_json sizes;
  sizes["pairs"] = np;
  sizes["W_min_reps"] = plan.xs().size();
  sizes["W0"] = g.size();

  // Injectivity and image = W_0 t_mu W_0 cap window.
  std::unordered_set<std::size_t> image(windex.begin(), windex.end());
  bool bijective = image.size() == np;
  if (bijective) {
    std::unordered_set<std::vector<int>, VectorHash> orbit;
    for (std::uint32_t wi = 0; wi < g.size(); ++wi)
      orbit.insert(g.act(WeylElement{wi}, mu).coords);
    std::size_t coset = 0;
    for (const auto& lam : orbit)
      for (std::uint32_t wi = 0; wi < g.size(); ++wi) {
        auto idx = window.index_of({Coweight{lam}, WeylElement{wi}});
        if (!idx || !image.count(*idx)) {
          bijective = false;
          break;
        }
        ++coset;
      }
    sizes["double_coset"] = coset;
    if (coset != np) bijective = false;
  }
  if (!bijective)
    return make_report("helam_iso", std::move(instance), "fail",
                       {{"reason", "map is not a bijection onto W_0 t_mu W_0"}},
                       nullptr, std::move(sizes));

  bool as_stated = true, reversed = true;
  nlohmann::ordered_json counterexample = nullptr;
  for (std::size_t p = 0; p < np && (as_stated || reversed); ++p) {
    for (std::size_t q = 0; q < np; ++q) {
      bool lhs = plan.leq(q, p);
      if (lhs != window.leq(windex[q], windex[p])) {
        if (as_stated && counterexample.is_null()) {
          auto [px, py] = plan.pair_at(p);
          auto [qx, qy] = plan.pair_at(q);
          counterexample = {
              {"p", {{"x", g.to_string(px)}, {"y", g.to_string(py)}}},
              {"q", {{"x", g.to_string(qx)}, {"y", g.to_string(qy)}}},
              {"preceq", lhs},
              {"affine_leq", !lhs}};
        }
        as_stated = false;
      }
      if (lhs != window.leq(windex[p], windex[q])) reversed = false;
      if (!as_stated && !reversed) break;
    }
  }
  nlohmann::ordered_json report = make_report(
      "helam_iso", std::move(instance), as_stated ? "pass" : "fail",
      as_stated ? nlohmann::ordered_json(nullptr) : std::move(counterexample), nullptr,
      std::move(sizes));
  report["orientation"] = as_stated ? "as-stated" : (reversed ? "reversed" : "neither");
  return report;
}

nlohmann::ordered_json verify_adm_bijection(const AffineWeyl& ctx,
                                            const BoundedWindow& window,
                                            const Coweight& mu) {
  const FiniteWeylGroup& g = ctx.group();
  SliceSet q = q_mu(ctx, mu);
  AdmissibleSet adm = compute_adm(ctx, window, mu);

  Bitset image(window.size());
  bool missing = false;
  for (const auto& p : q.members) {
    auto idx = window.index_of(helam_map(ctx, mu, p));
    if (!idx) {
      missing = true;
      break;
    }
    image.set(*idx);
  }
  bool equal = !missing && image == adm.membership;

  std::vector<int> J = ctx.datum().type_map(mu);
  nlohmann::ordered_json sizes;
  sizes["Q_mu"] = q.members.size();
  sizes["Adm"] = adm.elements.size();
  nlohmann::ordered_json counterexample = nullptr;
  if (!equal && !missing) {
    for (std::size_t i = 0; i < window.size(); ++i) {
      if (image.test(i) != adm.membership.test(i)) {
        counterexample = {{"element", ctx.to_string(window.element(i))},
                          {"in_image", image.test(i)},
                          {"in_adm", adm.membership.test(i)}};
        break;
      }
    }
  }
  return make_report("adm_bijection", instance_json(g, &mu, &J, nullptr),
                     equal ? "pass" : "fail", std::move(counterexample), nullptr,
                     std::move(sizes));
}

nlohmann::ordered_json verify_slice_formulas(const FiniteWeylGroup& g,
                                             const std::vector<int>& J,
                                             const std::vector<int>& Y) {
  SliceSet b1 = b_closure_slice(g, J);
  SliceSet b2 = b_closure_slice_dual(g, J);
  SliceSet p1 = p_closure_slice(g, J, Y);
  SliceSet p2 = p_closure_slice_dual(g, J, Y);

  nlohmann::ordered_json counterexample = nullptr;
  auto first_diff = [&](const SliceSet& a, const SliceSet& b, const char* which) {
    std::vector<WeylPair> diff;
    std::set_symmetric_difference(
        a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
        std::back_inserter(diff), [](const WeylPair& u, const WeylPair& v) {
          if (u.first.idx != v.first.idx) return u.first.idx < v.first.idx;
          return u.second.idx < v.second.idx;
        });
    if (!diff.empty() && counterexample.is_null())
      counterexample = {{"formula", which},
                        {"x", g.to_string(diff.front().first)},
                        {"y", g.to_string(diff.front().second)}};
    return diff.empty();
  };
  bool ok = first_diff(b1, b2, "b_closure_slice");
  ok = first_diff(p1, p2, "p_closure_slice") && ok;

  nlohmann::ordered_json sizes;
  sizes["b_slice"] = b1.members.size();
  sizes["p_slice"] = p1.members.size();
  sizes["pairs"] = g.minimal_reps(J).size() * g.size();
  return make_report("slice_formulas", instance_json(g, nullptr, &J, &Y),
                     ok ? "pass" : "fail", std::move(counterexample), nullptr,
                     std::move(sizes));
}

namespace {

// Shared core of the Corollary/special-fiber coverage checks: union of
// preceq-downsets of the given normalized Weyl points, compared against the
// closure slice.
nlohmann::ordered_json coverage_core(const FiniteWeylGroup& g, const SlicePlan& plan,
                                     const SliceSet& slice,
                                     const std::vector<std::size_t>& points,
                                     const std::string& check,
                                     nlohmann::ordered_json instance) {
  std::size_t np = plan.num_pairs();
  Bitset covered(np);
  {
    std::unordered_set<std::size_t> seen;
    for (std::size_t p : points)
      if (seen.insert(p).second) covered |= plan.down(p);
  }
  Bitset slice_bits(np);
  for (const auto& m : slice.members)
    slice_bits.set(plan.pair_index(m.first, m.second));

  nlohmann::ordered_json sizes;
  sizes["covered"] = covered.count();
  sizes["slice"] = slice_bits.count();

  if (!covered.is_subset_of(slice_bits)) {
    nlohmann::ordered_json counterexample = nullptr;
    for (std::size_t p = 0; p < np; ++p)
      if (covered.test(p) && !slice_bits.test(p)) {
        auto [x, y] = plan.pair_at(p);
        counterexample = {{"x", g.to_string(x)}, {"y", g.to_string(y)}};
        break;
      }
    return make_report(check, std::move(instance), "fail", std::move(counterexample),
                       nullptr, std::move(sizes));
  }
  double coverage = slice_bits.count() == 0
                        ? 1.0
                        : static_cast<double>(covered.count()) /
                              static_cast<double>(slice_bits.count());
  bool full = covered == slice_bits;
  return make_report(check, std::move(instance), full ? "pass" : "inconclusive",
                     nullptr, coverage, std::move(sizes));
}

}  // namespace

nlohmann::ordered_json corollary_coverage_report(const FiniteWeylGroup& g,
                                                 const std::vector<int>& J,
                                                 const std::vector<int>& Y) {
  SlicePlan plan(g, J);
  SliceSet slice = p_closure_slice(g, J, Y);
  std::vector<WeylElement> wy = g.subgroup_elements(Y);
  std::vector<std::size_t> points;
  for (WeylElement w : plan.xs())
    for (WeylElement a : wy)
      for (WeylElement b : wy) {
        OrbitLabel lab = weyl_point_normalize(g, g.mult(a, w), g.mult(b, w), J);
        points.push_back(plan.pair_index(lab.x, lab.y));
      }
  return coverage_core(g, plan, slice, points, "corollary_coverage",
                       instance_json(g, nullptr, &J, &Y));
}

SpecialFiberSupport special_fiber_support(const AffineWeyl& ctx, const Coweight& mu,
                                          const std::vector<int>& Y) {
  const FiniteWeylGroup& g = ctx.group();
  SliceSet q = q_mu(ctx, mu);  // validates mu, J = I(mu)
  std::vector<int> J = q.J;
  SlicePlan plan(g, J);

  SpecialFiberSupport out;
  out.slice = p_closure_slice(g, J, Y);
  out.slice.provenance = "A^Y(mu) = closure(P_Y) cap Z'_{I(mu)}: " + out.slice.provenance;

  std::vector<WeylElement> wy = g.subgroup_elements(Y);
  std::vector<std::size_t> points;
  for (const auto& [x, y] : q.members)
    for (WeylElement a : wy)
      for (WeylElement b : wy) {
        OrbitLabel lab = weyl_point_normalize(g, g.mult(a, x), g.mult(b, y), J);
        points.push_back(plan.pair_index(lab.x, lab.y));
      }

  std::vector<std::size_t> slice_idx;
  slice_idx.reserve(out.slice.members.size());
  for (const auto& m : out.slice.members)
    slice_idx.push_back(plan.pair_index(m.first, m.second));
  out.maxima = plan.maxima(slice_idx);

  out.report = coverage_core(g, plan, out.slice, points, "special_fiber_support",
                             instance_json(g, &mu, &J, &Y));
  out.report["maxima"] = nlohmann::ordered_json::array();
  for (std::size_t p : out.maxima) {
    auto [x, y] = plan.pair_at(p);
    out.report["maxima"].push_back({{"x", g.to_string(x)}, {"y", g.to_string(y)}});
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> slice_covers(
    const SlicePlan& plan, const std::vector<std::size_t>& subset) {
  auto strictly_below = [&](std::size_t a, std::size_t b) {
    return plan.leq(a, b) && !plan.leq(b, a);
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p : subset) {
    for (std::size_t q : subset) {
      if (!strictly_below(q, p)) continue;
      bool covered = true;
      for (std::size_t v : subset) {
        if (v != q && v != p && strictly_below(q, v) && strictly_below(v, p)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(q, p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> all_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string subset_to_string(const std::vector<int>& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(J[i] + 1);
  }
  s += '}';
  return s;
}

}  // namespace lma
