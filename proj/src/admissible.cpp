#include "lma/admissible.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "lma/poset.hpp"

namespace lma {

AdmissibleSet compute_adm(const AffineWeyl& ctx, const BoundedWindow& window,
                          const Coweight& mu) {
  const RootDatum& rd = ctx.datum();
  const FiniteWeylGroup& g = ctx.group();
  if (!rd.is_dominant(mu)) throw DomainError("compute_adm: mu is not dominant");

  std::unordered_set<std::vector<int>, VectorHash> orbit;
  for (std::uint32_t wi = 0; wi < g.size(); ++wi)
    orbit.insert(g.act(WeylElement{wi}, mu).coords);

  AdmissibleSet adm;
  adm.mu = mu;
  adm.window = &window;
  adm.membership = Bitset(window.size());
  for (const auto& lam : orbit) {
    auto idx = window.index_of({Coweight{lam}, g.identity()});
    if (!idx)
      throw ResourceError("compute_adm: window does not contain t_lambda for an orbit member");
    adm.membership |= window.lower(*idx);
    adm.maxima.push_back(*idx);
  }
  std::sort(adm.maxima.begin(), adm.maxima.end());
  adm.membership.for_each_set([&](std::size_t i) { adm.elements.push_back(i); });
  return adm;
}

namespace {

AffineElement double_coset_max(const AffineWeyl& ctx, const std::vector<int>& Y,
                               AffineElement w) {
  long long len = ctx.length(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : Y) {
      AffineElement l = ctx.left_mult_simple(i + 1, w);
      if (long long ll = ctx.length(l); ll > len) {
        w = std::move(l);
        len = ll;
        changed = true;
      }
      AffineElement r = ctx.right_mult_simple(w, i + 1);
      if (long long rl = ctx.length(r); rl > len) {
        w = std::move(r);
        len = rl;
        changed = true;
      }
    }
  }
  return w;
}

}  // namespace

ParahoricProjection parahoric_project(const AffineWeyl& ctx, const AdmissibleSet& adm,
                                      const std::vector<int>& Y) {
  const BoundedWindow& win = *adm.window;
  ParahoricProjection proj;
  proj.Y = Y;

  std::unordered_map<AffineElement, std::vector<std::size_t>, AffineElementHash> classes;
  for (std::size_t i : adm.elements)
    classes[double_coset_max(ctx, Y, win.element(i))].push_back(i);

  for (auto& [key, members] : classes) {
    ParahoricClass c;
    c.key = key;
    std::sort(members.begin(), members.end());
    c.members = std::move(members);
    // Window order is by length, so the last member has maximal length; among
    // ties pick the smallest index for determinism.
    std::size_t best = c.members.back();
    for (std::size_t m : c.members)
      if (win.length(m) == win.length(c.members.back())) {
        best = m;
        break;
      }
    c.representative = best;
    proj.classes.push_back(std::move(c));
  }
  std::sort(proj.classes.begin(), proj.classes.end(),
            [&](const ParahoricClass& a, const ParahoricClass& b) {
              if (win.length(a.representative) != win.length(b.representative))
                return win.length(a.representative) < win.length(b.representative);
              return a.representative < b.representative;
            });

  // C <= C' iff some member of C is Bruhat-below some member of C'.
  auto below = [&](const ParahoricClass& a, const ParahoricClass& b) {
    for (std::size_t u : a.members)
      for (std::size_t w : b.members)
        if (win.leq(u, w)) return true;
    return false;
  };
  for (auto& c : proj.classes) {
    c.maximal = true;
    for (const auto& d : proj.classes) {
      if (&d != &c && below(c, d) && !below(d, c)) {
        c.maximal = false;
        break;
      }
    }
    if (c.maximal) ++proj.maxima_count;
  }
  return proj;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const AdmissibleSet& adm) {
  auto pairs = adm.window->covers(adm.elements);
  std::unordered_map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < adm.elements.size(); ++k) pos[adm.elements[k]] = k;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pairs.size());
  for (const auto& [u, w] : pairs) out.emplace_back(pos.at(u), pos.at(w));
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::ordered_json adm_report(const AffineWeyl& ctx, const AdmissibleSet& adm,
                                  const ParahoricProjection* proj) {
  const BoundedWindow& win = *adm.window;
  nlohmann::ordered_json j;
  j["type"] = ctx.datum().type().to_string();
  j["mu"] = adm.mu.coords;
  j["size"] = adm.elements.size();
  j["maxima"] = nlohmann::ordered_json::array();
  for (std::size_t i : adm.maxima) j["maxima"].push_back(ctx.to_string(win.element(i)));
  if (proj) {
    nlohmann::ordered_json cj;
    cj["Y"] = nlohmann::ordered_json::array();
    for (int i : proj->Y) cj["Y"].push_back(i + 1);
    cj["count"] = proj->classes.size();
    cj["maxima_count"] = proj->maxima_count;
    cj["list"] = nlohmann::ordered_json::array();
    for (const auto& c : proj->classes) {
      nlohmann::ordered_json e;
      e["representative"] = ctx.to_string(win.element(c.representative));
      e["size"] = c.members.size();
      e["maximal"] = c.maximal;
      cj["list"].push_back(std::move(e));
    }
    j["classes"] = std::move(cj);
  } else {
    j["classes"] = nullptr;
  }
  // length histogram, deterministic ascending order
  std::map<long long, std::size_t> hist;
  for (std::size_t i : adm.elements) ++hist[win.length(i)];
  nlohmann::ordered_json hj;
  for (const auto& [len, cnt] : hist) hj[std::to_string(len)] = cnt;
  j["length_histogram"] = std::move(hj);
  return j;
}

std::string adm_dot(const AffineWeyl& ctx, const AdmissibleSet& adm) {
  std::vector<std::string> labels;
  labels.reserve(adm.elements.size());
  for (std::size_t i : adm.elements) labels.push_back(ctx.to_string(adm.window->element(i)));
  return dot_export("adm", labels, hasse_covers(adm));
}

}  // namespace lma
