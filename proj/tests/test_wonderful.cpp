#include <algorithm>
#include <set>

#include "doctest.h"
#include "lma/wonderful.hpp"
#include "support/oracles.hpp"

using namespace lma;

namespace {

Instance make(const char* t) {
  return Instance::make(CartanType::parse(t), Lattice::adjoint);
}

}  // namespace

TEST_CASE("preceq with J empty is the product order (x <= x') x (y' <= y)") {
  Instance inst = make("A2");
  const FiniteWeylGroup& g = *inst.group;
  for (std::uint32_t xp = 0; xp < g.size(); ++xp)
    for (std::uint32_t yp = 0; yp < g.size(); ++yp)
      for (std::uint32_t xq = 0; xq < g.size(); ++xq)
        for (std::uint32_t yq = 0; yq < g.size(); ++yq) {
          bool expect = g.bruhat_leq({xp}, {xq}) && g.bruhat_leq({yq}, {yp});
          CHECK(preceq(g, {}, {WeylElement{xp}, WeylElement{yp}},
                       {WeylElement{xq}, WeylElement{yq}}) == expect);
        }
}

TEST_CASE("SlicePlan matches the direct u-scan exhaustively") {
  for (const char* t : {"A2", "B2"}) {
    CAPTURE(t);
    Instance inst = make(t);
    const FiniteWeylGroup& g = *inst.group;
    for (const auto& J : all_subsets(g.rank())) {
      SlicePlan plan(g, J);
      for (std::size_t p = 0; p < plan.num_pairs(); ++p)
        for (std::size_t q = 0; q < plan.num_pairs(); ++q)
          CHECK(plan.leq(q, p) == preceq(g, J, plan.pair_at(p), plan.pair_at(q)));
    }
  }
}

TEST_CASE("preceq rejects non-minimal first components") {
  Instance inst = make("A2");
  WeylElement s1 = inst.group->simple(0);
  CHECK_THROWS_AS(preceq(*inst.group, {0}, {s1, s1}, {s1, s1}), DomainError);
  SlicePlan plan(*inst.group, {0});
  CHECK_THROWS_AS(plan.pair_index(s1, s1), DomainError);
}

TEST_CASE("slice formulas agree with their closure-criterion duals") {
  for (const char* t : {"A2", "B2"}) {
    Instance inst = make(t);
    const FiniteWeylGroup& g = *inst.group;
    for (const auto& J : all_subsets(g.rank())) {
      CHECK(b_closure_slice(g, J).members == b_closure_slice_dual(g, J).members);
      for (const auto& Y : all_subsets(g.rank()))
        CHECK(p_closure_slice(g, J, Y).members ==
              p_closure_slice_dual(g, J, Y).members);
    }
  }
}

TEST_CASE("p-slice degenerate parahorics") {
  Instance inst = make("B2");
  const FiniteWeylGroup& g = *inst.group;
  std::vector<int> all{0, 1};
  for (const auto& J : all_subsets(g.rank())) {
    // Y empty: the Borel case.
    CHECK(p_closure_slice(g, J, {}).members == b_closure_slice(g, J).members);
    // Y = S: min(W_S y) = e <= x always, so the slice is everything.
    SlicePlan plan(g, J);
    CHECK(p_closure_slice(g, J, all).members.size() == plan.num_pairs());
  }
}

TEST_CASE("Q_mu in A1 is {(e,e),(s,e),(s,s)}") {
  Instance inst = make("A1");
  Coweight mu = *inst.datum->fundamental_coweight(0);
  SliceSet q = q_mu(*inst.affine, mu);
  WeylElement e = inst.group->identity(), s = inst.group->simple(0);
  REQUIRE(q.members.size() == 3);
  CHECK(q.members[0] == WeylPair{e, e});
  CHECK(q.members[1] == WeylPair{s, e});
  CHECK(q.members[2] == WeylPair{s, s});
}

TEST_CASE("q_mu rejects non-minuscule input") {
  Instance inst = make("G2");
  CHECK_THROWS_AS(q_mu(*inst.affine, Coweight{{1, 0}}), DomainError);
  Instance a2 = make("A2");
  CHECK_THROWS_AS(q_mu(*a2.affine, Coweight{{1, 1}}), DomainError);
}

TEST_CASE("helam_map basics") {
  Instance inst = make("A2");
  const AffineWeyl& aff = *inst.affine;
  Coweight mu = *inst.datum->fundamental_coweight(0);
  WeylElement e = inst.group->identity();
  CHECK(helam_map(aff, mu, {e, e}) == aff.translation(mu));
  // (x, x) -> x t_mu x^{-1} = t_{x(mu)}
  for (std::uint32_t x = 0; x < inst.group->size(); ++x)
    CHECK(helam_map(aff, mu, {WeylElement{x}, WeylElement{x}}) ==
          aff.translation(inst.group->act({x}, mu)));
}

TEST_CASE("helam images over W^J x W_0 are distinct and fill the double coset") {
  Instance inst = make("A2");
  const AffineWeyl& aff = *inst.affine;
  Coweight mu = *inst.datum->fundamental_coweight(0);
  std::vector<int> J = inst.datum->type_map(mu);
  auto xs = inst.group->minimal_reps(J);
  std::set<std::pair<std::vector<int>, std::uint32_t>> images;
  for (WeylElement x : xs)
    for (std::uint32_t y = 0; y < inst.group->size(); ++y) {
      AffineElement im = helam_map(aff, mu, {x, WeylElement{y}});
      images.insert({im.lambda.coords, im.w.idx});
      // image lies in W_0 t_mu W_0: translation part is in the orbit of mu
      bool in_orbit = false;
      for (std::uint32_t w = 0; w < inst.group->size(); ++w)
        if (inst.group->act({w}, mu) == im.lambda) in_orbit = true;
      CHECK(in_orbit);
    }
  CHECK(images.size() == xs.size() * inst.group->size());  // 3 * 6 = 18
}

TEST_CASE("weyl_point_normalize") {
  Instance inst = make("B2");
  const FiniteWeylGroup& g = *inst.group;
  for (const auto& J : all_subsets(g.rank()))
    for (std::uint32_t c = 0; c < g.size(); ++c)
      for (std::uint32_t d = 0; d < g.size(); ++d) {
        OrbitLabel lab = weyl_point_normalize(g, {c}, {d}, J);
        CHECK(lab.J == J);
        CHECK(g.in_min_reps(lab.x, J));
        // consistency: c = x * c_J and y = d * c_J^{-1}
        auto [cJmin, cJ] = g.parabolic_decompose({c}, J);
        CHECK(lab.x == cJmin);
        CHECK(lab.y == g.mult({d}, g.inverse(cJ)));
        // J-minimal c passes through unchanged; normalization is idempotent
        OrbitLabel again = weyl_point_normalize(g, lab.x, lab.y, J);
        CHECK(again == lab);
      }
}

TEST_CASE("closure_leq is a partial order on rank-2 labels") {
  Instance inst = make("A2");
  const FiniteWeylGroup& g = *inst.group;
  std::vector<OrbitLabel> labels;
  for (const auto& J : all_subsets(g.rank()))
    for (WeylElement x : g.minimal_reps(J))
      for (std::uint32_t y = 0; y < g.size(); ++y)
        labels.push_back({J, x, {y}});
  for (const auto& a : labels) CHECK(closure_leq(g, a, a));
  for (const auto& a : labels)
    for (const auto& b : labels) {
      bool ab = closure_leq(g, a, b), ba = closure_leq(g, b, a);
      if (ab && ba) CHECK(a == b);
      if (!ab) continue;
      for (const auto& c : labels)
        if (closure_leq(g, b, c)) CHECK(closure_leq(g, a, c));
    }
}

TEST_CASE("closure_leq refuses non-minimal x") {
  Instance inst = make("A2");
  WeylElement s1 = inst.group->simple(0);
  OrbitLabel bad{{0}, s1, s1};
  CHECK_THROWS_AS(closure_leq(*inst.group, bad, bad), DomainError);
}

TEST_CASE("special fiber support in A1") {
  Instance inst = make("A1");
  Coweight mu = *inst.datum->fundamental_coweight(0);
  SpecialFiberSupport sup = special_fiber_support(*inst.affine, mu, {});
  WeylElement e = inst.group->identity(), s = inst.group->simple(0);
  REQUIRE(sup.slice.members.size() == 3);
  REQUIRE(sup.maxima.size() == 2);
  SlicePlan plan(*inst.group, inst.datum->type_map(mu));
  std::set<std::pair<std::uint32_t, std::uint32_t>> tops;
  for (std::size_t p : sup.maxima) {
    WeylPair pr = plan.pair_at(p);
    tops.insert({pr.first.idx, pr.second.idx});
  }
  CHECK(tops == std::set<std::pair<std::uint32_t, std::uint32_t>>{
                    {e.idx, e.idx}, {s.idx, s.idx}});
  // maxima map onto the orbit translations under the coset parametrization
  for (std::size_t p : sup.maxima) {
    AffineElement im = helam_map(*inst.affine, mu, plan.pair_at(p));
    CHECK(im.w == inst.group->identity());
  }
  CHECK(sup.report["check"] == "special_fiber_support");
}

TEST_CASE("verification reports pass on small instances") {
  Instance inst = make("A2");
  Coweight mu = *inst.datum->fundamental_coweight(0);
  long long bound = inst.datum->two_rho_pairing(mu) +
                    static_cast<long long>(inst.datum->positive_roots().size());
  OmegaClass cls = inst.affine->omega_component(inst.affine->translation(mu));
  BoundedWindow win = BoundedWindow::build(*inst.affine, bound, 5'000'000, &cls);
  auto iso = verify_helam_poset_iso(*inst.affine, win, mu);
  CHECK(iso["status"] == "pass");
  CHECK(iso["orientation"] == "as-stated");
  auto bij = verify_adm_bijection(*inst.affine, win, mu);
  CHECK(bij["status"] == "pass");
  for (const auto& J : all_subsets(2))
    for (const auto& Y : all_subsets(2))
      CHECK(verify_slice_formulas(*inst.group, J, Y)["status"] == "pass");
  auto cov = corollary_coverage_report(*inst.group, {1}, {0});
  CHECK((cov["status"] == "pass" || cov["status"] == "inconclusive"));
  CHECK(cov["coverage"].is_number());
}

TEST_CASE("slice_covers produces a valid Hasse diagram over a subset") {
  Instance inst = make("A2");
  SlicePlan plan(*inst.group, {});
  SliceSet slice = b_closure_slice(*inst.group, {});
  std::vector<std::size_t> subset;
  for (const auto& pr : slice.members)
    subset.push_back(plan.pair_index(pr.first, pr.second));
  auto covers = slice_covers(plan, subset);
  for (auto [q, p] : covers) {
    CHECK(plan.leq(q, p));
    CHECK(q != p);
    for (std::size_t m : subset)
      if (m != q && m != p && plan.leq(q, m) && plan.leq(m, p)) CHECK(false);
  }
}

TEST_CASE("all_subsets and subset_to_string") {
  auto subs = all_subsets(2);
  REQUIRE(subs.size() == 4);
  CHECK(subs[0].empty());
  CHECK(subs[1] == std::vector<int>{0});
  CHECK(subs[2] == std::vector<int>{1});
  CHECK(subs[3] == std::vector<int>{0, 1});
  CHECK(subset_to_string({}) == "{}");
  CHECK(subset_to_string({0, 2}) == "{1,3}");
}
