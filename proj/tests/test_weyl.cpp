#include "doctest.h"
#include "lma/weyl.hpp"
#include "support/oracles.hpp"

using namespace lma;

namespace {

struct Fixture {
  RootDatum rd;
  FiniteWeylGroup g;
  explicit Fixture(const char* t, Lattice l = Lattice::adjoint)
      : rd(RootDatum::build(CartanType::parse(t), l)), g(FiniteWeylGroup::generate(rd)) {}
};

}  // namespace

TEST_CASE("group orders match closed forms") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(t);
    Fixture f(t);
    CHECK(f.g.size() == weyl_group_order(f.rd.type()));
  }
}

TEST_CASE("A2 lengths along the enumeration are (0,1,1,2,2,3)") {
  Fixture f("A2");
  std::vector<int> lens;
  for (std::uint32_t i = 0; i < f.g.size(); ++i) lens.push_back(f.g.length({i}));
  CHECK(lens == std::vector<int>{0, 1, 1, 2, 2, 3});
}

TEST_CASE("B2 longest element has length 4") {
  Fixture f("B2");
  CHECK(f.g.length(f.g.longest_element()) == 4);
}

TEST_CASE("length = inversion count, via independent root action") {
  for (const char* t : {"A3", "B3", "G2"}) {
    Fixture f(t);
    for (std::uint32_t i = 0; i < f.g.size(); ++i)
      CHECK(f.g.length({i}) == oracles::finite_length_by_inversions(f.g, {i}));
  }
}

TEST_CASE("generation budget produces a resource error") {
  RootDatum rd = RootDatum::build({Family::D, 4}, Lattice::adjoint);
  CHECK_THROWS_AS(FiniteWeylGroup::generate(rd, 100), ResourceError);
}

TEST_CASE("Bruhat order agrees with the subword oracle exhaustively") {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(t);
    Fixture f(t);
    for (std::uint32_t w = 0; w < f.g.size(); ++w) {
      Bitset expect = oracles::bruhat_lower_subword(f.g, {w});
      CHECK(f.g.bruhat_row({w}) == expect);
    }
  }
}

TEST_CASE("A2 Bruhat spot checks") {
  Fixture f("A2");
  WeylElement s1 = f.g.simple(0), s2 = f.g.simple(1);
  WeylElement s1s2 = f.g.mult(s1, s2), s2s1 = f.g.mult(s2, s1);
  WeylElement w0 = f.g.longest_element();
  for (std::uint32_t w = 0; w < f.g.size(); ++w) CHECK(f.g.bruhat_leq(f.g.identity(), {w}));
  CHECK(f.g.bruhat_leq(s1, w0));
  CHECK(!f.g.bruhat_leq(s1s2, s2s1));
  CHECK(!f.g.bruhat_leq(s2s1, s1s2));
}

TEST_CASE("min_coset_rep") {
  Fixture f("A2");
  WeylElement s1 = f.g.simple(0), s2 = f.g.simple(1);
  WeylElement s1s2 = f.g.mult(s1, s2);
  CHECK(f.g.min_coset_rep({}, s1s2) == s1s2);
  CHECK(f.g.min_coset_rep({0}, s1s2) == s2);
  CHECK(f.g.min_coset_rep({0}, s1) == f.g.identity());

  // Uniqueness and length additivity over every coset in B2.
  Fixture b("B2");
  for (const auto& Y : {std::vector<int>{}, std::vector<int>{0}, std::vector<int>{1},
                        std::vector<int>{0, 1}}) {
    auto wy = b.g.subgroup_elements(Y);
    for (std::uint32_t y = 0; y < b.g.size(); ++y) {
      WeylElement m = b.g.min_coset_rep(Y, {y});
      CHECK(b.g.bruhat_leq(m, {y}));
      for (WeylElement a : wy) {
        WeylElement am = b.g.mult(a, m);
        CHECK(b.g.length(am) == b.g.length(a) + b.g.length(m));
      }
    }
  }
}

TEST_CASE("minimal_reps") {
  Fixture f("A2");
  CHECK(f.g.minimal_reps({0, 1}) == std::vector<WeylElement>{f.g.identity()});
  CHECK(f.g.minimal_reps({}).size() == f.g.size());
  auto reps = f.g.minimal_reps({0});
  REQUIRE(reps.size() == 3);
  CHECK(f.g.to_string(reps[0]) == "e");
  CHECK(f.g.to_string(reps[1]) == "s2");
  CHECK(f.g.to_string(reps[2]) == "s1.s2");
}

TEST_CASE("parabolic_decompose") {
  Fixture f("A2");
  WeylElement s1 = f.g.simple(0), s2 = f.g.simple(1);
  auto [a, b] = f.g.parabolic_decompose(f.g.mult(s2, s1), {0});
  CHECK(a == s2);
  CHECK(b == s1);

  // Round-trip + length additivity, exhaustively in B3 over all J.
  Fixture f3("B3");
  for (const auto& J : {std::vector<int>{}, std::vector<int>{0}, std::vector<int>{1, 2},
                        std::vector<int>{0, 1, 2}}) {
    for (std::uint32_t w = 0; w < f3.g.size(); ++w) {
      auto [wj_min, wj] = f3.g.parabolic_decompose({w}, J);
      CHECK(f3.g.in_min_reps(wj_min, J));
      CHECK(f3.g.mult(wj_min, wj) == WeylElement{w});
      CHECK(f3.g.length(wj_min) + f3.g.length(wj) == f3.g.length({w}));
    }
  }
}

TEST_CASE("longest elements") {
  Fixture f("A2");
  CHECK(f.g.longest_element(std::vector<int>{}) == f.g.identity());
  CHECK(f.g.to_string(f.g.longest_element(std::vector<int>{0, 1})) == "s1.s2.s1");
  Fixture a1("A1");
  CHECK(a1.g.to_string(a1.g.longest_element()) == "s1");
}

TEST_CASE("w_S is an involution and conjugation permutes the simples") {
  for (const char* t : {"A3", "B3", "D4", "G2"}) {
    Fixture f(t);
    WeylElement w0 = f.g.longest_element();
    CHECK(f.g.mult(w0, w0) == f.g.identity());
    for (int i = 0; i < f.g.rank(); ++i) {
      WeylElement c = f.g.mult(f.g.mult(w0, f.g.simple(i)), w0);
      CHECK(f.g.length(c) == 1);
    }
  }
}

TEST_CASE("serialization round-trips") {
  Fixture f("B3");
  for (std::uint32_t w = 0; w < f.g.size(); ++w) {
    auto parsed = f.g.parse(f.g.to_string({w}));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == WeylElement{w});
  }
  CHECK(f.g.to_string(f.g.identity()) == "e");
  CHECK(!f.g.parse("s9").has_value());
}
