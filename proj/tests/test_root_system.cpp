#include "doctest.h"
#include "lma/root_datum.hpp"

using namespace lma;

TEST_CASE("positive root counts match closed forms across all families") {
  const char* types[] = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2",
                         "C3", "C4", "D3", "D4", "D5", "E6", "F4", "G2"};
  for (const char* t : types) {
    CAPTURE(t);
    CartanType ct = CartanType::parse(t);
    RootDatum rd = RootDatum::build(ct, Lattice::adjoint);
    CHECK(rd.positive_roots().size() == positive_root_count_closed_form(ct));
    CHECK(rd.fundamental_group_order() == fundamental_group_order_closed_form(ct));
  }
}

TEST_CASE("A2 positive roots are {a1, a2, a1+a2}") {
  RootDatum rd = RootDatum::build({Family::A, 2}, Lattice::adjoint);
  REQUIRE(rd.positive_roots().size() == 3);
  CHECK(rd.positive_roots()[0] == std::vector<int>{0, 1});
  CHECK(rd.positive_roots()[1] == std::vector<int>{1, 0});
  CHECK(rd.positive_roots()[2] == std::vector<int>{1, 1});
  CHECK(rd.highest_root() == std::vector<int>{1, 1});
}

TEST_CASE("G2 has 6 positive roots with highest root 3a1+2a2") {
  RootDatum rd = RootDatum::build({Family::G, 2}, Lattice::adjoint);
  CHECK(rd.positive_roots().size() == 6);
  CHECK(rd.highest_root() == std::vector<int>{3, 2});
}

TEST_CASE("Cartan matrices: diagonal 2, off-diagonal <= 0") {
  for (const char* t : {"A3", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"}) {
    RootDatum rd = RootDatum::build(CartanType::parse(t), Lattice::adjoint);
    for (int i = 0; i < rd.rank(); ++i)
      for (int j = 0; j < rd.rank(); ++j) {
        if (i == j)
          CHECK(rd.cartan()[i][j] == 2);
        else
          CHECK(rd.cartan()[i][j] <= 0);
      }
  }
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS_AS(CartanType::parse("Z9"), InputError);
  CHECK_THROWS_AS(CartanType::parse("B1").validate(), InputError);
  CHECK_THROWS_AS(CartanType::parse("D2").validate(), InputError);
  CHECK_THROWS_AS(CartanType::parse("E9").validate(), InputError);
  CHECK_THROWS_AS(CartanType::parse("F3").validate(), InputError);
  CHECK_THROWS_AS(CartanType::parse("G3").validate(), InputError);
  CHECK_THROWS_AS(CartanType::parse("A0").validate(), InputError);
}

TEST_CASE("pairing table for A2 fundamental coweight") {
  RootDatum rd = RootDatum::build({Family::A, 2}, Lattice::adjoint);
  Coweight w1 = *rd.fundamental_coweight(0);
  CHECK(rd.pairing(rd.zero(), rd.highest_root()) == 0);
  CHECK(rd.pairing(w1, {1, 0}) == 1);
  CHECK(rd.pairing(w1, {0, 1}) == 0);
  CHECK(rd.pairing(w1, {1, 1}) == 1);
  CHECK(rd.two_rho_pairing(w1) == 2);
}

TEST_CASE("two_rho_pairing: A1 and linearity") {
  RootDatum a1 = RootDatum::build({Family::A, 1}, Lattice::adjoint);
  CHECK(a1.two_rho_pairing(*a1.fundamental_coweight(0)) == 1);
  CHECK(a1.two_rho_pairing(a1.zero()) == 0);

  RootDatum b3 = RootDatum::build({Family::B, 3}, Lattice::adjoint);
  Coweight u{{1, 2, 0}}, v{{0, 1, 3}}, sum{{1, 3, 3}};
  CHECK(b3.two_rho_pairing(sum) == b3.two_rho_pairing(u) + b3.two_rho_pairing(v));
}

TEST_CASE("type_map I(lambda)") {
  RootDatum rd = RootDatum::build({Family::A, 2}, Lattice::adjoint);
  CHECK(rd.type_map(rd.zero()) == std::vector<int>{0, 1});
  CHECK(rd.type_map(*rd.fundamental_coweight(0)) == std::vector<int>{1});
  CHECK(rd.type_map(Coweight{{1, 1}}).empty());
  CHECK_THROWS_AS(rd.type_map(Coweight{{-1, 0}}), DomainError);
}

TEST_CASE("minuscule classification per type") {
  auto names = [](const RootDatum& rd) {
    std::vector<std::vector<int>> out;
    for (const auto& m : rd.list_minuscule()) out.push_back(m.coords);
    return out;
  };
  RootDatum a3 = RootDatum::build({Family::A, 3}, Lattice::adjoint);
  CHECK(names(a3) == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  RootDatum c3 = RootDatum::build({Family::C, 3}, Lattice::adjoint);
  CHECK(names(c3) == std::vector<std::vector<int>>{{0, 0, 1}});
  RootDatum b3 = RootDatum::build({Family::B, 3}, Lattice::adjoint);
  CHECK(names(b3) == std::vector<std::vector<int>>{{1, 0, 0}});
  RootDatum g2 = RootDatum::build({Family::G, 2}, Lattice::adjoint);
  CHECK(g2.list_minuscule().empty());

  CHECK(a3.is_minuscule(a3.zero()));
  for (const auto& mu : a3.list_minuscule()) {
    CHECK(a3.is_minuscule(mu));
    CHECK(a3.pairing(mu, a3.highest_root()) == 1);
    for (const auto& beta : a3.positive_roots()) {
      long long p = a3.pairing(mu, beta);
      CHECK(p >= 0);
      CHECK(p <= 1);
    }
  }
}

TEST_CASE("simply connected lattice drops non-coroot minuscules") {
  RootDatum sc = RootDatum::build({Family::A, 2}, Lattice::simply_connected);
  CHECK(sc.list_minuscule().empty());
  CHECK(sc.fundamental_group_order() == 1);
  // theta^vee = alpha1^vee + alpha2^vee is in the lattice and pairs as theta.
  Coweight theta_v = sc.coroot_as_coweight(sc.highest_root_index());
  CHECK(sc.pairing(theta_v, sc.highest_root()) == 2);
}

TEST_CASE("coroot pairings: <beta^vee, beta> = 2") {
  for (const char* t : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    RootDatum rd = RootDatum::build(CartanType::parse(t), Lattice::adjoint);
    for (std::size_t k = 0; k < rd.positive_roots().size(); ++k)
      CHECK(rd.coroot_pairing_with_root(k, rd.positive_roots()[k]) == 2);
  }
}

TEST_CASE("dominant_coweights_up_to respects the bound and dominance") {
  RootDatum rd = RootDatum::build({Family::B, 2}, Lattice::adjoint);
  auto all = rd.dominant_coweights_up_to(10);
  for (const auto& lam : all) {
    CHECK(rd.is_dominant(lam));
    CHECK(rd.two_rho_pairing(lam) <= 10);
  }
  // Count cross-checked by scanning a box directly.
  std::size_t expected = 0;
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b)
      if (rd.two_rho_pairing(Coweight{{a, b}}) <= 10) ++expected;
  CHECK(all.size() == expected);
}

TEST_CASE("JSON export uses the fixed field names") {
  RootDatum rd = RootDatum::build({Family::A, 3}, Lattice::adjoint);
  auto j = rd.to_json();
  CHECK(j["type"] == "A3");
  CHECK(j["lattice"] == "adjoint");
  CHECK(j["positive_roots"].size() == 6);
  CHECK(j["cartan"].size() == 3);
}
