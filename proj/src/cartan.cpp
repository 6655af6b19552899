#include "lma/cartan.hpp"

#include <cctype>

#include "lma/util.hpp"

namespace lma {

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank == 6 || rank == 7 || rank == 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw InputError("invalid rank " + std::to_string(rank) + " for family " +
                     std::string(1, static_cast<char>(family)));
}

std::string CartanType::to_string() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw InputError("bad Cartan type '" + s + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw InputError("bad Cartan type '" + s + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("bad Cartan type '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw InputError("bad Cartan type '" + s + "'");
  }
  CartanType t{static_cast<Family>(f), rank};
  t.validate();
  return t;
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  t.validate();
  int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7-8), branch node 2 attached to 4.
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::F:
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      c[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      c[0][1] = -3;  // alpha_1 short
      c[1][0] = -1;
      break;
  }
  return c;
}

std::uint64_t weyl_group_order(const CartanType& t) {
  t.validate();
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  int n = t.rank;
  switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t(1) << n) * fact(n);
    case Family::D: return (std::uint64_t(1) << (n - 1)) * fact(n);
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::size_t positive_root_count_closed_form(const CartanType& t) {
  t.validate();
  std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E:
      if (n == 6) return 36;
      if (n == 7) return 63;
      return 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

std::uint64_t fundamental_group_order_closed_form(const CartanType& t) {
  t.validate();
  switch (t.family) {
    case Family::A: return static_cast<std::uint64_t>(t.rank + 1);
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E:
      if (t.rank == 6) return 3;
      if (t.rank == 7) return 2;
      return 1;
    case Family::F:
    case Family::G: return 1;
  }
  return 1;
}

}  // namespace lma
