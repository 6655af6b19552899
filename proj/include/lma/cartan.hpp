#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lma {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Simple type label, e.g. A3, B2, E6. Rank bounds: A n>=1, B n>=2, C n>=2,
// D n>=3, E n in {6,7,8}, F n=4, G n=2.
struct CartanType {
  Family family;
  int rank;

  void validate() const;  // throws InputError on bad rank
  std::string to_string() const;
  static CartanType parse(const std::string& s);

  bool operator==(const CartanType&) const = default;
};

// Bourbaki-numbered Cartan matrix; entry [i][j] = <alpha_j, alpha_i^vee>.
// Diagonal 2, off-diagonal <= 0. Conventions per type are documented in the
// README (B_n: alpha_n short; C_n: alpha_n long; F4: alpha_3, alpha_4 short;
// G2: alpha_1 short).
std::vector<std::vector<int>> cartan_matrix(const CartanType& t);

// Closed forms, used as oracles against the enumerations.
std::uint64_t weyl_group_order(const CartanType& t);
std::size_t positive_root_count_closed_form(const CartanType& t);
std::uint64_t fundamental_group_order_closed_form(const CartanType& t);

}  // namespace lma
