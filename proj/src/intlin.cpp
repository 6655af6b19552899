#include "lma/intlin.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace lma {

namespace {

void swap_rows(IMat& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void add_row(IMat& m, std::size_t dst, std::size_t src, long long k) {
  for (std::size_t c = 0; c < m[dst].size(); ++c) m[dst][c] += k * m[src][c];
}

void negate_row(IMat& m, std::size_t i) {
  for (auto& x : m[i]) x = -x;
}

}  // namespace

SmithForm smith_form(IMat a) {
  std::size_t n = a.size();
  IMat left(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) left[i][i] = 1;

  for (std::size_t t = 0; t < n; ++t) {
    // Find a nonzero pivot in the remaining block.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < n && !found; ++i)
      for (std::size_t j = t; j < n && !found; ++j)
        if (a[i][j] != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    swap_rows(a, t, pi);
    swap_rows(left, t, pi);
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);

    // Euclidean reduction until the pivot divides its row and column.
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        while (a[i][t] != 0) {
          long long q = a[i][t] / a[t][t];
          add_row(a, i, t, -q);
          add_row(left, i, t, -q);
          if (a[i][t] != 0) {
            swap_rows(a, t, i);
            swap_rows(left, t, i);
          }
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        while (a[t][j] != 0) {
          long long q = a[t][j] / a[t][t];
          for (std::size_t i = 0; i < n; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) {
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][j]);
            again = true;
          }
        }
      }
      if (!again) {
        // Pivot must divide every remaining entry for true SNF divisibility;
        // fold a violating row in and restart.
        for (std::size_t i = t + 1; i < n && !again; ++i)
          for (std::size_t j = t + 1; j < n && !again; ++j)
            if (a[i][j] % a[t][t] != 0) {
              add_row(a, t, i, 1);
              add_row(left, t, i, 1);
              again = true;
            }
      }
    }
    if (a[t][t] < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
  }

  SmithForm sf;
  sf.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) sf.diag[i] = a[i][i];
  sf.left = std::move(left);
  return sf;
}

long long det_integer(IMat a) {
  std::size_t n = a.size();
  long long sign = 1;
  // Fraction-free (Bareiss) elimination.
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

std::optional<std::vector<long long>> solve_integer(
    const IMat& a, const std::vector<long long>& b) {
  std::size_t n = a.size();
  long long d = det_integer(a);
  if (d == 0) throw std::invalid_argument("solve_integer: singular matrix");
  // Cramer with exact determinants; fine at rank <= 8.
  std::vector<long long> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    IMat m = a;
    for (std::size_t i = 0; i < n; ++i) m[i][j] = b[i];
    long long dj = det_integer(std::move(m));
    if (dj % d != 0) return std::nullopt;
    x[j] = dj / d;
  }
  return x;
}

}  // namespace lma
