#include "lma/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lma/intlin.hpp"

namespace lma {

std::string lattice_name(Lattice l) {
  return l == Lattice::adjoint ? "adjoint" : "simply_connected";
}

Lattice parse_lattice(const std::string& s) {
  if (s == "adjoint") return Lattice::adjoint;
  if (s == "simply_connected" || s == "sc") return Lattice::simply_connected;
  throw InputError("bad lattice '" + s + "'");
}

namespace {

// d_i proportional to (alpha_i, alpha_i), minimal positive integers with
// d_i * c[i][j] = d_j * c[j][i].
std::vector<int> length_scale(const std::vector<std::vector<int>>& c) {
  int n = static_cast<int>(c.size());
  std::vector<long long> num(n, 0), den(n, 1);
  num[0] = 1;
  // Propagate over the (connected) Dynkin graph.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0 || num[j] != 0) continue;
      // d_j = d_i * c[i][j] / c[j][i]
      num[j] = num[i] * c[i][j];
      den[j] = den[i] * c[j][i];
      if (num[j] < 0) { num[j] = -num[j]; }
      if (den[j] < 0) { den[j] = -den[j]; }
      long long g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      stack.push_back(j);
    }
  }
  long long l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  std::vector<long long> d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (l / den[i]);
  long long g = 0;
  for (auto x : d) g = std::gcd(g, x);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(d[i] / g);
  return out;
}

}  // namespace

RootDatum RootDatum::build(const CartanType& type, Lattice lattice) {
  type.validate();
  RootDatum rd;
  rd.type_ = type;
  rd.lattice_ = lattice;
  rd.cartan_ = cartan_matrix(type);
  int n = type.rank;

  // Positive roots by root-string closure over the simple roots.
  std::map<std::vector<int>, bool> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen[e] = true;
    frontier.push_back(e);
  }
  auto pair_with_simple_coroot = [&](const std::vector<int>& beta, int i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += static_cast<long long>(rd.cartan_[i][j]) * beta[j];
    return s;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        long long r = pair_with_simple_coroot(beta, i);
        // q = length of the downward alpha_i-string through beta
        int q = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !seen.count(down)) break;
          ++q;
        }
        if (q - r > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!seen.count(up)) {
            seen[up] = true;
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  for (auto& [v, _] : seen) rd.roots_.push_back(v);
  std::sort(rd.roots_.begin(), rd.roots_.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (const auto& beta : rd.roots_)
    rd.heights_.push_back(std::accumulate(beta.begin(), beta.end(), 0));
  rd.highest_ = rd.roots_.size() - 1;

  rd.dvec_ = length_scale(rd.cartan_);

  // Coroot of beta = sum c_i alpha_i:  beta^vee = sum (c_i d_i / d_beta) alpha_i^vee.
  for (const auto& beta : rd.roots_) {
    long long bb = 0;  // (beta, beta) with (alpha_i, alpha_j) = d_i c[i][j]
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        bb += static_cast<long long>(beta[i]) * beta[j] * rd.dvec_[i] * rd.cartan_[i][j];
    long long dbeta = bb / 2;
    std::vector<int> cv(n);
    for (int i = 0; i < n; ++i) {
      long long x = static_cast<long long>(beta[i]) * rd.dvec_[i];
      if (x % dbeta != 0) throw std::logic_error("coroot not integral");
      cv[i] = static_cast<int>(x / dbeta);
    }
    rd.coroots_.push_back(std::move(cv));
  }

  // <.,2rho> pairing vector.
  rd.rho2_.assign(n, 0);
  for (const auto& beta : rd.roots_) {
    if (lattice == Lattice::adjoint) {
      for (int j = 0; j < n; ++j) rd.rho2_[j] += beta[j];
    } else {
      for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<long long>(rd.cartan_[i][j]) * beta[j];
        rd.rho2_[i] += s;
      }
    }
  }

  for (std::size_t k = 0; k < rd.roots_.size(); ++k)
    rd.lookup_.emplace_back(rd.roots_[k], static_cast<int>(k));
  std::sort(rd.lookup_.begin(), rd.lookup_.end());
  return rd;
}

int RootDatum::root_lookup(const std::vector<int>& v) const {
  auto find = [&](const std::vector<int>& key) -> int {
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), key,
                               [](const auto& p, const auto& k) { return p.first < k; });
    if (it != lookup_.end() && it->first == key) return it->second;
    return -1;
  };
  int k = find(v);
  if (k >= 0) return k + 1;
  std::vector<int> neg(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  k = find(neg);
  if (k >= 0) return -(k + 1);
  return 0;
}

long long RootDatum::pairing(const Coweight& lam, const std::vector<int>& root) const {
  int n = rank();
  long long s = 0;
  if (lattice_ == Lattice::adjoint) {
    for (int j = 0; j < n; ++j) s += static_cast<long long>(lam.coords[j]) * root[j];
  } else {
    for (int i = 0; i < n; ++i) {
      long long r = 0;
      for (int j = 0; j < n; ++j) r += static_cast<long long>(cartan_[i][j]) * root[j];
      s += static_cast<long long>(lam.coords[i]) * r;
    }
  }
  return s;
}

long long RootDatum::simple_pairing(const Coweight& lam, int i) const {
  std::vector<int> e(rank(), 0);
  e[i] = 1;
  return pairing(lam, e);
}

long long RootDatum::coroot_pairing_with_root(std::size_t k, const std::vector<int>& root) const {
  // <beta_k^vee, root> with beta_k^vee in simple-coroot coords.
  long long s = 0;
  int n = rank();
  for (int i = 0; i < n; ++i) {
    long long r = 0;
    for (int j = 0; j < n; ++j) r += static_cast<long long>(cartan_[i][j]) * root[j];
    s += static_cast<long long>(coroots_[k][i]) * r;
  }
  return s;
}

long long RootDatum::two_rho_pairing(const Coweight& lam) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i) s += rho2_[i] * lam.coords[i];
  return s;
}

bool RootDatum::is_dominant(const Coweight& lam) const {
  for (int i = 0; i < rank(); ++i)
    if (simple_pairing(lam, i) < 0) return false;
  return true;
}

bool RootDatum::is_zero(const Coweight& lam) const {
  return std::all_of(lam.coords.begin(), lam.coords.end(), [](int x) { return x == 0; });
}

std::vector<int> RootDatum::type_map(const Coweight& lam) const {
  if (!is_dominant(lam)) throw DomainError("type_map: coweight is not dominant");
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    if (simple_pairing(lam, i) == 0) out.push_back(i);
  return out;
}

bool RootDatum::is_minuscule(const Coweight& lam) const {
  for (const auto& beta : roots_) {
    long long p = pairing(lam, beta);
    if (p < -1 || p > 1) return false;
  }
  return true;
}

std::optional<Coweight> RootDatum::fundamental_coweight(int i) const {
  int n = rank();
  if (lattice_ == Lattice::adjoint) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    return Coweight{c};
  }
  // omega_i^vee in coroot coords: solve x^T C = e_i, i.e. C^T x = e_i.
  IMat ct(n, std::vector<long long>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) ct[r][c] = cartan_[c][r];
  std::vector<long long> b(n, 0);
  b[i] = 1;
  auto x = solve_integer(ct, b);
  if (!x) return std::nullopt;
  std::vector<int> c(n);
  for (int j = 0; j < n; ++j) c[j] = static_cast<int>((*x)[j]);
  return Coweight{c};
}

std::vector<Coweight> RootDatum::dominant_coweights_up_to(long long bound) const {
  int n = rank();
  std::vector<long long> m(n, 0);  // <omega_i^vee, 2rho> = column sums of roots
  for (const auto& beta : roots_)
    for (int j = 0; j < n; ++j) m[j] += beta[j];

  IMat ct;
  if (lattice_ == Lattice::simply_connected) {
    ct.assign(n, std::vector<long long>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) ct[r][c] = cartan_[c][r];
  }

  std::vector<Coweight> out;
  std::vector<int> a(n, 0);
  std::function<void(int, long long)> rec = [&](int i, long long used) {
    if (i == n) {
      if (lattice_ == Lattice::adjoint) {
        out.push_back(Coweight{a});
      } else {
        std::vector<long long> b(a.begin(), a.end());
        if (auto x = solve_integer(ct, b)) {
          std::vector<int> c(n);
          for (int j = 0; j < n; ++j) c[j] = static_cast<int>((*x)[j]);
          out.push_back(Coweight{std::move(c)});
        }
      }
      return;
    }
    for (int v = 0;; ++v) {
      long long u2 = used + static_cast<long long>(v) * m[i];
      if (u2 > bound) break;
      a[i] = v;
      rec(i + 1, u2);
    }
    a[i] = 0;
  };
  rec(0, 0);
  return out;
}

Coweight RootDatum::coroot_as_coweight(std::size_t k) const {
  int n = rank();
  std::vector<int> c(n);
  if (lattice_ == Lattice::simply_connected) {
    c.assign(coroots_[k].begin(), coroots_[k].end());
  } else {
    // alpha_i^vee has fundamental-coweight coords = row i of the Cartan matrix.
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int i = 0; i < n; ++i) s += static_cast<long long>(coroots_[k][i]) * cartan_[i][j];
      c[j] = static_cast<int>(s);
    }
  }
  return Coweight{c};
}

std::vector<Coweight> RootDatum::list_minuscule() const {
  std::vector<Coweight> out;
  const auto& theta = highest_root();
  for (int i = 0; i < rank(); ++i) {
    if (theta[i] != 1) continue;
    auto w = fundamental_coweight(i);
    if (w) out.push_back(*w);
  }
  return out;
}

Coweight RootDatum::apply_simple_reflection(int i, const Coweight& lam) const {
  long long p = simple_pairing(lam, i);
  Coweight out = lam;
  if (lattice_ == Lattice::adjoint) {
    for (int j = 0; j < rank(); ++j)
      out.coords[j] = static_cast<int>(out.coords[j] - p * cartan_[i][j]);
  } else {
    out.coords[i] = static_cast<int>(out.coords[i] - p);
  }
  return out;
}

std::vector<std::vector<int>> RootDatum::simple_reflection_matrix(int i) const {
  int n = rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int r = 0; r < n; ++r) m[r][r] = 1;
  if (lattice_ == Lattice::adjoint) {
    // (s_i lam)_j = lam_j - lam_i c[i][j]
    for (int j = 0; j < n; ++j) m[j][i] -= cartan_[i][j];
  } else {
    // (s_i lam)_i = lam_i - sum_k lam_k c[k][i]
    for (int k = 0; k < n; ++k) m[i][k] -= cartan_[k][i];
  }
  return m;
}

std::uint64_t RootDatum::fundamental_group_order() const {
  if (lattice_ == Lattice::simply_connected) return 1;
  IMat c(rank(), std::vector<long long>(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) c[i][j] = cartan_[i][j];
  long long d = det_integer(std::move(c));
  return static_cast<std::uint64_t>(d < 0 ? -d : d);
}

nlohmann::ordered_json RootDatum::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = type_.to_string();
  j["lattice"] = lattice_name(lattice_);
  j["positive_roots"] = roots_;
  j["cartan"] = cartan_;
  return j;
}

}  // namespace lma
