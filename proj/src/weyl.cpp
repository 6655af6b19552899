#include "lma/weyl.hpp"

#include <algorithm>
#include <unordered_map>

namespace lma {

namespace {

struct RimgHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : v)
      h = (h ^ static_cast<std::size_t>(static_cast<std::uint32_t>(x))) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

FiniteWeylGroup FiniteWeylGroup::generate(const RootDatum& datum, std::uint64_t budget) {
  std::uint64_t order = weyl_group_order(datum.type());
  if (order > budget)
    throw ResourceError("Weyl group order " + std::to_string(order) +
                        " exceeds element budget " + std::to_string(budget));

  FiniteWeylGroup g;
  g.datum_ = &datum;
  g.rank_ = datum.rank();
  g.nroots_ = datum.positive_roots().size();
  int n = g.rank_;
  std::size_t nr = g.nroots_;

  // Signed root permutation of each simple reflection.
  std::vector<std::vector<std::int32_t>> srimg(n, std::vector<std::int32_t>(nr));
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < nr; ++k) {
      std::vector<int> v = datum.positive_roots()[k];
      long long p = 0;
      for (int j = 0; j < n; ++j) p += static_cast<long long>(datum.cartan()[i][j]) * v[j];
      v[i] -= static_cast<int>(p);
      int s = datum.root_lookup(v);
      srimg[i][k] = s;
    }
  }
  // Lattice action matrices of the simple reflections.
  std::vector<std::vector<std::vector<int>>> smat(n);
  for (int i = 0; i < n; ++i) smat[i] = datum.simple_reflection_matrix(i);

  std::unordered_map<std::vector<std::int32_t>, std::uint32_t, RimgHash> index;
  auto reserve = static_cast<std::size_t>(order);
  index.reserve(reserve * 2);
  g.rimg_.reserve(reserve * nr);
  g.cmat_.reserve(reserve * n * n);

  // Identity.
  {
    std::vector<std::int32_t> id(nr);
    for (std::size_t k = 0; k < nr; ++k) id[k] = static_cast<std::int32_t>(k + 1);
    index.emplace(id, 0);
    g.rimg_.insert(g.rimg_.end(), id.begin(), id.end());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g.cmat_.push_back(r == c ? 1 : 0);
    g.length_.push_back(0);
    g.word_.push_back({});
  }
  g.n_ = 1;
  g.right_.assign(reserve * n, Idx{});

  std::vector<std::uint32_t> level{0};
  while (!level.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t u : level) {
      for (int i = 0; i < n; ++i) {
        // v = u * s_i ; v(beta_k) = u(s_i beta_k)
        std::vector<std::int32_t> key(nr);
        for (std::size_t k = 0; k < nr; ++k) {
          std::int32_t si = srimg[i][k];
          std::int32_t m = (si > 0 ? si : -si) - 1;
          std::int32_t img = g.rimg_[static_cast<std::size_t>(u) * nr + static_cast<std::size_t>(m)];
          key[k] = si > 0 ? img : -img;
        }
        auto it = index.find(key);
        std::uint32_t v;
        if (it == index.end()) {
          v = static_cast<std::uint32_t>(g.n_++);
          g.rimg_.insert(g.rimg_.end(), key.begin(), key.end());
          index.emplace(std::move(key), v);
          // cmat_v = cmat_u * smat_i
          g.cmat_.resize(g.n_ * n * n);
          const auto* cu = &g.cmat_[static_cast<std::size_t>(u) * n * n];
          auto* cv = &g.cmat_[static_cast<std::size_t>(v) * n * n];
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
              long long s = 0;
              for (int t = 0; t < n; ++t) s += static_cast<long long>(cu[r * n + t]) * smat[i][t][c];
              cv[r * n + c] = static_cast<std::int32_t>(s);
            }
          g.length_.push_back(g.length_[u] + 1);
          auto w = g.word_[u];
          w.push_back(static_cast<std::uint8_t>(i));
          g.word_.push_back(std::move(w));
          next.push_back(v);
        } else {
          v = it->second;
        }
        g.right_[static_cast<std::size_t>(u) * n + i].v = v;
      }
    }
    level = std::move(next);
  }

  if (g.n_ != order)
    throw std::logic_error("Weyl BFS produced " + std::to_string(g.n_) +
                           " elements, expected " + std::to_string(order));

  g.simple_.resize(n);
  for (int i = 0; i < n; ++i) g.simple_[i] = g.right_[static_cast<std::size_t>(0) * n + i].val();

  // Left multiplication table: (s_i u)(beta_k) = s_i(u beta_k).
  g.left_.assign(g.n_ * n, Idx{});
  std::vector<std::int32_t> key(nr);
  for (std::uint32_t u = 0; u < g.n_; ++u) {
    for (int i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < nr; ++k) {
        std::int32_t img = g.rimg_[static_cast<std::size_t>(u) * nr + k];
        std::int32_t m = (img > 0 ? img : -img) - 1;
        std::int32_t si = srimg[i][static_cast<std::size_t>(m)];
        key[k] = img > 0 ? si : -si;
      }
      g.left_[static_cast<std::size_t>(u) * n + i].v = index.at(key);
    }
  }

  // Inverses via reversed words.
  g.inverse_.resize(g.n_);
  for (std::uint32_t u = 0; u < g.n_; ++u) {
    WeylElement w{0};
    const auto& wu = g.word_[u];
    for (auto it = wu.rbegin(); it != wu.rend(); ++it) w = g.right_mult(w, *it);
    g.inverse_[u] = w.idx;
  }

  g.longest_ = WeylElement{static_cast<std::uint32_t>(g.n_ - 1)};
  g.bruhat_rows_.resize(g.n_);
  g.bruhat_built_.assign(g.n_, 0);
  return g;
}

WeylElement FiniteWeylGroup::mult(WeylElement a, WeylElement b) const {
  WeylElement w = a;
  for (auto i : word_[b.idx]) w = right_mult(w, i);
  return w;
}

Coweight FiniteWeylGroup::act(WeylElement w, const Coweight& lam) const {
  int n = rank_;
  const auto* m = &cmat_[static_cast<std::size_t>(w.idx) * n * n];
  Coweight out;
  out.coords.resize(n);
  for (int r = 0; r < n; ++r) {
    long long s = 0;
    for (int c = 0; c < n; ++c) s += static_cast<long long>(m[r * n + c]) * lam.coords[c];
    out.coords[r] = static_cast<int>(s);
  }
  return out;
}

std::vector<int> FiniteWeylGroup::act_root(WeylElement w, std::vector<int> v) const {
  const auto& wd = word_[w.idx];
  const auto& cart = datum_->cartan();
  int n = rank_;
  for (auto it = wd.rbegin(); it != wd.rend(); ++it) {
    int i = *it;
    long long p = 0;
    for (int j = 0; j < n; ++j) p += static_cast<long long>(cart[i][j]) * v[j];
    v[i] -= static_cast<int>(p);
  }
  return v;
}

WeylElement FiniteWeylGroup::reflection(std::size_t k) const {
  // Scan for the element whose root images match s_{beta_k}.
  std::vector<std::int32_t> key(nroots_);
  for (std::size_t m = 0; m < nroots_; ++m) {
    std::vector<int> v = datum_->positive_roots()[m];
    long long p = datum_->coroot_pairing_with_root(k, v);
    for (int j = 0; j < rank_; ++j)
      v[j] -= static_cast<int>(p) * datum_->positive_roots()[k][j];
    key[m] = datum_->root_lookup(v);
  }
  for (std::uint32_t u = 0; u < n_; ++u) {
    if (std::equal(key.begin(), key.end(), rimg_.begin() + static_cast<std::ptrdiff_t>(u * nroots_)))
      return {u};
  }
  throw std::logic_error("reflection not found");
}

const Bitset& FiniteWeylGroup::bruhat_row_locked(std::uint32_t w) const {
  if (bruhat_built_[w]) return bruhat_rows_[w];
  // Build the chain of left-descent parents bottom-up.
  std::vector<std::uint32_t> chain;
  std::uint32_t cur = w;
  while (!bruhat_built_[cur]) {
    chain.push_back(cur);
    if (length_[cur] == 0) break;
    int s = -1;
    for (int i = 0; i < rank_; ++i)
      if (length_[left_[static_cast<std::size_t>(cur) * rank_ + i].val()] < length_[cur]) {
        s = i;
        break;
      }
    cur = left_[static_cast<std::size_t>(cur) * rank_ + s].val();
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    std::uint32_t x = *it;
    Bitset row(n_);
    if (length_[x] == 0) {
      row.set(0);
    } else {
      int s = -1;
      for (int i = 0; i < rank_; ++i)
        if (length_[left_[static_cast<std::size_t>(x) * rank_ + i].val()] < length_[x]) {
          s = i;
          break;
        }
      std::uint32_t sx = left_[static_cast<std::size_t>(x) * rank_ + s].val();
      const Bitset& parent = bruhat_rows_[sx];
      for (std::uint32_t u = 0; u < n_; ++u) {
        std::uint32_t su = left_[static_cast<std::size_t>(u) * rank_ + s].val();
        bool in = length_[su] < length_[u] ? parent.test(su) : parent.test(u);
        if (in) row.set(u);
      }
    }
    bruhat_rows_[x] = std::move(row);
    bruhat_built_[x] = 1;
  }
  return bruhat_rows_[w];
}

const Bitset& FiniteWeylGroup::bruhat_row(WeylElement w) const {
  std::lock_guard<std::mutex> lock(*bruhat_mutex_);
  return bruhat_row_locked(w.idx);
}

bool FiniteWeylGroup::bruhat_leq(WeylElement u, WeylElement w) const {
  if (u == w) return true;
  if (length_[u.idx] >= length_[w.idx]) return false;
  return bruhat_row(w).test(u.idx);
}

WeylElement FiniteWeylGroup::longest_element(const std::vector<int>& J) const {
  WeylElement w = identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (!right_descent(w, j)) {
        w = right_mult(w, j);
        moved = true;
        break;
      }
    }
  }
  return w;
}

std::vector<WeylElement> FiniteWeylGroup::subgroup_elements(const std::vector<int>& J) const {
  std::vector<std::uint32_t> out{0};
  Bitset seen(n_);
  seen.set(0);
  std::size_t head = 0;
  while (head < out.size()) {
    WeylElement u{out[head++]};
    for (int j : J) {
      WeylElement v = right_mult(u, j);
      if (!seen.test(v.idx)) {
        seen.set(v.idx);
        out.push_back(v.idx);
      }
    }
  }
  std::sort(out.begin(), out.end());
  std::vector<WeylElement> res;
  res.reserve(out.size());
  for (auto i : out) res.push_back({i});
  return res;
}

std::vector<WeylElement> FiniteWeylGroup::minimal_reps(const std::vector<int>& J) const {
  std::vector<WeylElement> out;
  for (std::uint32_t u = 0; u < n_; ++u) {
    WeylElement w{u};
    if (in_min_reps(w, J)) out.push_back(w);
  }
  return out;
}

bool FiniteWeylGroup::in_min_reps(WeylElement w, const std::vector<int>& J) const {
  for (int j : J)
    if (right_descent(w, j)) return false;
  return true;
}

WeylElement FiniteWeylGroup::min_coset_rep(const std::vector<int>& Y, WeylElement y) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : Y) {
      if (left_descent(y, j)) {
        y = left_mult(j, y);
        moved = true;
        break;
      }
    }
  }
  return y;
}

std::pair<WeylElement, WeylElement> FiniteWeylGroup::parabolic_decompose(
    WeylElement w, const std::vector<int>& J) const {
  WeylElement suffix = identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (right_descent(w, j)) {
        w = right_mult(w, j);
        suffix = left_mult(j, suffix);
        moved = true;
        break;
      }
    }
  }
  return {w, suffix};
}

std::string FiniteWeylGroup::to_string(WeylElement w) const {
  const auto& wd = word_[w.idx];
  if (wd.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < wd.size(); ++k) {
    if (k) s += '.';
    s += 's' + std::to_string(wd[k] + 1);
  }
  return s;
}

std::optional<WeylElement> FiniteWeylGroup::parse(const std::string& s) const {
  if (s == "e") return identity();
  WeylElement w = identity();
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 's') return std::nullopt;
    ++pos;
    std::size_t end = s.find('.', pos);
    if (end == std::string::npos) end = s.size();
    int i = 0;
    for (; pos < end; ++pos) {
      if (!isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
      i = i * 10 + (s[pos] - '0');
    }
    if (i < 1 || i > rank_) return std::nullopt;
    w = right_mult(w, i - 1);
    if (pos < s.size()) ++pos;  // skip '.'
  }
  return w;
}

}  // namespace lma
