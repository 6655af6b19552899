#include "lma/affine.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_set>

#include "lma/intlin.hpp"

namespace lma {

AffineWeyl::AffineWeyl(const RootDatum& datum, const FiniteWeylGroup& group)
    : datum_(&datum), group_(&group) {
  int n = datum.rank();
  simples_.reserve(static_cast<std::size_t>(n) + 1);
  // s_0 = t_{-theta^vee} s_theta (the unique length-one choice under the
  // pinned translation convention).
  Coweight neg_theta = datum.coroot_as_coweight(datum.highest_root_index());
  for (auto& c : neg_theta.coords) c = -c;
  simples_.push_back({neg_theta, group.reflection(datum.highest_root_index())});
  for (int i = 0; i < n; ++i) simples_.push_back(from_finite(group.simple(i)));

  if (datum.lattice() == Lattice::adjoint) {
    IMat b(n, std::vector<long long>(n));
    // Column c = coords of alpha_c^vee in the fundamental-coweight basis.
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) b[r][c] = datum.cartan()[c][r];
    SmithForm sf = smith_form(std::move(b));
    omega_diag_ = sf.diag;
    omega_left_ = sf.left;
    omega_order_ = 1;
    for (auto d : omega_diag_) omega_order_ *= static_cast<std::uint64_t>(d);
  } else {
    omega_order_ = 1;
  }
}

AffineElement AffineWeyl::mult(const AffineElement& a, const AffineElement& b) const {
  Coweight moved = group_->act(a.w, b.lambda);
  Coweight lam = a.lambda;
  for (std::size_t i = 0; i < lam.coords.size(); ++i) lam.coords[i] += moved.coords[i];
  return {std::move(lam), group_->mult(a.w, b.w)};
}

AffineElement AffineWeyl::inverse(const AffineElement& a) const {
  WeylElement wi = group_->inverse(a.w);
  Coweight lam = group_->act(wi, a.lambda);
  for (auto& c : lam.coords) c = -c;
  return {std::move(lam), wi};
}

long long AffineWeyl::length(const AffineElement& x) const {
  const auto& roots = datum_->positive_roots();
  WeylElement winv = group_->inverse(x.w);
  long long len = 0;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    long long c = datum_->pairing(x.lambda, roots[k]);
    if (group_->inverts_root(winv, k))
      len += c >= -1 ? c + 1 : -(c + 1);
    else
      len += c >= 0 ? c : -c;
  }
  return len;
}

OmegaClass AffineWeyl::omega_component(const AffineElement& x) const {
  OmegaClass oc;
  if (datum_->lattice() == Lattice::simply_connected) {
    oc.residues.assign(static_cast<std::size_t>(datum_->rank()), 0);
    oc.index = 0;
    return oc;
  }
  int n = datum_->rank();
  oc.residues.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long long y = 0;
    for (int j = 0; j < n; ++j) y += omega_left_[i][j] * x.lambda.coords[j];
    long long d = omega_diag_[i];
    long long r = y % d;
    if (r < 0) r += d;
    oc.residues[static_cast<std::size_t>(i)] = r;
  }
  std::uint64_t idx = 0, radix = 1;
  for (int i = 0; i < n; ++i) {
    idx += static_cast<std::uint64_t>(oc.residues[static_cast<std::size_t>(i)]) * radix;
    radix *= static_cast<std::uint64_t>(omega_diag_[i]);
  }
  oc.index = idx;
  return oc;
}

AffineWeyl::ReducedDecomposition AffineWeyl::reduced_decomposition(const AffineElement& x) const {
  ReducedDecomposition rd;
  AffineElement cur = x;
  long long len = length(cur);
  while (len > 0) {
    int pick = -1;
    AffineElement next;
    for (int i = 0; i <= datum_->rank(); ++i) {
      AffineElement y = left_mult_simple(i, cur);
      if (length(y) < len) {
        pick = i;
        next = std::move(y);
        break;
      }
    }
    if (pick < 0) throw std::logic_error("no affine descent on positive-length element");
    rd.letters.push_back(pick);
    cur = std::move(next);
    --len;
  }
  rd.omega_part = std::move(cur);
  return rd;
}

std::vector<AffineElement> AffineWeyl::lower_interval(const AffineElement& x) const {
  ReducedDecomposition rd = reduced_decomposition(x);
  std::unordered_set<AffineElement, AffineElementHash> set;
  set.insert(rd.omega_part);
  for (auto it = rd.letters.rbegin(); it != rd.letters.rend(); ++it) {
    std::vector<AffineElement> add;
    for (const auto& u : set) {
      AffineElement su = left_mult_simple(*it, u);
      if (!set.count(su)) add.push_back(std::move(su));
    }
    for (auto& u : add) set.insert(std::move(u));
  }
  std::vector<AffineElement> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), [](const AffineElement& a, const AffineElement& b) {
    if (a.lambda.coords != b.lambda.coords) return a.lambda.coords < b.lambda.coords;
    return a.w.idx < b.w.idx;
  });
  return out;
}

AffineRootPartition AffineWeyl::affine_root_partition(const Coweight& lam) const {
  if (!datum_->is_dominant(lam))
    throw DomainError("affine_root_partition: coweight is not dominant");
  AffineRootPartition p;
  for (const auto& beta : datum_->positive_roots()) {
    long long c = datum_->pairing(lam, beta);
    if (c == 0) {
      p.levi_count += 2;  // +-beta
    } else {
      // dominant: c >= 1, so beta is in (c) and -beta in (b)
      p.positive_count += 1;
      p.negative_count += 1;
      p.fiber_dimension += c;
    }
  }
  p.paper_expression =
      p.fiber_dimension - static_cast<long long>(datum_->positive_roots().size());
  p.levi_type = datum_->type_map(lam);
  return p;
}

std::string AffineWeyl::to_string(const AffineElement& x) const {
  std::string s = "t[";
  for (std::size_t i = 0; i < x.lambda.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x.lambda.coords[i]);
  }
  s += "]·";
  s += group_->to_string(x.w);
  return s;
}

std::string AffineWeyl::to_string_quasi_coxeter(const AffineElement& x) const {
  ReducedDecomposition rd = reduced_decomposition(x);
  std::string s = "omega[" + std::to_string(omega_component(rd.omega_part).index) + "]·";
  if (rd.letters.empty()) {
    s += 'e';
  } else {
    for (std::size_t k = 0; k < rd.letters.size(); ++k) {
      if (k) s += '.';
      s += 's' + std::to_string(rd.letters[k]);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

BoundedWindow BoundedWindow::build(const AffineWeyl& ctx, long long bound,
                                   std::uint64_t budget,
                                   const OmegaClass* restrict_class) {
  const RootDatum& rd = ctx.datum();
  const FiniteWeylGroup& g = ctx.group();

  BoundedWindow win;
  win.bound_ = bound;

  // Dominant translation parts small enough to matter:
  // l(t_lambda w) >= <lambda^+, 2rho> - l(w_S).
  long long slack = bound + static_cast<long long>(rd.positive_roots().size());
  for (const Coweight& lamplus : rd.dominant_coweights_up_to(slack)) {
    // W_0-orbit of lambda^+.
    std::unordered_set<std::vector<int>, VectorHash> orbit;
    for (std::uint32_t wi = 0; wi < g.size(); ++wi)
      orbit.insert(g.act(WeylElement{wi}, lamplus).coords);
    for (const auto& lam : orbit) {
      if (restrict_class &&
          !(ctx.omega_component({Coweight{lam}, g.identity()}) == *restrict_class))
        continue;
      for (std::uint32_t wi = 0; wi < g.size(); ++wi) {
        AffineElement x{Coweight{lam}, WeylElement{wi}};
        long long len = ctx.length(x);
        if (len <= bound) {
          win.elements_.push_back(std::move(x));
          win.lengths_.push_back(len);
          if (win.elements_.size() > budget)
            throw ResourceError("bounded window exceeds element budget");
        }
      }
    }
  }

  // Deterministic order: (length, lambda lex, w index).
  std::vector<std::size_t> perm(win.elements_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    if (win.lengths_[i] != win.lengths_[j]) return win.lengths_[i] < win.lengths_[j];
    if (win.elements_[i].lambda.coords != win.elements_[j].lambda.coords)
      return win.elements_[i].lambda.coords < win.elements_[j].lambda.coords;
    return win.elements_[i].w.idx < win.elements_[j].w.idx;
  });
  std::vector<AffineElement> elems;
  std::vector<long long> lens;
  elems.reserve(perm.size());
  lens.reserve(perm.size());
  for (auto i : perm) {
    elems.push_back(std::move(win.elements_[i]));
    lens.push_back(win.lengths_[i]);
  }
  win.elements_ = std::move(elems);
  win.lengths_ = std::move(lens);
  for (std::size_t i = 0; i < win.elements_.size(); ++i) win.index_.emplace(win.elements_[i], i);

  win.build_bruhat(ctx);
  return win;
}

void BoundedWindow::build_bruhat(const AffineWeyl& ctx) {
  std::size_t nelem = elements_.size();
  int naff = ctx.num_affine_simples();

  // Left multiplication tables: index in window (or npos) and descent flag.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> lmul(nelem * static_cast<std::size_t>(naff), npos);
  std::vector<std::uint8_t> ldesc(nelem * static_cast<std::size_t>(naff), 0);
  parallel_for(nelem, [&](std::size_t b, std::size_t e) {
    for (std::size_t u = b; u < e; ++u) {
      for (int i = 0; i < naff; ++i) {
        AffineElement su = ctx.left_mult_simple(i, elements_[u]);
        long long len = ctx.length(su);
        ldesc[u * static_cast<std::size_t>(naff) + static_cast<std::size_t>(i)] =
            len < lengths_[u] ? 1 : 0;
        auto it = index_.find(su);
        if (it != index_.end())
          lmul[u * static_cast<std::size_t>(naff) + static_cast<std::size_t>(i)] = it->second;
      }
    }
  });

  lower_.assign(nelem, Bitset{});
  // Elements are sorted by length, so a single forward pass works; rows at a
  // given length only read rows of strictly smaller length.
  std::size_t lo = 0;
  while (lo < nelem) {
    std::size_t hi = lo;
    while (hi < nelem && lengths_[hi] == lengths_[lo]) ++hi;
    parallel_for(hi - lo, [&](std::size_t b, std::size_t e) {
      for (std::size_t off = b; off < e; ++off) {
        std::size_t x = lo + off;
        Bitset row(nelem);
        if (lengths_[x] == 0) {
          row.set(x);
        } else {
          int s = -1;
          for (int i = 0; i < naff; ++i)
            if (ldesc[x * static_cast<std::size_t>(naff) + static_cast<std::size_t>(i)]) {
              s = i;
              break;
            }
          std::size_t sx = lmul[x * static_cast<std::size_t>(naff) + static_cast<std::size_t>(s)];
          const Bitset& parent = lower_[sx];
          for (std::size_t u = 0; u < nelem; ++u) {
            bool in;
            if (ldesc[u * static_cast<std::size_t>(naff) + static_cast<std::size_t>(s)]) {
              std::size_t su = lmul[u * static_cast<std::size_t>(naff) + static_cast<std::size_t>(s)];
              in = parent.test(su);
            } else {
              in = parent.test(u);
            }
            if (in) row.set(u);
          }
        }
        lower_[x] = std::move(row);
      }
    });
    lo = hi;
  }
}

std::optional<std::size_t> BoundedWindow::index_of(const AffineElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> BoundedWindow::covers(
    const std::vector<std::size_t>& subset) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t wi : subset) {
    for (std::size_t ui : subset) {
      if (ui == wi || !leq(ui, wi)) continue;
      bool covered = true;
      for (std::size_t vi : subset) {
        if (vi == ui || vi == wi) continue;
        if (leq(ui, vi) && leq(vi, wi)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(ui, wi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t BoundedWindow::format_version() { return 1; }

namespace {

template <typename T>
void put(std::vector<std::uint8_t>& buf, T v) {
  std::uint8_t tmp[sizeof(T)];
  std::memcpy(tmp, &v, sizeof(T));
  buf.insert(buf.end(), tmp, tmp + sizeof(T));
}

template <typename T>
bool get(const std::vector<std::uint8_t>& buf, std::size_t& pos, T& v) {
  if (pos + sizeof(T) > buf.size()) return false;
  std::memcpy(&v, buf.data() + pos, sizeof(T));
  pos += sizeof(T);
  return true;
}

}  // namespace

std::vector<std::uint8_t> BoundedWindow::serialize(const AffineWeyl& ctx) const {
  std::vector<std::uint8_t> buf;
  buf.insert(buf.end(), {'L', 'M', 'A', 'W'});
  put<std::uint32_t>(buf, format_version());
  std::string type = ctx.datum().type().to_string();
  put<std::uint32_t>(buf, static_cast<std::uint32_t>(type.size()));
  buf.insert(buf.end(), type.begin(), type.end());
  put<std::uint8_t>(buf, ctx.datum().lattice() == Lattice::adjoint ? 0 : 1);
  put<std::int64_t>(buf, bound_);
  int rank = ctx.datum().rank();
  put<std::uint32_t>(buf, static_cast<std::uint32_t>(rank));
  put<std::uint64_t>(buf, elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (int c = 0; c < rank; ++c) put<std::int32_t>(buf, elements_[i].lambda.coords[static_cast<std::size_t>(c)]);
    put<std::uint32_t>(buf, elements_[i].w.idx);
    put<std::int64_t>(buf, lengths_[i]);
  }
  for (const auto& row : lower_) {
    for (auto w : row.words()) put<std::uint64_t>(buf, w);
  }
  return buf;
}

std::optional<BoundedWindow> BoundedWindow::deserialize(
    const AffineWeyl& ctx, const std::vector<std::uint8_t>& blob) {
  std::size_t pos = 0;
  if (blob.size() < 4 || blob[0] != 'L' || blob[1] != 'M' || blob[2] != 'A' || blob[3] != 'W')
    return std::nullopt;
  pos = 4;
  std::uint32_t ver = 0, tlen = 0, rank = 0;
  if (!get(blob, pos, ver) || ver != format_version()) return std::nullopt;
  if (!get(blob, pos, tlen) || pos + tlen > blob.size()) return std::nullopt;
  std::string type(blob.begin() + static_cast<std::ptrdiff_t>(pos),
                   blob.begin() + static_cast<std::ptrdiff_t>(pos + tlen));
  pos += tlen;
  std::uint8_t lat = 0;
  std::int64_t bound = 0;
  std::uint64_t nelem = 0;
  if (!get(blob, pos, lat) || !get(blob, pos, bound) || !get(blob, pos, rank) ||
      !get(blob, pos, nelem))
    return std::nullopt;
  if (type != ctx.datum().type().to_string()) return std::nullopt;
  if ((lat == 0) != (ctx.datum().lattice() == Lattice::adjoint)) return std::nullopt;
  if (static_cast<int>(rank) != ctx.datum().rank()) return std::nullopt;

  BoundedWindow win;
  win.bound_ = bound;
  win.elements_.resize(nelem);
  win.lengths_.resize(nelem);
  for (std::uint64_t i = 0; i < nelem; ++i) {
    win.elements_[i].lambda.coords.resize(rank);
    for (std::uint32_t c = 0; c < rank; ++c) {
      std::int32_t v = 0;
      if (!get(blob, pos, v)) return std::nullopt;
      win.elements_[i].lambda.coords[c] = v;
    }
    std::uint32_t widx = 0;
    std::int64_t len = 0;
    if (!get(blob, pos, widx) || !get(blob, pos, len)) return std::nullopt;
    if (widx >= ctx.group().size()) return std::nullopt;
    win.elements_[i].w.idx = widx;
    win.lengths_[i] = len;
  }
  win.lower_.assign(nelem, Bitset{});
  std::size_t nwords = (nelem + 63) / 64;
  for (std::uint64_t i = 0; i < nelem; ++i) {
    Bitset row(nelem);
    for (std::size_t k = 0; k < nwords; ++k) {
      std::uint64_t w = 0;
      if (!get(blob, pos, w)) return std::nullopt;
      row.words()[k] = w;
    }
    win.lower_[i] = std::move(row);
  }
  if (pos != blob.size()) return std::nullopt;
  for (std::size_t i = 0; i < win.elements_.size(); ++i) win.index_.emplace(win.elements_[i], i);
  return win;
}

Instance Instance::make(const CartanType& type, Lattice lattice, std::uint64_t budget) {
  Instance inst;
  inst.datum = std::make_unique<RootDatum>(RootDatum::build(type, lattice));
  inst.group = std::make_unique<FiniteWeylGroup>(FiniteWeylGroup::generate(*inst.datum, budget));
  inst.affine = std::make_unique<AffineWeyl>(*inst.datum, *inst.group);
  return inst;
}

}  // namespace lma
