#include "adelic/fn_table.hpp"

namespace adelic::harmonic {

FnTable::FnTable(Space sp) : sp_(sp), p_(sp.F->p()), n_(sp.size()), stride_(static_cast<size_t>(p_ - 1)) {
  flat_.assign(n_ * stride_, Rational(0));
}

CycloValue FnTable::at(std::uint64_t idx) const {
  CycloValue v(p_);
  const Rational* src = raw(idx);
  for (size_t i = 0; i < stride_; ++i) v.c[i] = src[i];
  return v;
}

void FnTable::set(std::uint64_t idx, const CycloValue& v) {
  if (v.p != p_) throw ContractViolation("FnTable: wrong cyclotomic field");
  Rational* dst = raw(idx);
  for (size_t i = 0; i < stride_; ++i) dst[i] = v.c[i];
}

void FnTable::add_at(std::uint64_t idx, const CycloValue& v) {
  if (v.p != p_) throw ContractViolation("FnTable: wrong cyclotomic field");
  Rational* dst = raw(idx);
  for (size_t i = 0; i < stride_; ++i) dst[i] += v.c[i];
}

FnTable FnTable::delta(const Space& sp, std::uint64_t at) {
  FnTable f(sp);
  f.set(at, CycloValue::one(sp.F->p()));
  return f;
}

FnTable FnTable::constant(const Space& sp, const CycloValue& v) {
  FnTable f(sp);
  for (std::uint64_t i = 0; i < f.n_; ++i) f.set(i, v);
  return f;
}

FnTable FnTable::char_mask(const Space& sp, const std::vector<char>& mask) {
  if (static_cast<int>(mask.size()) != sp.dim) throw ContractViolation("char_mask: wrong mask size");
  FnTable f(sp);
  const auto one = CycloValue::one(sp.F->p());
  for (std::uint64_t idx = 0; idx < f.n_; ++idx) {
    bool in = true;
    std::uint64_t rest = idx;
    for (int i = 0; i < sp.dim && in; ++i) {
      Fq d = static_cast<Fq>(rest % static_cast<std::uint64_t>(sp.F->q()));
      rest /= static_cast<std::uint64_t>(sp.F->q());
      if (!mask[static_cast<size_t>(i)] && d != 0) in = false;
    }
    if (in) f.set(idx, one);
  }
  return f;
}

FnTable FnTable::delta_sum_span(const Space& sp, const std::vector<std::vector<Fq>>& rows) {
  FnTable f(sp);
  const auto one = CycloValue::one(sp.F->p());
  const long q = sp.F->q();
  std::uint64_t combos = 1;
  for (size_t i = 0; i < rows.size(); ++i) {
    combos *= static_cast<std::uint64_t>(q);
    if (combos > (1ULL << 22)) throw ContractViolation("delta_sum_span: span too large");
  }
  for (std::uint64_t ci = 0; ci < combos; ++ci) {
    std::vector<Fq> v(static_cast<size_t>(sp.dim), 0);
    std::uint64_t rest = ci;
    for (const auto& row : rows) {
      Fq lambda = static_cast<Fq>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
      if (lambda == 0) continue;
      for (int i = 0; i < sp.dim; ++i)
        v[static_cast<size_t>(i)] = sp.F->add(v[static_cast<size_t>(i)], sp.F->mul(lambda, row[static_cast<size_t>(i)]));
    }
    // duplicate combinations map to the same point only if the rows are
    // dependent; overwrite keeps the function a plain characteristic sum
    f.set(sp.index(v), one);
  }
  return f;
}

FnTable FnTable::scaled(const Rational& r) const {
  FnTable f = *this;
  for (auto& x : f.flat_) x *= r;
  return f;
}

FnTable FnTable::operator+(const FnTable& o) const {
  if (!sp_.compatible(o.sp_)) throw ContractViolation("FnTable: domain mismatch");
  FnTable f = *this;
  for (size_t i = 0; i < flat_.size(); ++i) f.flat_[i] += o.flat_[i];
  return f;
}

FnTable FnTable::negate_arg() const {
  FnTable f(sp_);
  for (std::uint64_t idx = 0; idx < n_; ++idx) f.set(sp_.negate(idx), at(idx));
  return f;
}

bool FnTable::operator==(const FnTable& o) const {
  return sp_.compatible(o.sp_) && flat_ == o.flat_;
}

bool FnTable::is_zero() const {
  for (const auto& x : flat_)
    if (!x.is_zero()) return false;
  return true;
}

std::uint64_t FnTable::support_size() const {
  std::uint64_t s = 0;
  for (std::uint64_t idx = 0; idx < n_; ++idx) {
    const Rational* v = raw(idx);
    for (size_t i = 0; i < stride_; ++i)
      if (!v[i].is_zero()) {
        ++s;
        break;
      }
  }
  return s;
}

std::uint64_t LinMap::apply(std::uint64_t x) const {
  const auto& F = src.F;
  std::vector<Fq> xr = src.coords(x);
  std::vector<Fq> y(static_cast<size_t>(dst.dim), 0);
  for (size_t i = 0; i < y.size(); ++i) {
    Fq acc = 0;
    for (size_t j = 0; j < xr.size(); ++j) acc = F->add(acc, F->mul(A.at(i, j), xr[j]));
    y[i] = acc;
  }
  return dst.index(y);
}

LinMap LinMap::diagonal(const Space& V) {
  Space prod{V.F, 2 * V.dim};
  linalg::Mat A(V.F, static_cast<size_t>(2 * V.dim), static_cast<size_t>(V.dim));
  for (int i = 0; i < V.dim; ++i) {
    A.at(static_cast<size_t>(i), static_cast<size_t>(i)) = V.F->one();
    A.at(static_cast<size_t>(V.dim + i), static_cast<size_t>(i)) = V.F->one();
  }
  return LinMap{V, prod, std::move(A)};
}

LinMap LinMap::difference(const Space& V) {
  Space prod{V.F, 2 * V.dim};
  linalg::Mat A(V.F, static_cast<size_t>(V.dim), static_cast<size_t>(2 * V.dim));
  for (int i = 0; i < V.dim; ++i) {
    A.at(static_cast<size_t>(i), static_cast<size_t>(i)) = V.F->one();
    A.at(static_cast<size_t>(i), static_cast<size_t>(V.dim + i)) = V.F->neg(V.F->one());
  }
  return LinMap{prod, V, std::move(A)};
}

LinMap LinMap::to_point(const Space& V) {
  Space pt{V.F, 0};
  return LinMap{V, pt, linalg::Mat(V.F, 0, static_cast<size_t>(V.dim))};
}

LinMap LinMap::from_point(const Space& V) {
  Space pt{V.F, 0};
  return LinMap{pt, V, linalg::Mat(V.F, static_cast<size_t>(V.dim), 0)};
}

FnTable pushforward(const LinMap& i, const FnTable& f) {
  if (!f.space().compatible(i.src)) throw ContractViolation("pushforward: domain mismatch");
  FnTable out(i.dst);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    auto v = f.at(x);
    if (v.is_zero()) continue;
    out.add_at(i.apply(x), v);
  }
  return out;
}

FnTable pullback(const LinMap& i, const FnTable& g) {
  if (!g.space().compatible(i.dst)) throw ContractViolation("pullback: domain mismatch");
  FnTable out(i.src);
  for (std::uint64_t x = 0; x < out.size(); ++x) out.set(x, g.at(i.apply(x)));
  return out;
}

FnTable tensor(const FnTable& f, const FnTable& g) {
  if (f.space().F.get() != g.space().F.get()) throw ContractViolation("tensor: mixed fields");
  Space prod{f.space().F, f.space().dim + g.space().dim};
  FnTable out(prod);
  const std::uint64_t nf = f.size();
  for (std::uint64_t y = 0; y < g.size(); ++y) {
    auto gv = g.at(y);
    if (gv.is_zero()) continue;
    for (std::uint64_t x = 0; x < nf; ++x) {
      auto fv = f.at(x);
      if (fv.is_zero()) continue;
      out.set(y * nf + x, fv * gv);
    }
  }
  return out;
}

CycloValue pair_tables(const FnTable& f, const FnTable& g) {
  if (!f.space().compatible(g.space())) throw ContractViolation("pair: domain mismatch");
  CycloValue acc(f.p());
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    auto fv = f.at(x);
    if (fv.is_zero()) continue;
    acc += fv * g.at(x);
  }
  return acc;
}

CycloValue total_mass(const FnTable& f) {
  CycloValue acc(f.p());
  for (std::uint64_t x = 0; x < f.size(); ++x) acc += f.at(x);
  return acc;
}

namespace {

// dst += zeta^r * src on (p-1)-coordinate cyclotomic vectors
void rotate_add(Rational* dst, const Rational* src, long r, long p) {
  if (r == 0) {
    for (long i = 0; i < p - 1; ++i) dst[i] += src[i];
    return;
  }
  for (long i = 0; i < p - 1; ++i) {
    if (src[i].is_zero()) continue;
    long e = (i + r) % p;
    if (e < p - 1) {
      dst[e] += src[i];
    } else {
      for (long j = 0; j < p - 1; ++j) dst[j] -= src[i];
    }
  }
}

}  // namespace

FnTable fourier_naive(const FnTable& f, const Pairing& P) {
  if (!f.space().compatible(P.V)) throw ContractViolation("fourier: domain mismatch");
  const auto& F = P.V.F;
  FnTable out(P.W);
  for (std::uint64_t y = 0; y < out.size(); ++y) {
    Rational* acc = out.raw(y);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const Rational* v = f.raw(x);
      bool zero = true;
      for (size_t i = 0; i < f.stride(); ++i)
        if (!v[i].is_zero()) {
          zero = false;
          break;
        }
      if (zero) continue;
      rotate_add(acc, v, F->trace(P.value(x, y)), F->p());
    }
  }
  return out;
}

FnTable fourier(const FnTable& f, const Pairing& P) {
  if (!f.space().compatible(P.V)) throw ContractViolation("fourier: domain mismatch");
  if (!qspace::nondegenerate(P)) throw ContractViolation("fourier: pairing must be a perfect block pairing");
  const auto& F = P.V.F;
  const long q = F->q();
  const long p = F->p();
  const size_t stride = f.stride();
  const std::uint64_t n = f.size();

  // working table over "slots": V's coordinate positions, transformed block
  // by block into the paired W coordinates
  std::vector<Rational> cur(f.raw(0), f.raw(0) + n * stride);
  std::vector<Rational> scratch;
  std::vector<int> slot_of_wcoord(static_cast<size_t>(P.W.dim), -1);

  for (const auto& blk : P.blocks) {
    const size_t k = blk.rows.size();
    std::uint64_t sub = 1;
    for (size_t i = 0; i < k; ++i) sub *= static_cast<std::uint64_t>(q);
    // exponent matrix E[xl][yl] = Tr(x^T m y)
    std::vector<long> E(sub * sub);
    std::vector<Fq> xd(k), yd(k);
    for (std::uint64_t xl = 0; xl < sub; ++xl) {
      std::uint64_t r = xl;
      for (size_t i = 0; i < k; ++i) {
        xd[i] = static_cast<Fq>(r % static_cast<std::uint64_t>(q));
        r /= static_cast<std::uint64_t>(q);
      }
      for (std::uint64_t yl = 0; yl < sub; ++yl) {
        std::uint64_t s = yl;
        for (size_t j = 0; j < k; ++j) {
          yd[j] = static_cast<Fq>(s % static_cast<std::uint64_t>(q));
          s /= static_cast<std::uint64_t>(q);
        }
        Fq acc = 0;
        for (size_t i = 0; i < k; ++i) {
          if (xd[i] == 0) continue;
          for (size_t j = 0; j < k; ++j)
            acc = F->add(acc, F->mul(xd[i], F->mul(blk.m[i][j], yd[j])));
        }
        E[xl * sub + yl] = F->trace(acc);
      }
    }
    // strides of the block's slots in the ambient index
    std::vector<std::uint64_t> strides(k);
    for (size_t i = 0; i < k; ++i) {
      std::uint64_t st = 1;
      for (int d = 0; d < blk.rows[i]; ++d) st *= static_cast<std::uint64_t>(q);
      strides[i] = st;
    }
    scratch.assign(cur.size(), Rational(0));
    std::vector<std::uint64_t> offset(sub);
    for (std::uint64_t l = 0; l < sub; ++l) {
      std::uint64_t o = 0, r = l;
      for (size_t i = 0; i < k; ++i) {
        o += (r % static_cast<std::uint64_t>(q)) * strides[i];
        r /= static_cast<std::uint64_t>(q);
      }
      offset[l] = o;
    }
    // iterate over cosets: indices whose block slots are all zero
    std::vector<Rational> bucket(static_cast<size_t>(p) * stride);
    for (std::uint64_t base = 0; base < n; ++base) {
      bool is_base = true;
      for (size_t i = 0; i < k && is_base; ++i)
        is_base = ((base / strides[i]) % static_cast<std::uint64_t>(q)) == 0;
      if (!is_base) continue;
      for (std::uint64_t yl = 0; yl < sub; ++yl) {
        std::fill(bucket.begin(), bucket.end(), Rational(0));
        for (std::uint64_t xl = 0; xl < sub; ++xl) {
          const Rational* src = cur.data() + (base + offset[xl]) * stride;
          bool zero = true;
          for (size_t i = 0; i < stride; ++i)
            if (!src[i].is_zero()) {
              zero = false;
              break;
            }
          if (zero) continue;
          long r = E[xl * sub + yl];
          Rational* b = bucket.data() + static_cast<size_t>(r) * stride;
          for (size_t i = 0; i < stride; ++i) b[i] += src[i];
        }
        Rational* dst = scratch.data() + (base + offset[yl]) * stride;
        for (long r = 0; r < p; ++r)
          rotate_add(dst, bucket.data() + static_cast<size_t>(r) * stride, r, p);
      }
    }
    cur.swap(scratch);
    for (size_t i = 0; i < k; ++i) slot_of_wcoord[static_cast<size_t>(blk.cols[i])] = blk.rows[i];
  }

  // permute slots into W's canonical coordinate order
  FnTable out(P.W);
  std::vector<int> wcoord_of_slot(static_cast<size_t>(P.V.dim), -1);
  for (int w = 0; w < P.W.dim; ++w) wcoord_of_slot[static_cast<size_t>(slot_of_wcoord[static_cast<size_t>(w)])] = w;
  bool identity = true;
  for (int s = 0; s < P.V.dim; ++s) identity = identity && wcoord_of_slot[static_cast<size_t>(s)] == s;
  if (identity) {
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      Rational* dst = out.raw(idx);
      for (size_t i = 0; i < stride; ++i) dst[i] = cur[idx * stride + i];
    }
    return out;
  }
  std::vector<std::uint64_t> wstride(static_cast<size_t>(P.W.dim));
  for (int w = 0; w < P.W.dim; ++w) {
    std::uint64_t st = 1;
    for (int d = 0; d < w; ++d) st *= static_cast<std::uint64_t>(q);
    wstride[static_cast<size_t>(w)] = st;
  }
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t widx = 0, r = idx;
    for (int s = 0; s < P.V.dim; ++s) {
      std::uint64_t d = r % static_cast<std::uint64_t>(q);
      r /= static_cast<std::uint64_t>(q);
      widx += d * wstride[static_cast<size_t>(wcoord_of_slot[static_cast<size_t>(s)])];
    }
    Rational* dst = out.raw(widx);
    for (size_t i = 0; i < stride; ++i) dst[i] = cur[idx * stride + i];
  }
  return out;
}

}  // namespace adelic::harmonic
