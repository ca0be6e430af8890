#include "adelic/expand.hpp"

#include <map>
#include <mutex>

namespace adelic::series {

std::string ClosedPoint::str() const {
  if (inf) return "inf";
  std::string s;
  bool first = true;
  for (int i = pi.deg(); i >= 0; --i) {
    Fq c = pi.coeff(i);
    if (c == 0) continue;
    if (!first) s += "+";
    long cv = c;
    if (i == 0) {
      s += std::to_string(cv);
    } else {
      if (cv != 1) s += std::to_string(cv) + "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
    first = false;
  }
  return s.empty() ? "0" : s;
}

int place_multiplicity(const Poly<FqHandle>& poly, const Poly<FqHandle>& pi) {
  if (poly.is_zero()) throw ContractViolation("place_multiplicity of zero polynomial");
  int m = 0;
  Poly<FqHandle> cur = poly;
  while (true) {
    auto [q, r] = cur.divrem(pi);
    if (!r.is_zero()) break;
    cur = q;
    ++m;
  }
  return m;
}

long ord_at(const FqRat& f, const ClosedPoint& x) {
  if (f.is_zero()) throw ContractViolation("ord_at of the zero function");
  if (x.inf) return static_cast<long>(f.den.deg()) - f.num.deg();
  return place_multiplicity(f.num, x.pi) - place_multiplicity(f.den, x.pi);
}

namespace {

// series N/D on [lo, hi) from polynomials with known exact coefficients
template <class H>
Laurent<H> poly_quotient_series(const Poly<H>& num, const Poly<H>& den, long lo, long hi) {
  H h = den.h;
  if (num.is_zero()) return Laurent<H>(h, lo, hi);
  // strip powers of s
  int vn = 0;
  while (h.is_zero(num.coeff(vn))) ++vn;
  int vd = 0;
  while (h.is_zero(den.coeff(vd))) ++vd;
  long val = vn - vd;
  long need = hi - val;  // unit-part coefficients required
  if (need <= 0) return Laurent<H>(h, lo, hi);
  Laurent<H> nunit(h, 0, need);
  for (long i = 0; i < need; ++i) nunit.set(i, num.coeff(static_cast<int>(i) + vn));
  Laurent<H> dunit(h, 0, need);
  for (long i = 0; i < need; ++i) dunit.set(i, den.coeff(static_cast<int>(i) + vd));
  Laurent<H> series = (nunit * dunit.inverse()).shifted(val);
  // widen to the requested window (exact zeros below the valuation)
  Laurent<H> out(h, lo, hi);
  for (long e = std::max(lo, series.lo); e < std::min(hi, series.hi); ++e) out.set(e, series.coeff(e));
  if (series.hi < hi) throw InstabilityError("poly_quotient_series: window shortfall");
  return out;
}

}  // namespace

FqLaurent expand_deg1(const FqRat& f, const ClosedPoint& x, long lo, long hi) {
  if (x.inf || x.degree != 1) throw ContractViolation("expand_deg1: wrong place kind");
  FqHandle h = f.den.h;
  // s = t - a with a = -pi(0)
  auto a = h.f->neg(x.pi.coeff(0));
  Poly<FqHandle> shift(h, {a, h.one()});  // t = a + s
  return poly_quotient_series(f.num.substitute(shift), f.den.substitute(shift), lo, hi);
}

FqLaurent expand_infinity(const FqRat& f, long lo, long hi) {
  FqHandle h = f.den.h;
  if (f.is_zero()) return FqLaurent(h, lo, hi);
  // f(1/z) = z^(deg den - deg num) * rev(num)(z)/rev(den)(z)
  auto rev = [&](const Poly<FqHandle>& p) {
    std::vector<Fq> c(p.c.rbegin(), p.c.rend());
    return Poly<FqHandle>(h, c);
  };
  long pre = static_cast<long>(f.den.deg()) - f.num.deg();
  auto series = poly_quotient_series(rev(f.num), rev(f.den), lo - pre, hi - pre);
  return series.shifted(pre);
}

ExtPtr residue_field(const ClosedPoint& x) {
  if (x.inf) throw ContractViolation("residue_field: infinity handled separately");
  return ExtField::make(x.field(), x.pi);
}

ExtLaurent expand_ext(const FqRat& f, const ExtPtr& kx, long lo, long hi) {
  ExtHandle eh{kx};
  auto lift = [&](const Poly<FqHandle>& p) {
    std::vector<ExtField::Elem> c;
    c.reserve(p.c.size());
    for (auto v : p.c) c.push_back(kx->embed(v));
    return Poly<ExtHandle>(eh, c);
  };
  // t = alpha + s
  Poly<ExtHandle> shift(eh, {kx->alpha(), kx->one()});
  return poly_quotient_series(lift(f.num).substitute(shift), lift(f.den).substitute(shift), lo, hi);
}

Fq residue_trace_dt(const FqRat& f, const ClosedPoint& x) {
  const FqPtr F = f.den.h.f;
  if (f.is_zero()) return 0;
  if (x.inf) {
    // f dt = -z^{-2} f dz: residue is -[z^1] f
    long v = ord_at(f, x);
    if (v > 1) return 0;
    auto s = expand_infinity(f, v, 2);
    return F->neg(s.coeff(1));
  }
  long v = ord_at(f, x);
  if (v > -1) return 0;
  if (x.degree == 1) {
    auto s = expand_deg1(f, x, v, 0);
    return s.coeff(-1);
  }
  auto kx = residue_field(x);
  auto s = expand_ext(f, kx, v, 0);
  return kx->trace_to_base(s.coeff(-1));
}

std::vector<Fq> window_coords(const FqRat& f, const ClosedPoint& x, long lo, long hi) {
  std::vector<Fq> out;
  out.reserve(static_cast<size_t>((hi - lo) * x.degree));
  if (x.inf) {
    auto s = expand_infinity(f, lo, hi);
    for (long e = lo; e < hi; ++e) out.push_back(s.coeff(e));
    return out;
  }
  if (x.degree == 1) {
    auto s = expand_deg1(f, x, lo, hi);
    for (long e = lo; e < hi; ++e) out.push_back(s.coeff(e));
    return out;
  }
  auto kx = residue_field(x);
  auto s = expand_ext(f, kx, lo, hi);
  for (long e = lo; e < hi; ++e) {
    auto v = s.coeff(e);
    for (int b = 0; b < x.degree; ++b) out.push_back(v[static_cast<size_t>(b)]);
  }
  return out;
}

const std::vector<Poly<FqHandle>>& monic_irreducibles(const FqPtr& F, int d) {
  static std::map<std::pair<const algebra::FqField*, int>, std::vector<Poly<FqHandle>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(F.get(), d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= F->q();
    if (total > (1L << 17)) throw ContractViolation("monic_irreducibles: q^d too large to enumerate");
  }
  FqHandle h{F};
  std::vector<Poly<FqHandle>> list;
  for (long idx = 0; idx < total; ++idx) {
    std::vector<Fq> c(static_cast<size_t>(d + 1), 0);
    long v = idx;
    for (int i = 0; i < d; ++i) {
      c[static_cast<size_t>(i)] = static_cast<Fq>(v % F->q());
      v /= F->q();
    }
    c[static_cast<size_t>(d)] = F->one();
    Poly<FqHandle> f(h, c);
    if (algebra::is_irreducible(f)) list.push_back(std::move(f));
  }
  return cache.emplace(key, std::move(list)).first->second;
}

std::vector<std::pair<ClosedPoint, int>> polar_places(const FqRat& f) {
  std::vector<std::pair<ClosedPoint, int>> out;
  const FqPtr F = f.den.h.f;
  Poly<FqHandle> den = f.den;
  for (int d = 1; den.deg() > 0 && d <= den.deg(); ++d) {
    for (const auto& pi : monic_irreducibles(F, d)) {
      if (den.deg() < pi.deg()) break;
      int m = 0;
      while (true) {
        auto [q, r] = den.divrem(pi);
        if (!r.is_zero()) break;
        den = q;
        ++m;
      }
      if (m > 0) out.emplace_back(ClosedPoint::finite(pi), m);
    }
  }
  if (den.deg() > 0) throw InstabilityError("polar_places: denominator did not fully factor");
  long vinf = ord_at(f, ClosedPoint::infinity(F));
  if (vinf < 0) out.emplace_back(ClosedPoint::infinity(F), static_cast<int>(-vinf));
  return out;
}

}  // namespace adelic::series
