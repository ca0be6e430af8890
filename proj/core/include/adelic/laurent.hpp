#pragma once

#include <optional>

#include "adelic/poly.hpp"

namespace adelic {

// Truncated Laurent series: coefficients tracked for exponents in [lo, hi),
// exactly zero below lo, unknown at hi and above. Arithmetic propagates the
// certified window and never reports a coefficient it cannot guarantee.
template <class H>
struct Laurent {
  H h;
  long lo = 0, hi = 0;
  std::vector<typename H::Elem> c;  // size hi - lo

  Laurent() = default;
  Laurent(H handle, long lo_, long hi_) : h(handle), lo(lo_), hi(hi_) {
    if (lo > hi) throw ContractViolation("Laurent: lo > hi");
    c.assign(static_cast<size_t>(hi - lo), h.zero());
  }

  typename H::Elem coeff(long e) const {
    if (e >= hi) throw ContractViolation("Laurent: coefficient beyond certified window");
    if (e < lo) return h.zero();
    return c[static_cast<size_t>(e - lo)];
  }
  void set(long e, typename H::Elem v) {
    if (e < lo || e >= hi) throw ContractViolation("Laurent: set outside window");
    c[static_cast<size_t>(e - lo)] = v;
  }

  // Lowest exponent with a nonzero tracked coefficient; nullopt when the
  // series vanishes on its whole window.
  std::optional<long> valuation() const {
    for (long e = lo; e < hi; ++e)
      if (!h.is_zero(c[static_cast<size_t>(e - lo)])) return e;
    return std::nullopt;
  }

  Laurent operator+(const Laurent& o) const {
    Laurent r(h, std::min(lo, o.lo), std::min(hi, o.hi));
    for (long e = r.lo; e < r.hi; ++e) r.set(e, h.add(coeff(e), o.coeff(e)));
    return r;
  }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& v : r.c) v = h.neg(v);
    return r;
  }
  Laurent operator-(const Laurent& o) const { return *this + (-o); }

  Laurent operator*(const Laurent& o) const {
    long rlo = lo + o.lo;
    long rhi = std::min(lo + o.hi, o.lo + hi);
    Laurent r(h, rlo, std::max(rlo, rhi));
    for (long e1 = lo; e1 < hi; ++e1) {
      const auto& a = c[static_cast<size_t>(e1 - lo)];
      if (h.is_zero(a)) continue;
      for (long e2 = o.lo; e2 < o.hi; ++e2) {
        long e = e1 + e2;
        if (e < r.lo || e >= r.hi) continue;
        r.c[static_cast<size_t>(e - r.lo)] =
            h.add(r.c[static_cast<size_t>(e - r.lo)], h.mul(a, o.c[static_cast<size_t>(e2 - o.lo)]));
      }
    }
    return r;
  }

  Laurent shifted(long by) const {
    Laurent r = *this;
    r.lo += by;
    r.hi += by;
    return r;
  }

  // Multiplicative inverse; requires a nonzero tracked leading coefficient.
  Laurent inverse() const {
    auto v = valuation();
    if (!v) throw ContractViolation("Laurent: cannot invert a window of zeros");
    long val = *v;
    long n = hi - val;  // usable length of the unit part
    Laurent unit(h, 0, n);
    for (long i = 0; i < n; ++i) unit.set(i, coeff(val + i));
    Laurent inv(h, 0, n);
    auto u0i = h.inv(unit.coeff(0));
    inv.set(0, u0i);
    for (long m = 1; m < n; ++m) {
      auto s = h.zero();
      for (long j = 1; j <= m; ++j) s = h.add(s, h.mul(unit.coeff(j), inv.coeff(m - j)));
      inv.set(m, h.neg(h.mul(u0i, s)));
    }
    return inv.shifted(-val);
  }

  bool operator==(const Laurent& o) const {
    long a = std::min(lo, o.lo), b = std::min(hi, o.hi);
    for (long e = a; e < b; ++e)
      if (!h.eq(coeff(e), o.coeff(e))) return false;
    return lo == o.lo && hi == o.hi;
  }
};

}  // namespace adelic
