#pragma once

#include <vector>

#include "adelic/cyclo.hpp"
#include "adelic/errors.hpp"
#include "adelic/fq.hpp"
#include "adelic/rational.hpp"

namespace adelic {

// Field handles: cheap-copy descriptors giving the generic polynomial/series
// templates their arithmetic. FqHandle wraps a shared field description,
// QHandle is the rationals.

struct FqHandle {
  algebra::FqPtr f;
  using Elem = algebra::Fq;
  Elem zero() const { return 0; }
  Elem one() const { return f->one(); }
  Elem add(Elem a, Elem b) const { return f->add(a, b); }
  Elem sub(Elem a, Elem b) const { return f->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return f->mul(a, b); }
  Elem neg(Elem a) const { return f->neg(a); }
  Elem inv(Elem a) const { return f->inv(a); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
};

struct QHandle {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Rational(1) / a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

// Dense univariate polynomial over a field handle. Coefficient vector has no
// trailing zeros; the zero polynomial has an empty vector and degree -1.
template <class H>
struct Poly {
  H h;
  std::vector<typename H::Elem> c;

  Poly() = default;
  explicit Poly(H handle) : h(handle) {}
  Poly(H handle, std::vector<typename H::Elem> coeffs) : h(handle), c(std::move(coeffs)) { trim(); }

  static Poly zero(H h) { return Poly(h); }
  static Poly constant(H h, typename H::Elem v) {
    Poly r(h);
    if (!h.is_zero(v)) r.c = {v};
    return r;
  }
  static Poly x(H h) { return Poly(h, {h.zero(), h.one()}); }
  static Poly monomial(H h, typename H::Elem v, int e) {
    Poly r(h);
    if (!h.is_zero(v)) {
      r.c.assign(e + 1, h.zero());
      r.c[e] = v;
    }
    return r;
  }

  void trim() {
    while (!c.empty() && h.is_zero(c.back())) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  typename H::Elem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : h.zero();
  }
  typename H::Elem lead() const { return c.back(); }

  Poly operator+(const Poly& o) const {
    Poly r(h);
    r.c.resize(std::max(c.size(), o.c.size()), h.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = h.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r(h);
    r.c.reserve(c.size());
    for (const auto& v : c) r.c.push_back(h.neg(v));
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(h);
    Poly r(h);
    r.c.assign(c.size() + o.c.size() - 1, h.zero());
    for (size_t i = 0; i < c.size(); ++i) {
      if (h.is_zero(c[i])) continue;
      for (size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = h.add(r.c[i + j], h.mul(c[i], o.c[j]));
    }
    r.trim();
    return r;
  }
  Poly scaled(typename H::Elem v) const {
    Poly r(h);
    if (h.is_zero(v)) return r;
    r.c.reserve(c.size());
    for (const auto& x : c) r.c.push_back(h.mul(x, v));
    r.trim();
    return r;
  }
  bool operator==(const Poly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!h.eq(c[i], o.c[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // quotient/remainder; divisor must be nonzero
  std::pair<Poly, Poly> divrem(const Poly& d) const {
    if (d.is_zero()) throw ContractViolation("Poly: division by zero polynomial");
    Poly q(h), r = *this;
    auto dlinv = h.inv(d.lead());
    while (!r.is_zero() && r.deg() >= d.deg()) {
      int shift = r.deg() - d.deg();
      auto f = h.mul(r.lead(), dlinv);
      Poly t = Poly::monomial(h, f, shift);
      q = q + t;
      r = r - t * d;
    }
    return {q, r};
  }
  Poly operator/(const Poly& d) const { return divrem(d).first; }
  Poly operator%(const Poly& d) const { return divrem(d).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(h.inv(lead()));
  }

  // i * c_i formed by repeated addition so the characteristic is respected
  Poly derivative() const {
    Poly r(h);
    r.c.assign(c.size() > 0 ? c.size() - 1 : 0, h.zero());
    for (int i = 1; i <= deg(); ++i) {
      auto v = h.zero();
      for (int j = 0; j < i; ++j) v = h.add(v, c[i]);
      r.c[i - 1] = v;
    }
    r.trim();
    return r;
  }

  typename H::Elem eval(typename H::Elem at) const {
    auto acc = h.zero();
    for (int i = deg(); i >= 0; --i) acc = h.add(h.mul(acc, at), c[i]);
    return acc;
  }

  // composition this(g)
  Poly substitute(const Poly& g) const {
    Poly acc(h);
    for (int i = deg(); i >= 0; --i) acc = acc * g + Poly::constant(h, c[i]);
    return acc;
  }
};

template <class H>
Poly<H> poly_gcd(Poly<H> a, Poly<H> b) {
  while (!b.is_zero()) {
    a = a % b;
    std::swap(a, b);
  }
  return a.monic();
}

}  // namespace adelic
