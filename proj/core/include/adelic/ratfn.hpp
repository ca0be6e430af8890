#pragma once

#include "adelic/poly.hpp"

namespace adelic {

// Rational function num/den, den nonzero. Kept reduced with monic denominator.
template <class H>
struct RatFn {
  Poly<H> num, den;

  RatFn() = default;
  RatFn(Poly<H> n, Poly<H> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  static RatFn zero(H h) { return RatFn(Poly<H>::zero(h), Poly<H>::constant(h, h.one())); }
  static RatFn constant(H h, typename H::Elem v) {
    return RatFn(Poly<H>::constant(h, v), Poly<H>::constant(h, h.one()));
  }
  static RatFn from_poly(Poly<H> p) {
    H h = p.h;
    return RatFn(std::move(p), Poly<H>::constant(h, h.one()));
  }

  H handle() const { return den.h; }
  bool is_zero() const { return num.is_zero(); }

  void normalize() {
    if (den.is_zero()) throw ContractViolation("RatFn: zero denominator");
    auto g = poly_gcd(num, den);
    if (g.deg() > 0) {
      num = num / g;
      den = den / g;
    }
    auto lead = den.lead();
    H h = den.h;
    if (!h.eq(lead, h.one())) {
      auto li = h.inv(lead);
      num = num.scaled(li);
      den = den.scaled(li);
    }
  }

  RatFn operator+(const RatFn& o) const { return RatFn(num * o.den + o.num * den, den * o.den); }
  RatFn operator-() const { return RatFn(-num, den); }
  RatFn operator-(const RatFn& o) const { return *this + (-o); }
  RatFn operator*(const RatFn& o) const { return RatFn(num * o.num, den * o.den); }
  RatFn operator/(const RatFn& o) const {
    if (o.is_zero()) throw ContractViolation("RatFn: division by zero");
    return RatFn(num * o.den, den * o.num);
  }
  bool operator==(const RatFn& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFn& o) const { return !(*this == o); }
};

}  // namespace adelic
