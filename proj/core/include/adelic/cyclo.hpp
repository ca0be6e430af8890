#pragma once

#include <vector>

#include "adelic/errors.hpp"
#include "adelic/fq.hpp"
#include "adelic/rational.hpp"

namespace adelic::algebra {

// Exact element of Q(zeta_p), p prime, in the power basis 1, z, ..., z^(p-2).
// For p = 2 this degenerates to a single rational. Values of additive
// characters, Fourier transforms and pairings all live here; there is no
// floating point anywhere in the library.
struct CycloValue {
  long p = 2;
  std::vector<Rational> c;  // size p-1

  CycloValue() : c(1) {}
  explicit CycloValue(long prime) : p(prime), c(static_cast<size_t>(prime - 1)) {}

  static CycloValue zero(long p) { return CycloValue(p); }
  static CycloValue one(long p) {
    CycloValue v(p);
    v.c[0] = Rational(1);
    return v;
  }
  static CycloValue rational(long p, const Rational& r) {
    CycloValue v(p);
    v.c[0] = r;
    return v;
  }
  // zeta_p^e, e arbitrary integer.
  static CycloValue zeta_pow(long p, long long e);

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
      if (!c[i].is_zero()) return false;
    return true;
  }
  Rational rational_part() const { return c[0]; }

  CycloValue operator-() const;
  CycloValue operator+(const CycloValue& o) const;
  CycloValue operator-(const CycloValue& o) const;
  CycloValue operator*(const CycloValue& o) const;
  CycloValue& operator+=(const CycloValue& o) { return *this = *this + o; }
  bool operator==(const CycloValue& o) const;
  bool operator!=(const CycloValue& o) const { return !(*this == o); }

  CycloValue scaled(const Rational& r) const;

  std::string str() const;
};

// psi(x) = zeta_p^(Tr(x)); the nontrivial additive character used throughout.
CycloValue additive_character(const FqPtr& F, Fq x);

}  // namespace adelic::algebra
