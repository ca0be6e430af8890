#include "adelic/cyclo.hpp"

namespace adelic::algebra {

static void check_same_p(long a, long b) {
  if (a != b) throw ContractViolation("CycloValue: mixing different cyclotomic fields");
}

CycloValue CycloValue::zeta_pow(long p, long long e) {
  long r = static_cast<long>(((e % p) + p) % p);
  CycloValue v(p);
  if (r < p - 1) {
    v.c[r] = Rational(1);
  } else {
    // z^(p-1) = -(1 + z + ... + z^(p-2))
    for (auto& x : v.c) x = Rational(-1);
  }
  return v;
}

CycloValue CycloValue::operator-() const {
  CycloValue r(p);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
  return r;
}

CycloValue CycloValue::operator+(const CycloValue& o) const {
  check_same_p(p, o.p);
  CycloValue r(p);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

CycloValue CycloValue::operator-(const CycloValue& o) const { return *this + (-o); }

CycloValue CycloValue::operator*(const CycloValue& o) const {
  check_same_p(p, o.p);
  const size_t n = c.size();
  // convolution with exponents folded mod p, then z^(p-1) eliminated
  std::vector<Rational> acc(static_cast<size_t>(p), Rational(0));
  for (size_t i = 0; i < n; ++i) {
    if (c[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (o.c[j].is_zero()) continue;
      size_t e = (i + j) % static_cast<size_t>(p);
      acc[e] += c[i] * o.c[j];
    }
  }
  CycloValue r(p);
  const Rational top = acc[static_cast<size_t>(p - 1)];
  for (size_t i = 0; i + 1 < static_cast<size_t>(p); ++i) r.c[i] = acc[i] - top;
  return r;
}

bool CycloValue::operator==(const CycloValue& o) const {
  if (p != o.p) return false;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != o.c[i]) return false;
  return true;
}

CycloValue CycloValue::scaled(const Rational& r) const {
  CycloValue v(p);
  for (size_t i = 0; i < c.size(); ++i) v.c[i] = c[i] * r;
  return v;
}

std::string CycloValue::str() const {
  std::string s;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!first) s += " + ";
    s += c[i].str();
    if (i > 0) s += "*z^" + std::to_string(i);
    first = false;
  }
  return first ? "0" : s;
}

CycloValue additive_character(const FqPtr& F, Fq x) {
  return CycloValue::zeta_pow(F->p(), F->trace(x));
}

}  // namespace adelic::algebra
