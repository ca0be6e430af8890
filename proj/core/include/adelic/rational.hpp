#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace adelic {

// Exact rational with 64-bit numerator/denominator. All intermediates run
// through 128 bits and narrowing is checked, so overflow throws instead of
// wrapping. Denominator is always positive and the fraction reduced.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit on purpose
  Rational(long long n, long long d) { assign(n, d); }

  static Rational reduced128(__int128 n, __int128 d);

  // q^e with e possibly negative.
  static Rational q_pow(long long q, long e);

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  Rational operator-() const { return reduced128(-static_cast<__int128>(num), den); }
  Rational operator+(const Rational& o) const {
    return reduced128(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                      static_cast<__int128>(den) * o.den);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return reduced128(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
  }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("Rational: division by zero");
    return reduced128(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  void assign(long long n, long long d);
};

inline void Rational::assign(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  *this = reduced128(n, d);
}

inline Rational Rational::reduced128(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) d = 1;
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
  constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
  if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: 64-bit overflow");
  Rational r;
  r.num = static_cast<long long>(n);
  r.den = static_cast<long long>(d);
  return r;
}

inline Rational Rational::q_pow(long long q, long e) {
  __int128 v = 1;
  long n = e < 0 ? -e : e;
  for (long i = 0; i < n; ++i) {
    v *= q;
    if (v > static_cast<__int128>(INT64_MAX)) throw std::overflow_error("Rational::q_pow overflow");
  }
  auto w = static_cast<long long>(v);
  return e < 0 ? Rational(1, w) : Rational(w);
}

}  // namespace adelic
