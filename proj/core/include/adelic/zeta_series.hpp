#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic {

// Power series in T = q^{-s} with integer coefficients, tracked on
// [lo, lo+count). A rational fit, when present, reproduces every stored
// coefficient exactly (num/den are Z[T] coefficient vectors).
struct ZetaSeries {
  long long q = 2;
  long lo = 0;
  std::vector<long long> c;

  struct Fit {
    std::vector<long long> num, den;
  };
  std::optional<Fit> fit;

  ZetaSeries() = default;
  ZetaSeries(long long q_, long lo_, std::vector<long long> coeffs)
      : q(q_), lo(lo_), c(std::move(coeffs)) {}

  long hi() const { return lo + static_cast<long>(c.size()); }
  long long coeff(long e) const {
    if (e < lo) return 0;
    if (e >= hi()) throw ContractViolation("ZetaSeries: coefficient beyond window");
    return c[static_cast<size_t>(e - lo)];
  }

  // truncated product; window is the best certified common range
  ZetaSeries operator*(const ZetaSeries& o) const;
  bool same_coefficients(const ZetaSeries& o) const;

  // Fit attempt against a fixed denominator: numerator = series * den must
  // terminate at degree <= max_num_deg on the certified window.
  bool try_fit(const std::vector<long long>& den, int max_num_deg);

  std::string str() const;
};

long long checked_mul(long long a, long long b);
long long checked_add(long long a, long long b);
long long checked_pow(long long q, long e);

}  // namespace adelic
