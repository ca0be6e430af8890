#include "adelic/zeta_series.hpp"

#include <cstdint>

namespace adelic {

long long checked_mul(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("zeta coefficient overflow");
  return static_cast<long long>(r);
}

long long checked_add(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) + b;
  if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("zeta coefficient overflow");
  return static_cast<long long>(r);
}

long long checked_pow(long long q, long e) {
  long long v = 1;
  for (long i = 0; i < e; ++i) v = checked_mul(v, q);
  return v;
}

ZetaSeries ZetaSeries::operator*(const ZetaSeries& o) const {
  if (q != o.q) throw ContractViolation("ZetaSeries: mixing base q");
  long rlo = lo + o.lo;
  long rhi = std::min(lo + o.hi(), o.lo + hi());
  ZetaSeries r(q, rlo, std::vector<long long>(static_cast<size_t>(std::max(0L, rhi - rlo)), 0));
  for (long e1 = lo; e1 < hi(); ++e1) {
    long long a = coeff(e1);
    if (a == 0) continue;
    for (long e2 = o.lo; e2 < o.hi(); ++e2) {
      long e = e1 + e2;
      if (e < rlo || e >= rhi) continue;
      auto& slot = r.c[static_cast<size_t>(e - rlo)];
      slot = checked_add(slot, checked_mul(a, o.coeff(e2)));
    }
  }
  return r;
}

bool ZetaSeries::same_coefficients(const ZetaSeries& o) const {
  long a = std::min(lo, o.lo), b = std::min(hi(), o.hi());
  for (long e = a; e < b; ++e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

bool ZetaSeries::try_fit(const std::vector<long long>& den, int max_num_deg) {
  if (lo < 0) return false;
  if (hi() <= max_num_deg + 1) return false;  // nothing certified past the numerator
  std::vector<long long> num(c.size() + den.size(), 0);
  for (long e = lo; e < hi(); ++e) {
    for (size_t j = 0; j < den.size(); ++j) {
      long idx = e + static_cast<long>(j);
      if (idx >= hi()) continue;  // not certifiable at this index
      num[static_cast<size_t>(idx)] =
          checked_add(num[static_cast<size_t>(idx)], checked_mul(coeff(e), den[j]));
    }
  }
  // entries certified through hi()-1
  for (long i = 0; i < hi(); ++i) {
    if (i > max_num_deg && num[static_cast<size_t>(i)] != 0) return false;
  }
  num.resize(static_cast<size_t>(std::min<long>(max_num_deg + 1, hi())));
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  fit = Fit{std::move(num), den};
  return true;
}

std::string ZetaSeries::str() const {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(c[i]);
  }
  s += "] (T^" + std::to_string(lo) + "..)";
  return s;
}

}  // namespace adelic
