#include "adelic/fq.hpp"

#include <algorithm>

namespace adelic::algebra {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace modp {

static void trim(std::vector<long>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
  trim(a);
  const long dm = static_cast<long>(m.size()) - 1;  // m monic of degree dm
  while (static_cast<long>(a.size()) - 1 >= dm) {
    long d = static_cast<long>(a.size()) - 1;
    long c = a.back() % p;
    if (c != 0) {
      for (long i = 0; i <= dm; ++i) {
        long idx = d - dm + i;
        a[idx] = ((a[idx] - c * m[i]) % p + p) % p;
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

static std::vector<long> poly_powmod_x(long e_base, long long e_exp, const std::vector<long>& m,
                                       long p) {
  // x^(e_base^e_exp) mod m via repeated powering by e_base.
  std::vector<long> x = {0, 1};
  x = poly_mod(x, m, p);
  for (long long i = 0; i < e_exp; ++i) {
    std::vector<long> acc = {1};
    std::vector<long> base = x;
    long e = e_base;
    while (e > 0) {
      if (e & 1) acc = poly_mod(poly_mul(acc, base, p), m, p);
      base = poly_mod(poly_mul(base, base, p), m, p);
      e >>= 1;
    }
    x = acc;
  }
  return x;
}

static std::vector<long> poly_gcd(std::vector<long> a, std::vector<long> b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b, with b made monic first
    long lead = b.back();
    if (lead != 1) {
      // scale by inverse of lead
      long inv = 1;
      for (long t = 1; t < p; ++t)
        if ((t * lead) % p == 1) {
          inv = t;
          break;
        }
      for (auto& c : b) c = (c * inv) % p;
    }
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  trim(a);
  return a;
}

bool poly_is_irreducible(const std::vector<long>& f, long p) {
  long k = static_cast<long>(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  // x^(p^k) == x mod f, and gcd(x^(p^(k/l)) - x, f) = 1 for prime l | k.
  std::vector<long> xq = poly_powmod_x(p, k, f, p);
  std::vector<long> x = poly_mod({0, 1}, f, p);
  if (xq != x) return false;
  for (long l = 2; l <= k; ++l) {
    if (k % l != 0 || !is_prime(l)) continue;
    std::vector<long> g = poly_powmod_x(p, k / l, f, p);
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    trim(g);
    auto d = poly_gcd(g, f, p);
    if (static_cast<long>(d.size()) - 1 != 0) return false;
  }
  return true;
}

}  // namespace modp

FqField::FqField(long p, int k, std::vector<long> mod) : p_(p), k_(k), mod_(std::move(mod)) {
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= p_;
  if (q_ <= 256) build_tables();
  // trace table is cheap for every supported q
  trace_table_.assign(q_, 0);
  for (long a = 0; a < q_; ++a) {
    Fq acc = 0;
    Fq x = static_cast<Fq>(a);
    for (int i = 0; i < k_; ++i) {
      acc = add(acc, x);
      x = frobenius(x);
    }
    trace_table_[a] = coeffs(acc)[0];
  }
}

std::shared_ptr<const FqField> FqField::make(long p, int k) {
  if (!is_prime(p)) throw ContractViolation("make_field: p is not prime");
  if (k < 1) throw ContractViolation("make_field: k must be >= 1");
  if (k == 1) return make(p, 1, {0, 1});
  // smallest packed index c_0 + c_1 p + ... below x^k that is irreducible
  long top = 1;
  for (int i = 0; i < k; ++i) {
    top *= p;
    if (top > (1L << 16)) throw ContractViolation("make_field: q exceeds 2^16");
  }
  for (long idx = 0; idx < top; ++idx) {
    std::vector<long> m(k + 1, 0);
    long v = idx;
    for (int i = 0; i < k; ++i) {
      m[i] = v % p;
      v /= p;
    }
    m[k] = 1;
    if (modp::poly_is_irreducible(m, p)) return make(p, k, m);
  }
  throw InstabilityError("make_field: no irreducible found");  // unreachable
}

std::shared_ptr<const FqField> FqField::make(long p, int k, const std::vector<long>& modulus) {
  if (!is_prime(p)) throw ContractViolation("make_field: p is not prime");
  if (k < 1) throw ContractViolation("make_field: k must be >= 1");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > (1L << 16)) throw ContractViolation("make_field: q exceeds 2^16");
  }
  if (static_cast<int>(modulus.size()) != k + 1 || modulus[k] != 1)
    throw ContractViolation("make_field: modulus must be monic of degree k");
  std::vector<long> m = modulus;
  for (auto& c : m) c = ((c % p) + p) % p;
  if (k > 1 && !modp::poly_is_irreducible(m, p))
    throw ContractViolation("make_field: modulus is reducible");
  return std::shared_ptr<const FqField>(new FqField(p, k, std::move(m)));
}

void FqField::build_tables() {
  tables_ = true;
  mul_table_.assign(q_ * q_, 0);
  inv_table_.assign(q_, 0);
  for (long a = 0; a < q_; ++a)
    for (long b = a; b < q_; ++b) {
      Fq v = mul_slow(static_cast<Fq>(a), static_cast<Fq>(b));
      mul_table_[a * q_ + b] = v;
      mul_table_[b * q_ + a] = v;
    }
  for (long a = 1; a < q_; ++a) {
    if (inv_table_[a] != 0) continue;
    for (long b = 1; b < q_; ++b)
      if (mul_table_[a * q_ + b] == 1) {
        inv_table_[a] = static_cast<Fq>(b);
        inv_table_[b] = static_cast<Fq>(a);
        break;
      }
  }
}

Fq FqField::from_int(long long n) const {
  long r = static_cast<long>(((n % p_) + p_) % p_);
  return static_cast<Fq>(r);
}

Fq FqField::from_coeffs(const std::vector<long>& c) const {
  if (static_cast<int>(c.size()) > k_) throw ContractViolation("from_coeffs: too many coefficients");
  long idx = 0;
  long mult = 1;
  for (int i = 0; i < k_; ++i) {
    long ci = i < static_cast<int>(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
    idx += ci * mult;
    mult *= p_;
  }
  return static_cast<Fq>(idx);
}

std::vector<long> FqField::coeffs(Fq a) const {
  std::vector<long> c(k_, 0);
  long v = a;
  for (int i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Fq FqField::add(Fq a, Fq b) const {
  long r = 0, mult = 1;
  long x = a, y = b;
  for (int i = 0; i < k_; ++i) {
    r += ((x % p_) + (y % p_)) % p_ * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return static_cast<Fq>(r);
}

Fq FqField::neg(Fq a) const {
  long r = 0, mult = 1;
  long x = a;
  for (int i = 0; i < k_; ++i) {
    r += ((p_ - (x % p_)) % p_) * mult;
    x /= p_;
    mult *= p_;
  }
  return static_cast<Fq>(r);
}

Fq FqField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FqField::mul_slow(Fq a, Fq b) const {
  std::vector<long> pa = coeffs(a), pb = coeffs(b);
  auto prod = modp::poly_mod(modp::poly_mul(pa, pb, p_), mod_, p_);
  prod.resize(k_, 0);
  return from_coeffs(prod);
}

Fq FqField::mul(Fq a, Fq b) const {
  if (tables_) return mul_table_[static_cast<long>(a) * q_ + b];
  return mul_slow(a, b);
}

Fq FqField::pow(Fq a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Fq acc = one(), base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Fq FqField::inv(Fq a) const {
  if (a == 0) throw ContractViolation("FqField::inv of zero");
  if (tables_) return inv_table_[a];
  return pow(a, q_ - 2);
}

long FqField::trace(Fq a) const { return trace_table_[a]; }

}  // namespace adelic::algebra
