#include "adelic/ext_field.hpp"

namespace adelic::algebra {

ExtField::ExtField(FqPtr base, Poly<FqHandle> pi) : base_(std::move(base)), pi_(std::move(pi)) {
  d_ = pi_.deg();
  size_ = 1;
  for (int i = 0; i < d_; ++i) size_ *= base_->q();
}

ExtPtr ExtField::make(FqPtr base, Poly<FqHandle> pi) {
  if (pi.deg() < 1) throw ContractViolation("ExtField: modulus must have degree >= 1");
  if (!base->is_zero(base->sub(pi.lead(), base->one())))
    throw ContractViolation("ExtField: modulus must be monic");
  if (!is_irreducible(pi)) throw ContractViolation("ExtField: modulus is reducible");
  return ExtPtr(new ExtField(std::move(base), std::move(pi)));
}

ExtField::Elem ExtField::from_index(long idx) const {
  Elem e(d_, 0);
  const long q = base_->q();
  for (int i = 0; i < d_; ++i) {
    e[i] = static_cast<Fq>(idx % q);
    idx /= q;
  }
  return e;
}

long ExtField::to_index(const Elem& a) const {
  long idx = 0, mult = 1;
  const long q = base_->q();
  for (int i = 0; i < d_; ++i) {
    idx += static_cast<long>(a[i]) * mult;
    mult *= q;
  }
  return idx;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = base_->add(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = base_->neg(a[i]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  FqHandle h{base_};
  Poly<FqHandle> pa(h, a), pb(h, b);
  auto r = (pa * pb) % pi_;
  Elem e(d_, 0);
  for (int i = 0; i <= r.deg(); ++i) e[i] = r.coeff(i);
  return e;
}

bool ExtField::is_zero(const Elem& a) const {
  for (auto v : a)
    if (v != 0) return false;
  return true;
}

bool ExtField::eq(const Elem& a, const Elem& b) const { return a == b; }

ExtField::Elem ExtField::pow(const Elem& a, long long e) const {
  Elem acc = one(), base = a;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw ContractViolation("ExtField::inv of zero");
  long long e = 1;
  for (int i = 0; i < d_; ++i) e *= base_->q();
  return pow(a, e - 2);
}

Fq ExtField::trace_to_base(const Elem& a) const {
  Elem acc = zero(), x = a;
  for (int i = 0; i < d_; ++i) {
    acc = add(acc, x);
    x = frob_q(x);
  }
  for (int i = 1; i < d_; ++i)
    if (acc[i] != 0) throw InstabilityError("ExtField::trace did not land in the base field");
  return acc[0];
}

bool is_irreducible(const Poly<FqHandle>& f) {
  const FqPtr F = f.h.f;
  const int d = f.deg();
  if (d < 1) return false;
  if (d == 1) return true;
  FqHandle h{F};
  auto powmod_xq = [&](long long rounds) {
    // x^(q^rounds) mod f
    Poly<FqHandle> x = Poly<FqHandle>::x(h) % f;
    for (long long i = 0; i < rounds; ++i) {
      Poly<FqHandle> acc = Poly<FqHandle>::constant(h, F->one());
      Poly<FqHandle> base = x;
      long e = F->q();
      while (e > 0) {
        if (e & 1) acc = (acc * base) % f;
        base = (base * base) % f;
        e >>= 1;
      }
      x = acc;
    }
    return x;
  };
  if (powmod_xq(d) != (Poly<FqHandle>::x(h) % f)) return false;
  for (int l = 2; l <= d; ++l) {
    if (d % l != 0 || !is_prime(l)) continue;
    auto g = powmod_xq(d / l) - Poly<FqHandle>::x(h);
    if (poly_gcd(g, f).deg() != 0) return false;
  }
  return true;
}

Poly<FqHandle> find_irreducible(const FqPtr& F, int d) {
  FqHandle h{F};
  if (d == 1) return Poly<FqHandle>::x(h);
  long top = 1;
  for (int i = 0; i < d; ++i) {
    top *= F->q();
    if (top > (1L << 22)) throw ContractViolation("find_irreducible: search space too large");
  }
  for (long idx = 0; idx < top; ++idx) {
    std::vector<Fq> c(d + 1, 0);
    long v = idx;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<Fq>(v % F->q());
      v /= F->q();
    }
    c[d] = F->one();
    Poly<FqHandle> f(h, c);
    if (is_irreducible(f)) return f;
  }
  throw InstabilityError("find_irreducible: none found");
}

}  // namespace adelic::algebra
