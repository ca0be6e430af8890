#pragma once

#include <memory>

#include "adelic/poly.hpp"

namespace adelic::algebra {

// Residue field k(x) = F_q[Y]/(pi) of a degree-d place, kept as a quotient
// algebra over the curve's constant field rather than re-encoded as an
// absolute extension. Elements are coefficient vectors in the basis
// 1, a, ..., a^(d-1) where a is the class of Y.
class ExtField {
 public:
  using Elem = std::vector<Fq>;

  static std::shared_ptr<const ExtField> make(FqPtr base, Poly<FqHandle> pi);

  const FqPtr& base() const { return base_; }
  int degree() const { return d_; }
  const Poly<FqHandle>& pi() const { return pi_; }
  long size() const { return size_; }  // q^d

  Elem zero() const { return Elem(d_, 0); }
  Elem one() const {
    Elem e(d_, 0);
    e[0] = base_->one();
    return e;
  }
  Elem embed(Fq a) const {
    Elem e(d_, 0);
    e[0] = a;
    return e;
  }
  Elem alpha() const {  // class of Y, a root of pi
    Elem e(d_, 0);
    if (d_ == 1) {
      // pi = Y - c: alpha = c
      e[0] = base_->neg(pi_.coeff(0));
    } else {
      e[1] = base_->one();
    }
    return e;
  }
  Elem from_index(long idx) const;  // base-q digits, deterministic enumeration
  long to_index(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, long long e) const;
  Elem frob_q(const Elem& a) const { return pow(a, base_->q()); }

  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const;

  // Relative trace k(x) -> F_q: sum of the q-power conjugates.
  Fq trace_to_base(const Elem& a) const;

 private:
  ExtField(FqPtr base, Poly<FqHandle> pi);
  FqPtr base_;
  Poly<FqHandle> pi_;
  int d_;
  long size_;
};

using ExtPtr = std::shared_ptr<const ExtField>;

struct ExtHandle {
  ExtPtr f;
  using Elem = ExtField::Elem;
  Elem zero() const { return f->zero(); }
  Elem one() const { return f->one(); }
  Elem add(const Elem& a, const Elem& b) const { return f->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return f->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return f->mul(a, b); }
  Elem neg(const Elem& a) const { return f->neg(a); }
  Elem inv(const Elem& a) const { return f->inv(a); }
  bool is_zero(const Elem& a) const { return f->is_zero(a); }
  bool eq(const Elem& a, const Elem& b) const { return f->eq(a, b); }
};

// Deterministic search for a monic irreducible of degree d over F_q (packed
// index order, same convention as FqField::make).
Poly<FqHandle> find_irreducible(const FqPtr& F, int d);
bool is_irreducible(const Poly<FqHandle>& f);

}  // namespace adelic::algebra
