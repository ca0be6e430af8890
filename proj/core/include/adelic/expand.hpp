#pragma once

#include <string>

#include "adelic/ext_field.hpp"
#include "adelic/laurent.hpp"
#include "adelic/ratfn.hpp"

namespace adelic::series {

using algebra::ExtField;
using algebra::ExtHandle;
using algebra::ExtPtr;
using algebra::Fq;
using algebra::FqPtr;

// A closed point of P^1: either infinity or a monic irreducible of F_q[t].
struct ClosedPoint {
  bool inf = false;
  Poly<FqHandle> pi;  // empty when inf
  int degree = 1;

  FqPtr field() const { return pi.h.f; }

  static ClosedPoint infinity(const FqPtr& F) {
    ClosedPoint x;
    x.inf = true;
    x.pi = Poly<FqHandle>(FqHandle{F});
    x.degree = 1;
    return x;
  }
  static ClosedPoint finite(Poly<FqHandle> p) {
    if (p.deg() < 1) throw ContractViolation("ClosedPoint: degree must be >= 1");
    FqHandle h = p.h;
    if (!h.eq(p.lead(), h.one())) throw ContractViolation("ClosedPoint: place must be monic");
    if (!algebra::is_irreducible(p)) throw ContractViolation("ClosedPoint: place must be irreducible");
    ClosedPoint x;
    x.degree = p.deg();
    x.pi = std::move(p);
    return x;
  }

  // Deterministic total order: infinity last, otherwise by (degree, packed
  // coefficient index).
  long long key() const {
    if (inf) return -1;
    long long idx = 0, mult = 1;
    const long q = pi.h.f->q();
    for (int i = 0; i < pi.deg(); ++i) {
      idx += static_cast<long long>(pi.coeff(i)) * mult;
      mult *= q;
    }
    return static_cast<long long>(pi.deg()) * (mult * q) + idx;
  }
  bool operator==(const ClosedPoint& o) const { return inf == o.inf && (inf || pi == o.pi); }
  bool operator<(const ClosedPoint& o) const {
    if (inf != o.inf) return o.inf;  // finite places sort before infinity
    if (inf) return false;
    if (degree != o.degree) return degree < o.degree;
    return key() < o.key();
  }

  std::string str() const;
};

using FqRat = RatFn<FqHandle>;
using FqLaurent = Laurent<FqHandle>;
using ExtLaurent = Laurent<ExtHandle>;

// Multiplicity of pi in poly (0 if coprime); poly nonzero.
int place_multiplicity(const Poly<FqHandle>& poly, const Poly<FqHandle>& pi);

// Valuation ord_x(f) of a nonzero rational function at a closed point.
long ord_at(const FqRat& f, const ClosedPoint& x);

// Expansion in the uniformizer s of the place, exact on [lo, hi):
//   finite place of degree 1 with pi = t - a: s = t - a = pi
//   finite place of degree d: s = t - alpha over k(x) = F_q[t]/pi
//   infinity: s = z = 1/t
FqLaurent expand_deg1(const FqRat& f, const ClosedPoint& x, long lo, long hi);
FqLaurent expand_infinity(const FqRat& f, long lo, long hi);
ExtLaurent expand_ext(const FqRat& f, const ExtPtr& kx, long lo, long hi);

// Residue field of a finite place as an ExtField (degree 1 included).
ExtPtr residue_field(const ClosedPoint& x);

// Tr_{k(x)/F_q} res_x(f dt); at infinity dt = -z^{-2} dz is applied.
Fq residue_trace_dt(const FqRat& f, const ClosedPoint& x);

// Local window coordinates of f at x: exponents e in [lo, hi), each giving
// deg(x) F_q-coordinates in the basis 1, alpha, ..., alpha^(d-1)
// (exponent-major order). Size (hi-lo)*deg(x).
std::vector<Fq> window_coords(const FqRat& f, const ClosedPoint& x, long lo, long hi);

// Places dividing the denominator of f (with multiplicity of the pole),
// found by trial division against small irreducibles.
std::vector<std::pair<ClosedPoint, int>> polar_places(const FqRat& f);

// Monic irreducibles of F_q[t] of exact degree d, in packed index order.
// Cached per (field, d); feasible only for small q^d.
const std::vector<Poly<FqHandle>>& monic_irreducibles(const FqPtr& F, int d);

}  // namespace adelic::series
