#pragma once

#include "adelic/harmonic.hpp"

namespace adelic::hecke {

using algebra::CycloValue;
using algebra::FqPtr;
using harmonic::FnTable;

// Local Tate factor: sum over the ideal classes of pi^n O_P, i.e.
// T^n + T^(n+1) + ... with fit T^n/(1-T). The base q only tags the series
// for mixing with the other factors.
ZetaSeries tate_local(long n, int cap, long long q = 2);

// Discrete factor over the monic polynomials: sum_m q^m T^m, fit 1/(1-qT).
ZetaSeries dirichlet_factor(const FqPtr& F, int cap);

// Multiplicative test function on K_P, P the place at infinity.
// Either the characteristic function of pi^n O_P (valuation data only), or a
// finite table on a local window with a declared additive constancy level.
struct MultiplicativeIntegrand {
  enum class Kind { IdealChar, WindowTable };
  Kind kind = Kind::IdealChar;
  long n = 0;
  std::optional<FnTable> table;
  std::optional<adeles::AdeleWindow> window;  // single block at infinity
  long constancy_level = 0;  // value depends only on exponents < level

  static MultiplicativeIntegrand ideal_char(long n) {
    MultiplicativeIntegrand m;
    m.n = n;
    return m;
  }
  static MultiplicativeIntegrand window_table(FnTable f, adeles::AdeleWindow W, long level);
};

// The discrete summation set: A'' = monic polynomials (the effective divisors
// of the affine line under Pic(U) = 0), or an explicit delta-list.
struct DiscretePart {
  enum class Kind { MonicPolys, DeltaList };
  Kind kind = Kind::MonicPolys;
  std::vector<series::FqRat> elems;  // DeltaList only; nonzero, A'' cap k* = {1}

  static DiscretePart monic_polys() { return {}; }
  static DiscretePart delta_list(std::vector<series::FqRat> elems);
};

struct HeckeZeta {
  ZetaSeries series;
  std::vector<long long> contributing_pairs;  // per coefficient, index = exponent - lo
};

// zeta(s, f0, f1) = integral over K_P^* of |c|^s F(c), F(c) = sum_b f0(b) f1(bc),
// as an exact coefficient-by-coefficient sum over valuation classes.
HeckeZeta hecke_zeta(const FqPtr& F, const DiscretePart& f0, const MultiplicativeIntegrand& f1,
                     int cap);

// The same zeta for a window-table integrand; coefficients live in Q(zeta_p)
// because the class subdivision introduces exact unit-coset measures.
struct HeckeZetaTable {
  long lo = 0;
  std::vector<CycloValue> coeffs;  // exponents lo, lo+1, ...
};
HeckeZetaTable hecke_zeta_table(const FqPtr& F, const DiscretePart& f0,
                                const MultiplicativeIntegrand& f1, int cap);

// The double-sum form (integration variable a, exponent v(a) - v(b)) against
// the regrouped single-field form (variable c = a b^{-1}); coefficients must
// agree through the cap.
bool regrouping_consistent(const FqPtr& F, long n, int cap);

// Poisson summation at window level: |Gamma-perp| sum_Gamma f = sum_{Gamma-perp} f_hat.
bool poisson_check(const adeles::AdeleWindow& W, const linalg::Mat& lattice_rows,
                   const FnTable& f);

struct FeReport {
  ZetaSeries zeta;  // with fit
  Rational monomial_coeff;  // Z(1/(qT)) = coeff * T^power * Z(T)
  long monomial_power = 0;
  bool equation_holds = false;
};

// Exact rational-function route: substitute T -> 1/(qT) into the fit and
// compare; the standard pair satisfies Z(1/(qT)) = qT^2 Z(T).
FeReport functional_equation(const FqPtr& F, const DiscretePart& f0,
                             const MultiplicativeIntegrand& f1, int cap);

// Windowed transform of the discrete part delta_{A''}: the delta-sum over
// monic polynomials of degree <= deg_cap embedded in the window, transformed
// under the residue pairing. Exposed only at a declared cap.
FnTable discrete_part_transform_windowed(const adeles::AdeleWindow& W, int deg_cap);

}  // namespace adelic::hecke
