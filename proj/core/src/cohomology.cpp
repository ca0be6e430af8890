#include "adelic/cohomology.hpp"

namespace adelic::adeles {

namespace {

// one evaluation of the truncated complex at bounds (B, N)
std::pair<long, long> complex_at(const Divisor& D, long B, long N) {
  const FqPtr F = D.F;
  auto inf = ClosedPoint::infinity(F);
  long dP = D.coeff(inf);
  Divisor Dfin = D;
  Dfin.set(inf, 0);
  // global sections over the affine part, poles at infinity capped by B
  Divisor Dw = Dfin;
  Dw.set(inf, B);
  auto basis = curve::rr_space_basis(Dw);
  // target: K_P window on exponents [-B, N); stalk block on [-dP, N)
  const long t_lo = -B, t_hi = N;
  const long target_dim = t_hi - t_lo;
  const long stalk_lo = -dP;
  if (stalk_lo < t_lo || stalk_lo > t_hi)
    throw ContractViolation("restricted_complex: bounds too small for D at infinity");
  const long stalk_dim = t_hi - stalk_lo;
  linalg::Mat m(F, basis.size() + static_cast<size_t>(stalk_dim), static_cast<size_t>(target_dim));
  for (size_t i = 0; i < basis.size(); ++i) {
    auto coords = series::window_coords(basis[i], inf, t_lo, t_hi);
    for (long j = 0; j < target_dim; ++j) m.at(i, static_cast<size_t>(j)) = coords[static_cast<size_t>(j)];
  }
  for (long s = 0; s < stalk_dim; ++s) {
    // minus the identity embedding of the completed stalk
    m.at(basis.size() + static_cast<size_t>(s), static_cast<size_t>(stalk_lo - t_lo + s)) =
        F->neg(F->one());
  }
  size_t rk = linalg::rank(m);
  long h0 = static_cast<long>(basis.size()) + stalk_dim - static_cast<long>(rk);
  long h1 = target_dim - static_cast<long>(rk);
  return {h0, h1};
}

}  // namespace

CohomologyReport restricted_complex_cohomology(const Divisor& D, long bound_poles,
                                               long bound_prec) {
  const FqPtr F = D.F;
  auto inf = ClosedPoint::infinity(F);
  long dP = D.coeff(inf);
  if (bound_poles < 0) bound_poles = std::max(dP, 0L) + std::abs(D.deg()) + 2;
  if (bound_prec < 0) bound_prec = std::abs(dP) + 2;
  auto first = complex_at(D, bound_poles, bound_prec);
  auto second = complex_at(D, bound_poles + 1, bound_prec + 1);
  if (first != second)
    throw InstabilityError("restricted_complex_cohomology: result not stable under enlargement");
  CohomologyReport r;
  r.h0 = first.first;
  r.h1 = first.second;
  r.bound_poles = bound_poles;
  r.bound_prec = bound_prec;
  return r;
}

bool strong_approximation_check(const AdeleWindow& W, const ClosedPoint& P) {
  const FqPtr F = W.field();
  bool found = false;
  for (const auto& b : W.blocks()) found = found || b.x == P;
  if (!found) throw ContractViolation("strong_approximation_check: P must lie in S");
  long target_dim = 0;
  for (const auto& b : W.blocks())
    if (!(b.x == P)) target_dim += b.dim();
  if (target_dim == 0) return true;  // vacuous

  long M0 = W.d_high().coeff(P);
  long Mmax = M0 + target_dim + W.d_high().deg() + 3;
  for (long M = M0; M <= Mmax; ++M) {
    Divisor Dg = W.d_high();
    Dg.set(P, M);
    auto basis = curve::rr_space_basis(Dg);
    if (basis.empty()) continue;
    linalg::Mat m(F, basis.size(), static_cast<size_t>(target_dim));
    for (size_t i = 0; i < basis.size(); ++i) {
      size_t off = 0;
      for (const auto& b : W.blocks()) {
        if (b.x == P) continue;
        auto coords = series::window_coords(basis[i], b.x, b.lo, b.hi);
        for (size_t j = 0; j < coords.size(); ++j) m.at(i, off + j) = coords[j];
        off += static_cast<size_t>(b.dim());
      }
    }
    if (linalg::rank(m) == static_cast<size_t>(target_dim)) return true;
  }
  return false;
}

}  // namespace adelic::adeles
