#pragma once

#include <map>
#include <variant>

#include "adelic/expand.hpp"
#include "adelic/zeta_series.hpp"

namespace adelic::curve {

using algebra::Fq;
using algebra::FqPtr;
using series::ClosedPoint;
using series::FqRat;

// Finitely supported integer map on closed points of P^1/F_q.
struct Divisor {
  FqPtr F;
  std::map<ClosedPoint, long> m;

  Divisor() = default;
  explicit Divisor(FqPtr field) : F(std::move(field)) {}

  long coeff(const ClosedPoint& x) const {
    auto it = m.find(x);
    return it == m.end() ? 0 : it->second;
  }
  void set(const ClosedPoint& x, long n) {
    if (n == 0)
      m.erase(x);
    else
      m[x] = n;
  }
  long deg() const {
    long d = 0;
    for (const auto& [x, n] : m) d += n * x.degree;
    return d;
  }
  Divisor operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [x, n] : o.m) r.set(x, r.coeff(x) + n);
    return r;
  }
  Divisor operator-() const {
    Divisor r(F);
    for (const auto& [x, n] : m) r.m[x] = -n;
    return r;
  }
  Divisor operator-(const Divisor& o) const { return *this + (-o); }
  Divisor scaled(long k) const {
    Divisor r(F);
    if (k != 0)
      for (const auto& [x, n] : m) r.m[x] = k * n;
    return r;
  }
  bool operator<=(const Divisor& o) const {
    for (const auto& [x, n] : m)
      if (n > o.coeff(x)) return false;
    for (const auto& [x, n] : o.m)
      if (coeff(x) > n) return false;
    return true;
  }
  bool operator==(const Divisor& o) const { return m == o.m; }
  std::string str() const;
};

struct P1Model {
  FqPtr F;
};

// Smooth plane projective model, used for point counting and zeta only.
struct PlaneModel {
  struct Mono {
    int ex, ey, ez;
    Fq c;
  };
  FqPtr F;
  std::vector<Mono> poly;
  int degree = 0;  // total degree of the homogeneous form
  int genus() const { return (degree - 1) * (degree - 2) / 2; }
};

using CurveModel = std::variant<P1Model, PlaneModel>;

FqPtr model_field(const CurveModel& m);
int model_genus(const CurveModel& m);

// #C(F_{q^k}); verifies smoothness at every curve point it finds.
long long point_count(const CurveModel& m, int k);

// Closed-point counts per degree 1..max_degree (Moebius inversion of the
// point counts; for P^1 the degree-1 count includes infinity).
std::vector<long long> closed_point_counts(const CurveModel& m, int max_degree);

// Moebius inversion of raw point counts S (index k = #X(F_{q^k}), S[0] unused)
// into closed-point counts per degree.
std::vector<long long> invert_point_counts(const std::vector<long long>& S);

// Effective zero-cycle counts by multiset dynamic programming over the
// per-degree closed-point counts N (index d, N[0] unused).
ZetaSeries zeta_dp_from_place_counts(long long q, const std::vector<long long>& N, int cap);

// Explicit P^1 places of exact degree d (small q^d only; infinity is listed
// under degree 1).
std::vector<ClosedPoint> p1_places_of_degree(const FqPtr& F, int d);

// Euler-product route: coefficients from the point counts via the Newton
// recurrence n*c_n = sum S_k c_{n-k}; attempts the genus fit against
// (1-T)(1-qT).
ZetaSeries zeta_from_counts(const CurveModel& m, int N);

// Independent route: effective-divisor counts by multiset dynamic
// programming over the per-degree place counts.
ZetaSeries zeta_effective_divisor_route(const CurveModel& m, int N);

// Basis of L(D) on P^1: { t^j / prod pi_x^{n_x} : 0 <= j <= deg D }.
std::vector<FqRat> rr_space_basis(const Divisor& D);
long l_dim(const Divisor& D);

Divisor canonical_divisor(const FqPtr& F);  // (dt) = -2*inf

// Exact check of q^g T^{2g} P(1/(qT)) = P(T) for the stored fit.
bool functional_equation_check(const ZetaSeries& Z, int genus);

}  // namespace adelic::curve
