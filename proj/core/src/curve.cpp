#include "adelic/curve.hpp"

#include <algorithm>

namespace adelic::curve {

using algebra::ExtField;

std::string Divisor::str() const {
  if (m.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [x, n] : m) {
    if (!first) s += n >= 0 ? " + " : " - ";
    else if (n < 0)
      s += "-";
    s += std::to_string(std::abs(n)) + "*(" + x.str() + ")";
    first = false;
  }
  return s;
}

FqPtr model_field(const CurveModel& m) {
  return std::visit([](const auto& x) { return x.F; }, m);
}

int model_genus(const CurveModel& m) {
  if (std::holds_alternative<P1Model>(m)) return 0;
  return std::get<PlaneModel>(m).genus();
}

namespace {

long long mobius(long n) {
  long long mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// binomial C(n + r - 1, r) with overflow checks (multiset coefficient)
long long multiset_count(long long n, long r) {
  if (n == 0) return r == 0 ? 1 : 0;
  __int128 acc = 1;
  for (long i = 0; i < r; ++i) {
    acc = acc * (n + i);
    acc /= (i + 1);  // exact at every step for rising binomials
    if (acc > INT64_MAX) throw std::overflow_error("multiset_count overflow");
  }
  return static_cast<long long>(acc);
}

struct PlaneEval {
  const PlaneModel& model;
  algebra::ExtPtr E;

  ExtField::Elem eval(const ExtField::Elem& x, const ExtField::Elem& y,
                      const ExtField::Elem& z) const {
    auto acc = E->zero();
    for (const auto& mo : model.poly) {
      auto term = E->embed(mo.c);
      term = E->mul(term, E->pow(x, mo.ex));
      term = E->mul(term, E->pow(y, mo.ey));
      term = E->mul(term, E->pow(z, mo.ez));
      acc = E->add(acc, term);
    }
    return acc;
  }
};

PlaneModel::Mono derive(const PlaneModel::Mono& mo, int which, const FqPtr& F) {
  PlaneModel::Mono d = mo;
  int e = which == 0 ? mo.ex : which == 1 ? mo.ey : mo.ez;
  Fq c = 0;
  for (int i = 0; i < e; ++i) c = F->add(c, mo.c);
  d.c = c;
  if (which == 0) d.ex = std::max(0, mo.ex - 1);
  if (which == 1) d.ey = std::max(0, mo.ey - 1);
  if (which == 2) d.ez = std::max(0, mo.ez - 1);
  return d;
}

}  // namespace

long long point_count(const CurveModel& m, int k) {
  if (std::holds_alternative<P1Model>(m)) {
    const auto& p1 = std::get<P1Model>(m);
    return checked_add(checked_pow(p1.F->q(), k), 1);
  }
  const auto& pm = std::get<PlaneModel>(m);
  const FqPtr F = pm.F;
  __int128 space = 1;
  for (int i = 0; i < 2 * k; ++i) space *= F->q();
  if (space > (1 << 21))
    throw ContractViolation("point_count: plane enumeration cap q^(2k) exceeded");

  auto E = ExtField::make(F, algebra::find_irreducible(F, k));
  PlaneEval ev{pm, E};
  PlaneModel dx{F, {}, pm.degree}, dy{F, {}, pm.degree}, dz{F, {}, pm.degree};
  for (const auto& mo : pm.poly) {
    dx.poly.push_back(derive(mo, 0, F));
    dy.poly.push_back(derive(mo, 1, F));
    dz.poly.push_back(derive(mo, 2, F));
  }
  PlaneEval evx{dx, E}, evy{dy, E}, evz{dz, E};

  long long count = 0;
  const long qk = static_cast<long>(E->size());
  auto consider = [&](const ExtField::Elem& x, const ExtField::Elem& y, const ExtField::Elem& z) {
    if (!E->is_zero(ev.eval(x, y, z))) return;
    ++count;
    if (E->is_zero(evx.eval(x, y, z)) && E->is_zero(evy.eval(x, y, z)) &&
        E->is_zero(evz.eval(x, y, z)))
      throw ContractViolation("point_count: plane model is singular at a rational point");
  };
  // affine chart z = 1, then line z = 0, y = 1, then the point (1:0:0)
  for (long xi = 0; xi < qk; ++xi)
    for (long yi = 0; yi < qk; ++yi)
      consider(E->from_index(xi), E->from_index(yi), E->one());
  for (long xi = 0; xi < qk; ++xi) consider(E->from_index(xi), E->one(), E->zero());
  consider(E->one(), E->zero(), E->zero());
  return count;
}

std::vector<long long> invert_point_counts(const std::vector<long long>& S) {
  int max_degree = static_cast<int>(S.size()) - 1;
  std::vector<long long> N(S.size(), 0);
  for (int d = 1; d <= max_degree; ++d) {
    long long sum = 0;
    for (int e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      sum = checked_add(sum, checked_mul(mobius(e), S[d / e]));
    }
    if (sum % d != 0) throw InstabilityError("invert_point_counts: Moebius inversion not integral");
    N[d] = sum / d;
  }
  return N;
}

std::vector<long long> closed_point_counts(const CurveModel& m, int max_degree) {
  if (max_degree > 12) throw ContractViolation("closed_point_counts: max_degree cap is 12");
  std::vector<long long> S(max_degree + 1, 0);
  for (int k = 1; k <= max_degree; ++k) S[k] = point_count(m, k);
  return invert_point_counts(S);
}

std::vector<ClosedPoint> p1_places_of_degree(const FqPtr& F, int d) {
  std::vector<ClosedPoint> out;
  for (const auto& pi : series::monic_irreducibles(F, d)) out.push_back(ClosedPoint::finite(pi));
  if (d == 1) out.push_back(ClosedPoint::infinity(F));
  return out;
}

ZetaSeries zeta_from_counts(const CurveModel& m, int N) {
  if (N > 12) throw ContractViolation("zeta_from_counts: N cap is 12");
  const FqPtr F = model_field(m);
  std::vector<long long> S(N + 1, 0);
  for (int k = 1; k <= N; ++k) S[k] = point_count(m, k);
  // Newton recurrence for exp(sum S_k T^k / k)
  std::vector<long long> c(N + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= N; ++n) {
    long long sum = 0;
    for (int k = 1; k <= n; ++k) sum = checked_add(sum, checked_mul(S[k], c[n - k]));
    if (sum % n != 0) throw InstabilityError("zeta_from_counts: non-integral coefficient");
    c[n] = sum / n;
  }
  ZetaSeries Z(F->q(), 0, std::move(c));
  const long long q = F->q();
  std::vector<long long> den = {1, -(1 + q), q};  // (1-T)(1-qT)
  Z.try_fit(den, 2 * model_genus(m));
  return Z;
}

ZetaSeries zeta_dp_from_place_counts(long long q, const std::vector<long long>& N, int cap) {
  std::vector<long long> ways(static_cast<size_t>(cap) + 1, 0);
  ways[0] = 1;
  for (int d = 1; d <= cap && d < static_cast<int>(N.size()); ++d) {
    if (N[static_cast<size_t>(d)] == 0) continue;
    std::vector<long long> next(static_cast<size_t>(cap) + 1, 0);
    for (int base = 0; base <= cap; ++base) {
      if (ways[static_cast<size_t>(base)] == 0) continue;
      for (long r = 0; base + r * d <= cap; ++r) {
        auto& slot = next[static_cast<size_t>(base + r * d)];
        slot = checked_add(slot, checked_mul(ways[static_cast<size_t>(base)],
                                             multiset_count(N[static_cast<size_t>(d)], r)));
      }
    }
    ways = std::move(next);
  }
  return ZetaSeries(q, 0, std::move(ways));
}

ZetaSeries zeta_effective_divisor_route(const CurveModel& m, int N) {
  auto counts = closed_point_counts(m, N);
  return zeta_dp_from_place_counts(model_field(m)->q(), counts, N);
}

std::vector<FqRat> rr_space_basis(const Divisor& D) {
  const FqPtr F = D.F;
  FqHandle h{F};
  long degD = D.deg();
  std::vector<FqRat> basis;
  if (degD < 0) return basis;
  Poly<FqHandle> gnum = Poly<FqHandle>::constant(h, F->one());
  Poly<FqHandle> gden = gnum;
  for (const auto& [x, n] : D.m) {
    if (x.inf) continue;
    for (long i = 0; i < std::abs(n); ++i) {
      if (n > 0)
        gnum = gnum * x.pi;
      else
        gden = gden * x.pi;
    }
  }
  // f_j = t^j * gden / gnum
  for (long j = 0; j <= degD; ++j) {
    auto tj = Poly<FqHandle>::monomial(h, F->one(), static_cast<int>(j));
    basis.emplace_back(tj * gden, gnum);
  }
  return basis;
}

long l_dim(const Divisor& D) {
  long d = D.deg();
  return d < 0 ? 0 : d + 1;
}

Divisor canonical_divisor(const FqPtr& F) {
  Divisor K(F);
  K.set(ClosedPoint::infinity(F), -2);
  return K;
}

bool functional_equation_check(const ZetaSeries& Z, int genus) {
  if (!Z.fit) throw ContractViolation("functional_equation_check: missing rational fit");
  const auto& P = Z.fit->num;
  int degP = static_cast<int>(P.size()) - 1;
  while (degP > 0 && P[static_cast<size_t>(degP)] == 0) --degP;
  if (degP > 2 * genus) return false;
  auto pc = [&](int i) { return i >= 0 && i < static_cast<int>(P.size()) ? P[static_cast<size_t>(i)] : 0; };
  for (int i = 0; i <= 2 * genus; ++i) {
    long long lhs, rhs;
    if (i >= genus) {
      lhs = pc(i);
      rhs = checked_mul(pc(2 * genus - i), checked_pow(Z.q, i - genus));
    } else {
      lhs = checked_mul(pc(i), checked_pow(Z.q, genus - i));
      rhs = pc(2 * genus - i);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace adelic::curve
