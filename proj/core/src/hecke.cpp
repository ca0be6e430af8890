#include "adelic/hecke.hpp"

namespace adelic::hecke {

using series::ClosedPoint;
using series::FqRat;

ZetaSeries tate_local(long n, int cap, long long q) {
  if (cap > 64) throw ContractViolation("tate_local: cap is 64");
  long lo = std::min(n, 0L);
  std::vector<long long> c(static_cast<size_t>(cap + 1 - lo), 0);
  for (long m = n; m <= cap; ++m) c[static_cast<size_t>(m - lo)] = 1;
  ZetaSeries Z(q, lo, std::move(c));
  Z.fit = ZetaSeries::Fit{{}, {1, -1}};  // T^n/(1-T)
  Z.fit->num.assign(static_cast<size_t>(std::max(n, 0L)) + 1, 0);
  Z.fit->num.back() = 1;
  return Z;
}

ZetaSeries dirichlet_factor(const FqPtr& F, int cap) {
  const long long q = F->q();
  std::vector<long long> c(static_cast<size_t>(cap) + 1, 0);
  long long v = 1;
  for (int m = 0; m <= cap; ++m) {
    c[static_cast<size_t>(m)] = v;
    if (m < cap) v = checked_mul(v, q);
  }
  ZetaSeries Z(q, 0, std::move(c));
  Z.try_fit({1, -q}, 0);
  return Z;
}

MultiplicativeIntegrand MultiplicativeIntegrand::window_table(FnTable f, adeles::AdeleWindow W,
                                                              long level) {
  if (W.blocks().size() != 1 || !W.blocks()[0].x.inf)
    throw ContractViolation("window_table: expected a single local window at infinity");
  if (level > W.blocks()[0].hi)
    throw ContractViolation("window_table: constancy level exceeds the window");
  MultiplicativeIntegrand m;
  m.kind = Kind::WindowTable;
  m.table = std::move(f);
  m.window = std::move(W);
  m.constancy_level = level;
  return m;
}

DiscretePart DiscretePart::delta_list(std::vector<FqRat> elems) {
  DiscretePart d;
  d.kind = Kind::DeltaList;
  for (const auto& b : elems) {
    if (b.is_zero()) throw ContractViolation("DiscretePart: elements must be nonzero");
    if (b.num.deg() == 0 && b.den.deg() == 0) {
      // A'' meets the constants in exactly {1}
      auto h = b.num.h;
      if (!h.eq(b.num.coeff(0), b.den.coeff(0)))
        throw ContractViolation("DiscretePart: the only constant allowed is 1");
    }
  }
  d.elems = std::move(elems);
  return d;
}

namespace {

// valuation at infinity of a discrete element
long v_inf(const FqRat& b) { return static_cast<long>(b.den.deg()) - b.num.deg(); }

}  // namespace

HeckeZeta hecke_zeta(const FqPtr& F, const DiscretePart& f0, const MultiplicativeIntegrand& f1,
                     int cap) {
  if (cap > 32) throw ContractViolation("hecke_zeta: cap is 32");
  if (f1.kind != MultiplicativeIntegrand::Kind::IdealChar)
    throw ContractViolation("hecke_zeta: window-table integrands go through hecke_zeta_table");
  const long long q = F->q();
  const long n = f1.n;
  long lo = std::min(n, 0L);
  std::vector<long long> c(static_cast<size_t>(cap + 1 - lo), 0);
  std::vector<long long> pairs(c.size(), 0);
  for (long m = lo; m <= cap; ++m) {
    long long acc = 0, contributing = 0;
    if (f0.kind == DiscretePart::Kind::MonicPolys) {
      // f1(b pi^m u) = [v(b) + m >= n], v(b) = -deg b on monic b
      long long qd = 1;
      for (long d = 0; d <= m - n; ++d) {
        acc = checked_add(acc, qd);
        contributing = checked_add(contributing, qd);
        qd = checked_mul(qd, q);
      }
    } else {
      for (const auto& b : f0.elems) {
        if (v_inf(b) + m >= n) {
          acc = checked_add(acc, 1);
          contributing = checked_add(contributing, 1);
        }
      }
    }
    c[static_cast<size_t>(m - lo)] = acc;
    pairs[static_cast<size_t>(m - lo)] = contributing;
  }
  HeckeZeta out{ZetaSeries(q, lo, std::move(c)), std::move(pairs)};
  return out;
}

HeckeZetaTable hecke_zeta_table(const FqPtr& F, const DiscretePart& f0,
                                const MultiplicativeIntegrand& f1, int cap) {
  if (f1.kind != MultiplicativeIntegrand::Kind::WindowTable)
    throw ContractViolation("hecke_zeta_table: needs a window-table integrand");
  const auto& W = *f1.window;
  const auto& tab = *f1.table;
  const long q = F->q();
  const long p = F->p();
  const long win_lo = W.blocks()[0].lo;
  const long win_hi = W.blocks()[0].hi;
  auto inf = ClosedPoint::infinity(F);
  FqHandle h{F};

  HeckeZetaTable out;
  out.lo = win_lo;
  for (long m = win_lo; m <= cap; ++m) {
    CycloValue coeff(p);
    // discrete elements with v(b) + m >= win_lo can meet the support
    long max_deg = m - win_lo;
    std::vector<FqRat> bs;
    if (f0.kind == DiscretePart::Kind::MonicPolys) {
      for (long d = 0; d <= max_deg; ++d) {
        long long count = 1;
        for (long i = 0; i < d; ++i) {
          count *= q;
          if (count > (1 << 16)) throw ContractViolation("hecke_zeta_table: discrete part too large");
        }
        for (long long idx = 0; idx < count; ++idx) {
          std::vector<algebra::Fq> pc(static_cast<size_t>(d) + 1, 0);
          long long v = idx;
          for (long i = 0; i < d; ++i) {
            pc[static_cast<size_t>(i)] = static_cast<algebra::Fq>(v % q);
            v /= q;
          }
          pc[static_cast<size_t>(d)] = F->one();
          bs.emplace_back(Poly<FqHandle>(h, pc), Poly<FqHandle>::constant(h, F->one()));
        }
      }
    } else {
      for (const auto& b : f0.elems)
        if (v_inf(b) + m >= win_lo) bs.push_back(b);
    }
    for (const auto& b : bs) {
      long vb = v_inf(b);
      // constancy: b pi^m u depends on u modulo 1 + z^j O with
      // j = level - (v(b) + m)
      long j = std::max(0L, f1.constancy_level - (vb + m));
      long long cosets = (j == 0) ? 1 : (q - 1);
      for (long i = 1; i < j; ++i) cosets *= q;
      Rational measure(1, cosets);
      // unit representatives: lambda * (1 + a_1 z + ... + a_{j-1} z^{j-1})
      long long reps = cosets;
      for (long long r = 0; r < reps; ++r) {
        // decode representative
        long long rest = r;
        algebra::Fq lambda = F->one();
        std::vector<algebra::Fq> a(static_cast<size_t>(std::max(0L, j - 1)), 0);
        if (j >= 1) {
          lambda = static_cast<algebra::Fq>(1 + rest % (q - 1));
          rest /= (q - 1);
          for (long i = 0; i + 1 < j; ++i) {
            a[static_cast<size_t>(i)] = static_cast<algebra::Fq>(rest % q);
            rest /= q;
          }
        }
        // u(z) as a rational function of t: z = 1/t
        long width = std::max(0L, j - 1);
        std::vector<algebra::Fq> U(static_cast<size_t>(width) + 1, 0);
        U[static_cast<size_t>(width)] = lambda;  // lambda * t^width
        for (long i = 1; i <= width; ++i)
          U[static_cast<size_t>(width - i)] = F->mul(lambda, a[static_cast<size_t>(i - 1)]);
        FqRat u_fn(Poly<FqHandle>(h, U),
                   Poly<FqHandle>::monomial(h, F->one(), static_cast<int>(width)));
        // x = b * z^m * u
        FqRat zm = m >= 0 ? FqRat(Poly<FqHandle>::constant(h, F->one()),
                                  Poly<FqHandle>::monomial(h, F->one(), static_cast<int>(m)))
                          : FqRat(Poly<FqHandle>::monomial(h, F->one(), static_cast<int>(-m)),
                                  Poly<FqHandle>::constant(h, F->one()));
        FqRat x = b * zm * u_fn;
        if (v_inf(x) < win_lo) continue;  // outside the bounded support
        auto coords = series::window_coords(x, inf, win_lo, win_hi);
        auto val = tab.at(W.space().index(coords));
        coeff += val.scaled(measure);
      }
    }
    out.coeffs.push_back(coeff);
  }
  return out;
}

bool regrouping_consistent(const FqPtr& F, long n, int cap) {
  const long long q = F->q();
  long lo = std::min(n, 0L);
  // form B: sum over b, then over classes c with v(c) = m; term [v(b)+m >= n]
  auto formB = hecke_zeta(F, DiscretePart::monic_polys(), MultiplicativeIntegrand::ideal_char(n), cap);
  // form A: sum over b, then over classes a with f1(a) != 0, exponent
  // v(a) - v(b); the reindexing a = b c makes the exponent v(a) + deg b
  std::vector<long long> a_coeffs(static_cast<size_t>(cap + 1 - lo), 0);
  for (long m = lo; m <= cap; ++m) {
    long long acc = 0, qd = 1;
    for (long d = 0;; ++d) {
      long va = m - d;  // v(a) = m + v(b), v(b) = -d
      if (va < n) break;
      acc = checked_add(acc, qd);
      qd = checked_mul(qd, q);
    }
    a_coeffs[static_cast<size_t>(m - lo)] = acc;
  }
  for (size_t i = 0; i < a_coeffs.size(); ++i)
    if (a_coeffs[i] != formB.series.c[i]) return false;
  return true;
}

bool poisson_check(const adeles::AdeleWindow& W, const linalg::Mat& lattice_rows,
                   const FnTable& f) {
  const auto F = W.field();
  if (!f.space().compatible(W.space())) throw ContractViolation("poisson_check: domain mismatch");
  auto Wd = adeles::dual_window(W);
  auto P = adeles::residue_pairing(W, Wd);
  auto fhat = harmonic::fourier(f, P);
  auto perp = harmonic::orthogonal_rows(lattice_rows, P);

  auto span_sum = [&](const FnTable& g, const std::vector<std::vector<algebra::Fq>>& rows,
                      const qspace::Space& sp) {
    CycloValue acc(g.p());
    std::uint64_t combos = 1;
    for (size_t i = 0; i < rows.size(); ++i) combos *= static_cast<std::uint64_t>(F->q());
    for (std::uint64_t ci = 0; ci < combos; ++ci) {
      std::vector<algebra::Fq> v(static_cast<size_t>(sp.dim), 0);
      std::uint64_t rest = ci;
      for (const auto& row : rows) {
        algebra::Fq lambda = static_cast<algebra::Fq>(rest % static_cast<std::uint64_t>(F->q()));
        rest /= static_cast<std::uint64_t>(F->q());
        if (lambda == 0) continue;
        for (size_t i = 0; i < v.size(); ++i) v[i] = F->add(v[i], F->mul(lambda, row[i]));
      }
      acc += g.at(sp.index(v));
    }
    return acc;
  };

  std::vector<std::vector<algebra::Fq>> lat;
  for (size_t i = 0; i < lattice_rows.rows; ++i) {
    std::vector<algebra::Fq> r(lattice_rows.cols);
    for (size_t j = 0; j < lattice_rows.cols; ++j) r[j] = lattice_rows.at(i, j);
    lat.push_back(std::move(r));
  }
  auto lhs = span_sum(f, lat, W.space()).scaled(Rational::q_pow(F->q(), static_cast<long>(perp.size())));
  auto rhs = span_sum(fhat, perp, Wd.space());
  return lhs == rhs;
}

namespace {

// substitute T -> 1/(qT) into num/den over Q and clear denominators
std::pair<Poly<QHandle>, Poly<QHandle>> substitute_dual(const std::vector<long long>& num,
                                                        const std::vector<long long>& den,
                                                        long long q) {
  QHandle h;
  int D = static_cast<int>(std::max(num.size(), den.size())) - 1;
  auto lift = [&](const std::vector<long long>& v) {
    std::vector<Rational> c(static_cast<size_t>(D) + 1, Rational(0));
    for (size_t i = 0; i < v.size(); ++i)
      c[static_cast<size_t>(D - static_cast<int>(i))] = Rational(v[i]) * Rational::q_pow(q, -static_cast<long>(i));
    return Poly<QHandle>(h, c);
  };
  return {lift(num), lift(den)};
}

}  // namespace

FeReport functional_equation(const FqPtr& F, const DiscretePart& f0,
                             const MultiplicativeIntegrand& f1, int cap) {
  if (f1.kind != MultiplicativeIntegrand::Kind::IdealChar)
    throw ContractViolation("functional_equation: supported for fractional-ideal integrands");
  auto hz = hecke_zeta(F, f0, f1, cap);
  const long long q = F->q();
  ZetaSeries Z = hz.series;
  if (!Z.fit) {
    // T^n / ((1-T)(1-qT)) for the standard pair; general delta-lists must fit too
    std::vector<long long> den = {1, -(1 + q), q};
    if (!Z.try_fit(den, std::max<int>(static_cast<int>(std::max(f1.n, 0L)), cap / 2)))
      throw ContractViolation("functional_equation: fit failure at the given cap");
  }
  QHandle h;
  auto lift = [&](const std::vector<long long>& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (auto x : v) c.emplace_back(x);
    return Poly<QHandle>(h, c);
  };
  auto [num_d, den_d] = substitute_dual(Z.fit->num, Z.fit->den, q);
  // Z(1/(qT)) / Z(T) = (num_d * den) / (den_d * num) must be c * T^k
  auto P1 = num_d * lift(Z.fit->den);
  auto P2 = den_d * lift(Z.fit->num);
  int a = 0;
  while (a <= P1.deg() && h.is_zero(P1.coeff(a))) ++a;
  int b = 0;
  while (b <= P2.deg() && h.is_zero(P2.coeff(b))) ++b;
  FeReport rep;
  rep.zeta = Z;
  rep.monomial_power = a - b;
  rep.monomial_coeff = P1.coeff(a) / P2.coeff(b);
  bool monomial = P1.deg() - a == P2.deg() - b;
  if (monomial) {
    for (int i = 0; i + b <= P2.deg(); ++i) {
      if (!(P1.coeff(a + i) == P2.coeff(b + i) * rep.monomial_coeff)) {
        monomial = false;
        break;
      }
    }
  }
  if (!monomial) throw InstabilityError("functional_equation: dual quotient is not monomial");
  // shifted pairs: Z_n(1/(qT)) = q^(1-n) T^(2-2n) Z_n(T)
  long n = f1.n;
  rep.equation_holds =
      rep.monomial_power == 2 - 2 * n && rep.monomial_coeff == Rational::q_pow(q, 1 - n);
  return rep;
}

FnTable discrete_part_transform_windowed(const adeles::AdeleWindow& W, int deg_cap) {
  const auto F = W.field();
  if (W.blocks().size() != 1 || !W.blocks()[0].x.inf)
    throw ContractViolation("discrete_part_transform_windowed: local window at infinity expected");
  FqHandle h{F};
  auto inf = ClosedPoint::infinity(F);
  const long win_lo = W.blocks()[0].lo, win_hi = W.blocks()[0].hi;
  FnTable f(W.space());
  const auto one = CycloValue::one(F->p());
  long max_deg = std::min<long>(deg_cap, -win_lo);
  for (long d = 0; d <= max_deg; ++d) {
    long long count = 1;
    for (long i = 0; i < d; ++i) count *= F->q();
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<algebra::Fq> pc(static_cast<size_t>(d) + 1, 0);
      long long v = idx;
      for (long i = 0; i < d; ++i) {
        pc[static_cast<size_t>(i)] = static_cast<algebra::Fq>(v % F->q());
        v /= F->q();
      }
      pc[static_cast<size_t>(d)] = F->one();
      FqRat b(Poly<FqHandle>(h, pc), Poly<FqHandle>::constant(h, F->one()));
      auto coords = series::window_coords(b, inf, win_lo, win_hi);
      f.set(W.space().index(coords), one);
    }
  }
  auto Wd = adeles::dual_window(W);
  return harmonic::fourier(f, adeles::residue_pairing(W, Wd));
}

}  // namespace adelic::hecke
