#include <random>

#include "adelic/hecke.hpp"
#include "adelic/parse.hpp"
#include "doctest.h"

using namespace adelic;
using namespace adelic::hecke;
using algebra::CycloValue;
using algebra::FqField;

TEST_CASE("local Tate factor") {
  auto Z0 = tate_local(0, 6);
  for (int m = 0; m <= 6; ++m) CHECK(Z0.coeff(m) == 1);
  REQUIRE(Z0.fit.has_value());
  CHECK(Z0.fit->num == std::vector<long long>{1});
  CHECK(Z0.fit->den == std::vector<long long>{1, -1});

  auto Z2 = tate_local(2, 6);
  CHECK(Z2.coeff(0) == 0);
  CHECK(Z2.coeff(1) == 0);
  for (int m = 2; m <= 6; ++m) CHECK(Z2.coeff(m) == 1);
  CHECK(Z2.fit->num == std::vector<long long>{0, 0, 1});
}

TEST_CASE("discrete Dirichlet factor counts monic polynomials") {
  auto F2 = FqField::make(2, 1);
  auto Z = dirichlet_factor(F2, 6);
  for (int m = 0; m <= 6; ++m) CHECK(Z.coeff(m) == checked_pow(2, m));
  REQUIRE(Z.fit.has_value());
  CHECK(Z.fit->den == std::vector<long long>{1, -2});

  auto F3 = FqField::make(3, 1);
  CHECK(dirichlet_factor(F3, 4).coeff(3) == 27);
}

TEST_CASE("hecke zeta for the standard pair") {
  auto F2 = FqField::make(2, 1);
  auto hz = hecke_zeta(F2, DiscretePart::monic_polys(), MultiplicativeIntegrand::ideal_char(0), 8);
  std::vector<long long> expect = {1, 3, 7, 15, 31};
  for (int m = 0; m < 5; ++m) CHECK(hz.series.coeff(m) == expect[static_cast<size_t>(m)]);

  auto F3 = FqField::make(3, 1);
  auto hz3 = hecke_zeta(F3, DiscretePart::monic_polys(), MultiplicativeIntegrand::ideal_char(0), 6);
  CHECK(hz3.series.coeff(2) == 13);  // (3^3 - 1)/2

  // equals the product of the split factors
  auto split = dirichlet_factor(F3, 6) * tate_local(0, 6, 3);
  CHECK(hz3.series.same_coefficients(split));

  // contributing pair counts stay under the a-priori bound q^(m+1)
  for (size_t i = 0; i < hz3.contributing_pairs.size(); ++i)
    CHECK(hz3.contributing_pairs[i] <= checked_pow(3, static_cast<long>(i) + 1));
}

TEST_CASE("single-term discrete part reduces to the local factor") {
  auto F2 = FqField::make(2, 1);
  FqHandle h{F2};
  auto one = series::FqRat(Poly<FqHandle>::constant(h, 1), Poly<FqHandle>::constant(h, 1));
  auto hz = hecke_zeta(F2, DiscretePart::delta_list({one}), MultiplicativeIntegrand::ideal_char(0), 6);
  CHECK(hz.series.same_coefficients(tate_local(0, 6)));
}

TEST_CASE("A' delta-list coincides with the monic split when q = 2") {
  // over F_2 every nonzero polynomial is monic, so A' = A''; the delta-list
  // route over all nonzero polynomials of degree <= 3 must reproduce the
  // standard coefficients through T^3
  auto F2 = FqField::make(2, 1);
  FqHandle h{F2};
  std::vector<series::FqRat> aprime;
  for (long deg = 0; deg <= 3; ++deg) {
    for (long idx = 0; idx < (1 << deg); ++idx) {
      std::vector<algebra::Fq> c(static_cast<size_t>(deg) + 1, 0);
      for (long i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = static_cast<algebra::Fq>((idx >> i) & 1);
      c[static_cast<size_t>(deg)] = 1;
      aprime.emplace_back(Poly<FqHandle>(h, c), Poly<FqHandle>::constant(h, 1));
    }
  }
  auto viaList = hecke_zeta(F2, DiscretePart::delta_list(aprime), MultiplicativeIntegrand::ideal_char(0), 3);
  auto viaMonic = hecke_zeta(F2, DiscretePart::monic_polys(), MultiplicativeIntegrand::ideal_char(0), 3);
  for (long m = 0; m <= 3; ++m) CHECK(viaList.series.coeff(m) == viaMonic.series.coeff(m));
}

TEST_CASE("three-route agreement") {
  for (long q : {2L, 3L, 4L, 5L}) {
    auto F = q == 4 ? FqField::make(2, 2) : FqField::make(q, 1);
    curve::P1Model m{F};
    auto euler = curve::zeta_from_counts(m, 12);
    auto dirichlet = curve::zeta_effective_divisor_route(m, 12);
    auto hz = hecke_zeta(F, DiscretePart::monic_polys(), MultiplicativeIntegrand::ideal_char(0), 12);
    CHECK(euler.same_coefficients(dirichlet));
    CHECK(euler.same_coefficients(hz.series));
  }
}

TEST_CASE("regrouping consistency") {
  for (long q : {2L, 3L}) {
    auto F = FqField::make(q, 1);
    for (long n : {0L, 1L, 2L}) CHECK(regrouping_consistent(F, n, 10));
  }
}

TEST_CASE("functional equation for the standard pair") {
  for (long q : {2L, 3L, 4L, 5L}) {
    auto F = q == 4 ? FqField::make(2, 2) : FqField::make(q, 1);
    auto rep = functional_equation(F, DiscretePart::monic_polys(),
                                   MultiplicativeIntegrand::ideal_char(0), 16);
    CHECK(rep.equation_holds);
    CHECK(rep.monomial_power == 2);
    CHECK(rep.monomial_coeff == Rational(F->q()));
  }
}

TEST_CASE("functional equation for a shifted integrand") {
  auto F2 = FqField::make(2, 1);
  auto rep = functional_equation(F2, DiscretePart::monic_polys(),
                                 MultiplicativeIntegrand::ideal_char(2), 16);
  // Z_n(1/(qT)) = q^(1-n) T^(2-2n) Z_n(T)
  CHECK(rep.equation_holds);
  CHECK(rep.monomial_power == -2);
  CHECK(rep.monomial_coeff == Rational(1, 2));
}

TEST_CASE("poisson summation at window level") {
  auto F2 = FqField::make(2, 1);
  auto D = parse::divisor(F2, "0*(inf)");
  auto W = harmonic::standard_window(D);
  auto gamma = adeles::embedded_global_sections(W.d_high(), W);

  // f = delta_0
  auto d0 = harmonic::FnTable::delta(W.space(), 0);
  CHECK(poisson_check(W, gamma, d0));

  // f = char(A(D)) reproduces the Parseval counting
  auto charAD = harmonic::FnTable::char_mask(W.space(), W.subgroup_mask(D));
  CHECK(poisson_check(W, gamma, charAD));

  // random functions
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> dist(0, 1);
  for (int iter = 0; iter < 5; ++iter) {
    harmonic::FnTable f(W.space());
    for (std::uint64_t i = 0; i < f.size(); ++i)
      f.set(i, CycloValue::zeta_pow(2, dist(rng)).scaled(Rational(dist(rng) + 1)));
    CHECK(poisson_check(W, gamma, f));
  }
}

TEST_CASE("window-table integrand agrees with ideal characteristic combos") {
  auto F2 = FqField::make(2, 1);
  auto inf = series::ClosedPoint::infinity(F2);
  auto W = adeles::AdeleWindow::local(inf, -1, 2);
  auto sp = W.space();
  // char of O_P inside the window: exponents >= 0 free, coordinate at -1 zero
  curve::Divisor O(F2);
  auto f1_table = harmonic::FnTable::char_mask(sp, W.subgroup_mask(O));
  auto mi = MultiplicativeIntegrand::window_table(f1_table, W, 2);
  auto viaTable = hecke_zeta_table(F2, DiscretePart::monic_polys(), mi, 6);
  auto viaIdeal = hecke_zeta(F2, DiscretePart::monic_polys(), MultiplicativeIntegrand::ideal_char(0), 6);
  for (long m = 0; m <= 6; ++m) {
    auto got = viaTable.coeffs[static_cast<size_t>(m - viaTable.lo)];
    CHECK(got == CycloValue::rational(2, Rational(viaIdeal.series.coeff(m))));
  }
  // and char(pi O) = char(O) - (boundary layer): check the shifted ideal too
  curve::Divisor Dm1(F2);
  Dm1.set(inf, -1);
  auto shifted = MultiplicativeIntegrand::window_table(
      harmonic::FnTable::char_mask(sp, W.subgroup_mask(Dm1)), W, 2);
  auto viaTable1 = hecke_zeta_table(F2, DiscretePart::monic_polys(), shifted, 6);
  auto viaIdeal1 = hecke_zeta(F2, DiscretePart::monic_polys(), MultiplicativeIntegrand::ideal_char(1), 6);
  for (long m = 1; m <= 6; ++m) {
    auto got = viaTable1.coeffs[static_cast<size_t>(m - viaTable1.lo)];
    CHECK(got == CycloValue::rational(2, Rational(viaIdeal1.series.coeff(m))));
  }
}

TEST_CASE("windowed transform of the discrete part") {
  auto F2 = FqField::make(2, 1);
  auto inf = series::ClosedPoint::infinity(F2);
  auto W = adeles::AdeleWindow::local(inf, -2, 3);
  auto fhat = discrete_part_transform_windowed(W, 2);
  // the transform of a nonempty delta-sum has total mass = q^rank at zero
  CHECK(!fhat.is_zero());
}
