#include <random>

#include "adelic/curve.hpp"
#include "adelic/expand.hpp"
#include "adelic/parse.hpp"
#include "adelic/series2d.hpp"
#include "doctest.h"

using namespace adelic;
using namespace adelic::algebra;
using namespace adelic::series;

namespace {

FqRat rat(const FqPtr& F, const std::string& text) { return parse::rational_1d(F, text); }

ClosedPoint place(const FqPtr& F, const std::string& text) {
  if (text == "inf") return ClosedPoint::infinity(F);
  return ClosedPoint::finite(parse::poly_1d(F, text));
}

}  // namespace

TEST_CASE("geometric series at the place t") {
  auto F2 = FqField::make(2, 1);
  auto f = rat(F2, "1/(1+t)");  // 1/(1-t) over F_2
  auto x = place(F2, "t");
  auto s = expand_deg1(f, x, 0, 4);
  for (long e = 0; e < 4; ++e) CHECK(s.coeff(e) == 1);
  CHECK(*s.valuation() == 0);

  auto F3 = FqField::make(3, 1);
  auto g = rat(F3, "1/(1+2*t)");  // 1/(1-t) over F_3
  auto sg = expand_deg1(g, place(F3, "t"), 0, 4);
  for (long e = 0; e < 4; ++e) CHECK(sg.coeff(e) == 1);
}

TEST_CASE("t^2 at infinity has valuation -2") {
  auto F2 = FqField::make(2, 1);
  auto f = rat(F2, "t^2");
  auto s = expand_infinity(f, -3, 2);
  CHECK(*s.valuation() == -2);
  CHECK(s.coeff(-2) == 1);
  CHECK(ord_at(f, ClosedPoint::infinity(F2)) == -2);
}

TEST_CASE("1/(t(t+1)) over F_2 at the place t") {
  auto F2 = FqField::make(2, 1);
  auto f = rat(F2, "1/(t^2+t)");
  auto s = expand_deg1(f, place(F2, "t"), -1, 2);
  CHECK(s.coeff(-1) == 1);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == 1);
  CHECK(ord_at(f, place(F2, "t")) == -1);
}

TEST_CASE("window contract: coefficients beyond hi refuse") {
  auto F2 = FqField::make(2, 1);
  auto s = expand_deg1(rat(F2, "1/(1+t)"), place(F2, "t"), 0, 3);
  CHECK_THROWS_AS(s.coeff(3), ContractViolation);
}

TEST_CASE("residues: basic catalog") {
  auto F2 = FqField::make(2, 1);
  CHECK(residue_trace_dt(rat(F2, "1/t"), place(F2, "t")) == 1);
  CHECK(residue_trace_dt(rat(F2, "1/(t^2+t)"), place(F2, "t")) == 1);
  // 1/t at infinity: residue -1; total over P^1 is zero
  auto rinf = residue_trace_dt(rat(F2, "1/t"), ClosedPoint::infinity(F2));
  CHECK(rinf == F2->neg(F2->one()));
  CHECK(F2->add(residue_trace_dt(rat(F2, "1/t"), place(F2, "t")), rinf) == 0);
}

TEST_CASE("residue at a degree-2 place uses the trace") {
  auto F2 = FqField::make(2, 1);
  auto f = rat(F2, "1/(t^2+t+1)");
  auto x = place(F2, "t^2+t+1");
  // simple pole with residue 1/pi'(alpha) = 1; the trace to F_2 vanishes
  CHECK(residue_trace_dt(f, x) == 0);
  CHECK(residue_trace_dt(f, ClosedPoint::infinity(F2)) == 0);
}

TEST_CASE("1D residue theorem on random rational functions") {
  std::mt19937 rng(23);
  for (long q : {2L, 3L, 5L}) {
    auto F = FqField::make(q, 1);
    FqHandle h{F};
    std::uniform_int_distribution<long> cdist(0, q - 1);
    std::uniform_int_distribution<int> ddist(0, 3);
    auto random_poly = [&](int maxdeg) {
      std::vector<Fq> c(static_cast<size_t>(ddist(rng) % (maxdeg + 1)) + 1);
      for (auto& v : c) v = static_cast<Fq>(cdist(rng));
      return Poly<FqHandle>(h, c);
    };
    int done = 0;
    while (done < 25) {
      auto num = random_poly(3);
      auto den = random_poly(2) * random_poly(2) * random_poly(2);
      if (num.is_zero() || den.is_zero()) continue;
      FqRat f(num, den);
      if (f.is_zero()) continue;
      ++done;
      Fq total = residue_trace_dt(f, ClosedPoint::infinity(F));
      for (const auto& [x, mult] : polar_places(f)) {
        if (x.inf) continue;  // already counted
        total = F->add(total, residue_trace_dt(f, x));
      }
      CHECK(total == 0);
    }
  }
}

TEST_CASE("expansion is a ring homomorphism on certified windows") {
  std::mt19937 rng(5);
  for (long q : {2L, 3L, 5L}) {
    auto F = FqField::make(q, 1);
    FqHandle h{F};
    std::uniform_int_distribution<long> cdist(0, q - 1);
    auto random_poly = [&](int deg) {
      std::vector<Fq> c(static_cast<size_t>(deg) + 1);
      for (auto& v : c) v = static_cast<Fq>(cdist(rng));
      return Poly<FqHandle>(h, c);
    };
    auto x = ClosedPoint::finite(Poly<FqHandle>::x(h));
    int done = 0;
    while (done < 20) {
      auto a = random_poly(3), b = random_poly(2), c = random_poly(3), d = random_poly(2);
      if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) continue;
      FqRat f(a, b), g(c, d);
      if (f.is_zero() || g.is_zero()) continue;
      ++done;
      auto sf = expand_deg1(f, x, -6, 6);
      auto sg = expand_deg1(g, x, -6, 6);
      auto sfg = expand_deg1(f * g, x, -12, 6);
      auto prod = sf * sg;
      for (long e = prod.lo; e < prod.hi; ++e) CHECK(prod.coeff(e) == sfg.coeff(e));
      auto ssum = expand_deg1(f + g, x, -6, 6);
      auto sum = sf + sg;
      for (long e = sum.lo; e < sum.hi; ++e) CHECK(sum.coeff(e) == ssum.coeff(e));
      CHECK(ord_at(f * g, x) == ord_at(f, x) + ord_at(g, x));
    }
  }
}

TEST_CASE("2D expansion: monomial flags") {
  auto F2 = FqField::make(2, 1);
  // 1/(ut) along the curve t = 0
  auto f = parse::rational_2d(F2, "1/(u*t)");
  auto s = expand_rational_2d(f, Flag::curve_t(), /*prec_t=*/3, /*prec_u=*/3);
  CHECK(s.val_t == -1);
  CHECK(s.val_u_at(-1) == -1);
  CHECK(s.level(-1).coeff(-1) == 1);

  // 1/(u(t-u)) along t - u = 0: substitute t = t' + u
  auto g = parse::rational_2d(F2, "1/(u*(t+u))");  // t - u over F_2
  auto s2 = expand_rational_2d(g, Flag::curve_t_phi(parse::poly_in_u(F2, "u")), 3, 3);
  CHECK(s2.val_t == -1);
  CHECK(s2.level(-1).coeff(-1) == 1);

  // 1/(u+t) along t = 0: u^{-1} - u^{-2} t + u^{-3} t^2 - ...
  auto F3 = FqField::make(3, 1);
  auto w = parse::rational_2d(F3, "1/(u+t)");
  auto s3 = expand_rational_2d(w, Flag::curve_t(), 4, 4);
  CHECK(s3.level(0).coeff(-1) == 1);
  CHECK(s3.level(1).coeff(-2) == F3->neg(1));
  CHECK(s3.level(2).coeff(-3) == 1);
}

TEST_CASE("2D residues with orientation") {
  auto F2 = FqField::make(2, 1);
  auto F3 = FqField::make(3, 1);
  // du^dt/(ut) along t=0 gives 1; along u=0 gives -1
  auto w2 = parse::two_form(F3, "1/(u*t) * du^dt");
  CHECK(residue_2d(w2, Flag::curve_t()) == F3->one());
  CHECK(residue_2d(w2, Flag::curve_u()) == F3->neg(F3->one()));
  // du^dt/(ut(u+t)) along t=0 at the origin: zero
  auto w3 = parse::two_form(F2, "1/(u*t*(u+t)) * du^dt");
  CHECK(residue_2d(w3, Flag::curve_t()) == 0);
}

TEST_CASE("2D residue independent of admissible transversal") {
  auto F3 = FqField::make(3, 1);
  for (const char* txt : {"1/(u*t)", "(u+2*t)/(u*t*(t+2*u))", "(1+u)/(u^2*t)"}) {
    auto w = parse::two_form(F3, std::string(txt) + " * du^dt");
    auto base = residue_2d(w, Flag::curve_t());
    for (long beta = 1; beta < 3; ++beta) {
      auto r = residue_2d(w, Flag::curve_t_transversal(beta));
      CHECK(r == base);
    }
  }
}

TEST_CASE("unsupported flags and malformed forms are rejected") {
  auto F2 = FqField::make(2, 1);
  // curve not through the origin
  CHECK_THROWS_AS(Flag::curve_t_phi(parse::poly_in_u(F2, "u+1")), ContractViolation);
  // missing volume element
  CHECK_THROWS_AS(parse::two_form(F2, "1/(u*t)"), ContractViolation);
  // denominator that is not a product of polynomial factors
  CHECK_THROWS_AS(parse::two_form(F2, "1/(u/t) * du^dt"), ContractViolation);
  // zero precision
  CHECK_THROWS_AS(expand_rational_2d(parse::rational_2d(F2, "1/(u*t)"), Flag::curve_t(), 0, 3),
                  ContractViolation);
}

TEST_CASE("rank-2 valuation is lexicographic and multiplicative") {
  auto F2 = FqField::make(2, 1);
  auto f = parse::rational_2d(F2, "u^2/t");
  auto g = parse::rational_2d(F2, "t^2/u");
  auto sf = expand_rational_2d(f, Flag::curve_t(), 3, 3);
  auto sg = expand_rational_2d(g, Flag::curve_t(), 3, 3);
  auto sfg = expand_rational_2d(f * g, Flag::curve_t(), 3, 3);
  CHECK(sf.val_t == -1);
  CHECK(sf.val_u_at(-1) == 2);
  CHECK(sg.val_t == 2);
  CHECK(sg.val_u_at(2) == -1);
  CHECK(sfg.val_t == sf.val_t + sg.val_t);
  CHECK(sfg.val_u_at(1) == sf.val_u_at(-1) + sg.val_u_at(2));
}
