#pragma once

#include "adelic/expand.hpp"

namespace adelic::series {

// Bivariate polynomial over F_q, stored by t-level: lev[j] is the coefficient
// of t^j, a polynomial in u.
struct BivPoly {
  FqPtr F;
  std::vector<Poly<FqHandle>> lev;

  explicit BivPoly(FqPtr field) : F(std::move(field)) {}
  BivPoly(FqPtr field, std::vector<Poly<FqHandle>> levels) : F(std::move(field)), lev(std::move(levels)) {
    trim();
  }
  static BivPoly constant(const FqPtr& F, algebra::Fq c) {
    BivPoly p(F);
    if (c != 0) p.lev = {Poly<FqHandle>::constant(FqHandle{F}, c)};
    return p;
  }
  static BivPoly var_u(const FqPtr& F) {
    BivPoly p(F);
    p.lev = {Poly<FqHandle>::x(FqHandle{F})};
    return p;
  }
  static BivPoly var_t(const FqPtr& F) {
    FqHandle h{F};
    BivPoly p(F);
    p.lev = {Poly<FqHandle>::zero(h), Poly<FqHandle>::constant(h, F->one())};
    return p;
  }
  static BivPoly from_u_poly(Poly<FqHandle> c) {
    BivPoly p(c.h.f);
    if (!c.is_zero()) p.lev = {std::move(c)};
    return p;
  }

  void trim() {
    while (!lev.empty() && lev.back().is_zero()) lev.pop_back();
  }
  bool is_zero() const { return lev.empty(); }
  int deg_t() const { return static_cast<int>(lev.size()) - 1; }
  Poly<FqHandle> level(int j) const {
    if (j < 0 || j > deg_t()) return Poly<FqHandle>(FqHandle{F});
    return lev[static_cast<size_t>(j)];
  }

  BivPoly operator+(const BivPoly& o) const;
  BivPoly operator-() const;
  BivPoly operator-(const BivPoly& o) const { return *this + (-o); }
  BivPoly operator*(const BivPoly& o) const;
  bool operator==(const BivPoly& o) const;

  // P(U, T) for bivariate substitutions U, T of the two variables
  BivPoly compose(const BivPoly& U, const BivPoly& T) const;

  std::string str() const;
};

// Quotient of bivariate polynomials. No bivariate gcd reduction is attempted;
// equality is by cross-multiplication.
struct BivRatFn {
  BivPoly num, den;

  BivRatFn(BivPoly n, BivPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw ContractViolation("BivRatFn: zero denominator");
  }
  static BivRatFn from_poly(BivPoly p) {
    auto F = p.F;
    return BivRatFn(std::move(p), BivPoly::constant(F, F->one()));
  }
  bool is_zero() const { return num.is_zero(); }
  BivRatFn operator+(const BivRatFn& o) const {
    return BivRatFn(num * o.den + o.num * den, den * o.den);
  }
  BivRatFn operator*(const BivRatFn& o) const { return BivRatFn(num * o.num, den * o.den); }
  BivRatFn operator-() const { return BivRatFn(-num, den); }
  BivRatFn operator-(const BivRatFn& o) const { return *this + (-o); }
  BivRatFn operator/(const BivRatFn& o) const {
    if (o.is_zero()) throw ContractViolation("BivRatFn: division by zero");
    return BivRatFn(num * o.den, den * o.num);
  }
  bool operator==(const BivRatFn& o) const { return (num * o.den) == (o.num * den); }
};

// A flag at the origin: the curve's local equation c and an admissible
// transversal coordinate. Supported shapes: c = t (transversal u + beta*t),
// c = u (transversal t), c = t - phi(u) with phi(0) = 0 (transversal u).
struct Flag {
  enum class Kind { T, U, TPhi };
  Kind kind = Kind::T;
  Poly<FqHandle> phi;       // TPhi only
  long transversal_beta = 0;  // T only

  static Flag curve_t() { return Flag{}; }
  static Flag curve_u() {
    Flag f;
    f.kind = Kind::U;
    return f;
  }
  static Flag curve_t_phi(Poly<FqHandle> phi);
  static Flag curve_t_transversal(long beta) {
    Flag f;
    f.transversal_beta = beta;
    return f;
  }
  // -1 when rewriting du^dt to the flag coordinates flips orientation
  int orientation_sign() const { return kind == Kind::U ? -1 : 1; }
};

// Exact t'-level decomposition of a rational function in the flag
// coordinates: f = sum_{j >= val_t} level_j(u') t'^j with rational levels.
struct LevelView {
  long val_t = 0;
  std::vector<FqRat> levels;  // levels[i] is the coefficient of t'^(val_t + i)
  const FqRat& at(long j) const { return levels.at(static_cast<size_t>(j - val_t)); }
};
LevelView levels_at_flag(const BivRatFn& f, const Flag& flag, long levels_needed);

// Truncated iterated expansion in k(P)((u'))((t'')): outer window
// [val_t, val_t + prec_t), each level certified on a u'-window of length
// prec_u above its own valuation.
struct IteratedSeries2D {
  FqPtr F;
  long val_t = 0;
  long hi_t = 0;
  std::vector<FqLaurent> levels;

  const FqLaurent& level(long j) const {
    if (j >= hi_t) throw ContractViolation("IteratedSeries2D: level beyond certified window");
    if (j < val_t) return zero_level();
    return levels[static_cast<size_t>(j - val_t)];
  }
  long val_u_at(long j) const {
    auto v = level(j).valuation();
    if (!v) throw InstabilityError("IteratedSeries2D: level vanishes on its window");
    return *v;
  }

 private:
  const FqLaurent& zero_level() const;
  mutable std::optional<FqLaurent> zero_;
};

IteratedSeries2D expand_rational_2d(const BivRatFn& f, const Flag& flag, long prec_t, long prec_u);

// A rational 2-form g * du^dt with the parsed factor structure of the
// denominator retained for polar-branch detection.
struct TwoForm {
  BivRatFn g;
  std::vector<BivPoly> den_factors;
};

// res of the form at the flag: the (u'^{-1}, t'^{-1}) coefficient of g
// rewritten as g' du'^dt', orientation sign included.
algebra::Fq residue_2d(const TwoForm& w, const Flag& flag);

}  // namespace adelic::series
