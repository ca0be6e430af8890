#include "adelic/series2d.hpp"

namespace adelic::series {

BivPoly BivPoly::operator+(const BivPoly& o) const {
  BivPoly r(F);
  r.lev.resize(std::max(lev.size(), o.lev.size()), Poly<FqHandle>(FqHandle{F}));
  for (size_t j = 0; j < r.lev.size(); ++j)
    r.lev[j] = level(static_cast<int>(j)) + o.level(static_cast<int>(j));
  r.trim();
  return r;
}

BivPoly BivPoly::operator-() const {
  BivPoly r(F);
  r.lev.reserve(lev.size());
  for (const auto& l : lev) r.lev.push_back(-l);
  return r;
}

BivPoly BivPoly::operator*(const BivPoly& o) const {
  BivPoly r(F);
  if (is_zero() || o.is_zero()) return r;
  r.lev.assign(lev.size() + o.lev.size() - 1, Poly<FqHandle>(FqHandle{F}));
  for (size_t i = 0; i < lev.size(); ++i) {
    if (lev[i].is_zero()) continue;
    for (size_t j = 0; j < o.lev.size(); ++j) r.lev[i + j] = r.lev[i + j] + lev[i] * o.lev[j];
  }
  r.trim();
  return r;
}

bool BivPoly::operator==(const BivPoly& o) const {
  if (lev.size() != o.lev.size()) return false;
  for (size_t j = 0; j < lev.size(); ++j)
    if (lev[j] != o.lev[j]) return false;
  return true;
}

BivPoly BivPoly::compose(const BivPoly& U, const BivPoly& T) const {
  // Horner in t with coefficients c_j(U)
  BivPoly acc(F);
  for (int j = deg_t(); j >= 0; --j) {
    BivPoly cj(F);
    const auto& c = lev[static_cast<size_t>(j)];
    for (int i = c.deg(); i >= 0; --i) cj = cj * U + BivPoly::constant(F, c.coeff(i));
    acc = acc * T + cj;
  }
  return acc;
}

std::string BivPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int j = 0; j <= deg_t(); ++j) {
    const auto& c = lev[static_cast<size_t>(j)];
    for (int i = 0; i <= c.deg(); ++i) {
      if (c.coeff(i) == 0) continue;
      if (!first) s += " + ";
      s += std::to_string(static_cast<long>(c.coeff(i)));
      if (i > 0) s += "*u^" + std::to_string(i);
      if (j > 0) s += "*t^" + std::to_string(j);
      first = false;
    }
  }
  return s;
}

Flag Flag::curve_t_phi(Poly<FqHandle> phi) {
  if (!phi.is_zero() && phi.coeff(0) != 0)
    throw ContractViolation("Flag: phi(0) must vanish for a curve through the origin");
  Flag f;
  f.kind = Kind::TPhi;
  f.phi = std::move(phi);
  return f;
}

namespace {

// rewrite a bivariate polynomial in the flag coordinates (u', t')
BivPoly to_flag_coords(const BivPoly& p, const Flag& flag) {
  const FqPtr F = p.F;
  switch (flag.kind) {
    case Flag::Kind::T: {
      if (flag.transversal_beta == 0) return p;
      // u = u' - beta t', t = t'
      BivPoly U = BivPoly::var_u(F) -
                  BivPoly::var_t(F) * BivPoly::constant(F, F->from_int(flag.transversal_beta));
      return p.compose(U, BivPoly::var_t(F));
    }
    case Flag::Kind::U:
      // u = t', t = u'
      return p.compose(BivPoly::var_t(F), BivPoly::var_u(F));
    case Flag::Kind::TPhi: {
      // u = u', t = t' + phi(u')
      BivPoly T = BivPoly::var_t(F) + BivPoly::from_u_poly(flag.phi);
      return p.compose(BivPoly::var_u(F), T);
    }
  }
  throw ContractViolation("Flag: unsupported kind");
}

}  // namespace

LevelView levels_at_flag(const BivRatFn& f, const Flag& flag, long levels_needed) {
  const FqPtr F = f.num.F;
  if (f.is_zero()) throw ContractViolation("levels_at_flag: zero function has no levels");
  BivPoly N = to_flag_coords(f.num, flag);
  BivPoly D = to_flag_coords(f.den, flag);
  int vN = 0;
  while (N.level(vN).is_zero()) ++vN;
  int vD = 0;
  while (D.level(vD).is_zero()) ++vD;
  FqHandle h{F};
  auto unit = Poly<FqHandle>::constant(h, F->one());
  FqRat d0(D.level(vD), unit);
  LevelView out;
  out.val_t = vN - vD;
  out.levels.reserve(static_cast<size_t>(levels_needed));
  for (long j = 0; j < levels_needed; ++j) {
    FqRat acc(N.level(vN + static_cast<int>(j)), unit);
    for (long i = 1; i <= j; ++i) {
      FqRat di(D.level(vD + static_cast<int>(i)), unit);
      acc = acc - di * out.levels[static_cast<size_t>(j - i)];
    }
    out.levels.push_back(acc / d0);
  }
  return out;
}

const FqLaurent& IteratedSeries2D::zero_level() const {
  if (!zero_) zero_ = FqLaurent(FqHandle{F}, 0, 1);
  return *zero_;
}

IteratedSeries2D expand_rational_2d(const BivRatFn& f, const Flag& flag, long prec_t, long prec_u) {
  if (prec_t < 1 || prec_u < 1) throw ContractViolation("expand_rational_2d: precision must be >= 1");
  const FqPtr F = f.num.F;
  auto lv = levels_at_flag(f, flag, prec_t);
  IteratedSeries2D out;
  out.F = F;
  out.val_t = lv.val_t;
  out.hi_t = lv.val_t + prec_t;
  auto uplace = ClosedPoint::finite(Poly<FqHandle>::x(FqHandle{F}));
  for (const auto& level : lv.levels) {
    if (level.is_zero()) {
      out.levels.emplace_back(FqHandle{F}, 0, prec_u);
      continue;
    }
    long v = ord_at(level, uplace);
    out.levels.push_back(expand_deg1(level, uplace, v, v + prec_u));
  }
  return out;
}

algebra::Fq residue_2d(const TwoForm& w, const Flag& flag) {
  const FqPtr F = w.g.num.F;
  if (w.g.is_zero()) return 0;
  auto probe = levels_at_flag(w.g, flag, 1);
  long j_needed = -1 - probe.val_t;  // offset of the t'^{-1} level
  if (j_needed < 0) return 0;
  auto lv = levels_at_flag(w.g, flag, j_needed + 1);
  const FqRat& level = lv.levels[static_cast<size_t>(j_needed)];
  algebra::Fq r = 0;
  if (!level.is_zero()) {
    auto uplace = ClosedPoint::finite(Poly<FqHandle>::x(FqHandle{F}));
    long v = ord_at(level, uplace);
    if (v <= -1) r = expand_deg1(level, uplace, v, 0).coeff(-1);
  }
  return flag.orientation_sign() < 0 ? F->neg(r) : r;
}

}  // namespace adelic::series
