#include "adelic/surface.hpp"

#include <algorithm>

#include "adelic/curve.hpp"
#include "adelic/expand.hpp"

namespace adelic::surface {

using algebra::CycloValue;
using series::ClosedPoint;
using series::FqRat;
using series::LevelView;

MembershipReport subring_membership(const IteratedSeries2D& x, const SubringTag& tag) {
  MembershipReport rep;
  rep.lo_t = x.val_t;
  rep.hi_t = x.hi_t;
  if (x.hi_t <= x.val_t) throw InstabilityError("subring_membership: empty window cannot certify");
  auto level_nonneg_u = [&](long j) {
    const auto& l = x.level(j);
    auto v = l.valuation();
    return !v || *v >= 0;
  };
  switch (tag.kind) {
    case SubringTag::Kind::OType:
      rep.value = x.val_t >= 0;
      return rep;
    case SubringTag::Kind::MPow:
      rep.value = x.val_t >= tag.n;
      return rep;
    case SubringTag::Kind::BType: {
      rep.value = true;
      for (long j = x.val_t; j < x.hi_t; ++j) rep.value = rep.value && level_nonneg_u(j);
      return rep;
    }
    case SubringTag::Kind::OBType: {
      rep.value = x.val_t >= 0;
      for (long j = x.val_t; j < x.hi_t && rep.value; ++j) rep.value = level_nonneg_u(j);
      return rep;
    }
  }
  throw ContractViolation("subring_membership: bad tag");
}

namespace {

struct Branch {
  Flag flag;
  std::string label;
};

// classify a polynomial denominator factor as a curve through the origin
std::optional<Branch> classify_factor(const BivPoly& f) {
  const FqPtr F = f.F;
  // evaluate at the origin
  Fq at0 = f.level(0).coeff(0);
  if (at0 != 0) return std::nullopt;  // unit near the origin, no branch
  if (f.deg_t() == 0) {
    // polynomial in u through the origin: only the branch u = 0 is supported
    auto g = f.level(0);
    int k = 0;
    while (g.coeff(k) == 0) ++k;
    if (k == 0) throw ContractViolation("residue_relation_point: factor vanishes identically");
    return Branch{Flag::curve_u(), "u=0"};
  }
  if (f.deg_t() == 1 && f.level(1).deg() == 0) {
    // a*t + g(u) = a*(t - phi(u)), phi = -g/a
    Fq a = f.level(1).coeff(0);
    auto phi = f.level(0).scaled(F->neg(F->inv(a)));
    if (phi.is_zero()) return Branch{Flag::curve_t(), "t=0"};
    if (phi.coeff(0) != 0) return std::nullopt;  // not through the origin
    // strip: t = phi(u) branch
    return Branch{Flag::curve_t_phi(phi), "t=phi(u)"};
  }
  throw ContractViolation("residue_relation_point: unsupported polar branch shape");
}

bool same_branch(const Flag& a, const Flag& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Flag::Kind::TPhi) return a.phi == b.phi;
  return true;
}

}  // namespace

ResidueReport residue_relation_point(const TwoForm& w) {
  const FqPtr F = w.g.num.F;
  ResidueReport rep;
  std::vector<Branch> branches;
  for (const auto& f : w.den_factors) {
    auto b = classify_factor(f);
    if (!b) continue;
    bool dup = false;
    for (const auto& known : branches) dup = dup || same_branch(known.flag, b->flag);
    if (!dup) branches.push_back(std::move(*b));
  }
  rep.sum = 0;
  for (const auto& b : branches) {
    Fq r = series::residue_2d(w, b.flag);
    rep.residues.push_back({b.label, r});
    rep.sum = F->add(rep.sum, r);
  }
  return rep;
}

namespace {

// residues of a rational 1-form c(v) dv over all places of P^1, with trace
// at higher-degree places; the label names the place
void one_dim_residues(const FqRat& c, ResidueReport& rep, int sign, const FqPtr& F) {
  if (c.is_zero()) return;
  auto add = [&](const ClosedPoint& x) {
    Fq r = series::residue_trace_dt(c, x);
    if (sign < 0) r = F->neg(r);
    if (r != 0 || !x.inf) rep.residues.push_back({x.str(), r});
    rep.sum = F->add(rep.sum, r);
  };
  for (const auto& [x, mult] : series::polar_places(c)) {
    if (x.inf) continue;
    add(x);
  }
  add(ClosedPoint::infinity(F));
}

}  // namespace

ResidueReport residue_relation_curve(const TwoForm& w, const CurveSpec& C) {
  const FqPtr F = w.g.num.F;
  ResidueReport rep;
  rep.sum = 0;
  if (w.g.is_zero()) return rep;

  BivPoly num = w.g.num, den = w.g.den;
  Flag flag;
  int sign = 1;
  switch (C.kind) {
    case CurveSpec::Kind::Horizontal: {
      // shift t -> t + b, then read t-levels
      BivPoly T = BivPoly::var_t(F) + BivPoly::constant(F, C.value);
      num = num.compose(BivPoly::var_u(F), T);
      den = den.compose(BivPoly::var_u(F), T);
      flag = Flag::curve_t();
      sign = 1;
      break;
    }
    case CurveSpec::Kind::Vertical: {
      BivPoly U = BivPoly::var_u(F) + BivPoly::constant(F, C.value);
      num = num.compose(U, BivPoly::var_t(F));
      den = den.compose(U, BivPoly::var_t(F));
      flag = Flag::curve_u();  // levels in (u - a); coefficient is a function of t
      sign = -1;
      break;
    }
    case CurveSpec::Kind::Graph: {
      flag = Flag::curve_t_phi(C.phi);
      sign = 1;
      break;
    }
  }
  series::BivRatFn g(num, den);
  auto probe = series::levels_at_flag(g, flag, 1);
  long j_needed = -1 - probe.val_t;
  if (j_needed < 0) return rep;  // no pole along C
  auto lv = series::levels_at_flag(g, flag, j_needed + 1);
  // Kind::Vertical already carries its orientation sign through `sign`;
  // levels_at_flag's own swap does not apply a sign, so no double count
  one_dim_residues(lv.levels[static_cast<size_t>(j_needed)], rep, sign, F);
  return rep;
}

std::pair<long, long> torsor_difference(const NormalizationDatum& d1,
                                        const NormalizationDatum& d2) {
  // recover (a, b) from the ratio of induced volume families at two levels:
  // vol_j(d1)/vol_j(d2) = q^(-a - j b)
  long e0 = d1.vol_exponent(0) - d2.vol_exponent(0);
  long e1 = d1.vol_exponent(1) - d2.vol_exponent(1);
  long a = -e0;
  long b = -(e1 - e0);
  return {a, b};
}

NormalizationDatum torsor_act(const NormalizationDatum& d, long a, long b) {
  return NormalizationDatum{d.i + a, d.k + b};
}

std::vector<char> TwoLevelWindow::b_type_mask() const {
  std::vector<char> mask(static_cast<size_t>(dim()), 0);
  int off = 0;
  for (long j = lo_t; j < hi_t; ++j) {
    auto [a, b] = u_windows.at(static_cast<size_t>(j - lo_t));
    for (long e = a; e < b; ++e) {
      if (e >= 0) mask[static_cast<size_t>(off + (e - a))] = 1;
    }
    off += level_dim(j);
  }
  return mask;
}

FnTable f02_pushforward(const FnTable& f, const TwoLevelWindow& W, long new_hi_t,
                        const NormalizationDatum& d) {
  if (!f.space().compatible(W.space()))
    throw ContractViolation("f02_pushforward: window/table mismatch");
  if (new_hi_t > W.hi_t || new_hi_t < W.lo_t)
    throw ContractViolation("f02_pushforward: collapse range outside the window");
  if (new_hi_t == W.hi_t) return f;  // collapse nothing

  TwoLevelWindow Wout = W;
  Wout.hi_t = new_hi_t;
  Wout.u_windows.resize(static_cast<size_t>(new_hi_t - W.lo_t));
  int kept = Wout.dim();
  const long q = W.F->q();
  std::uint64_t kept_size = 1, fiber = 1;
  for (int i = 0; i < kept; ++i) kept_size *= static_cast<std::uint64_t>(q);
  for (int i = kept; i < W.dim(); ++i) fiber *= static_cast<std::uint64_t>(q);
  long weight_exp = 0;
  for (long j = new_hi_t; j < W.hi_t; ++j) weight_exp += d.vol_exponent(j);
  Rational weight = Rational::q_pow(q, weight_exp);

  FnTable out(Wout.space());
  for (std::uint64_t base = 0; base < kept_size; ++base) {
    CycloValue acc(f.p());
    for (std::uint64_t w = 0; w < fiber; ++w) acc += f.at(base + w * kept_size);
    out.set(base, acc.scaled(weight));
  }
  return out;
}

SurfaceZeta surface_zeta_factorization(const FqPtr& F, int N) {
  if (N > 10) throw ContractViolation("surface_zeta_factorization: N cap is 10");
  const long long q = F->q();
  auto stratum = [&](auto point_count_fn) {
    std::vector<long long> S(static_cast<size_t>(N) + 1, 0);
    for (int k = 1; k <= N; ++k) S[static_cast<size_t>(k)] = point_count_fn(k);
    return curve::zeta_dp_from_place_counts(q, curve::invert_point_counts(S), N);
  };
  SurfaceZeta out{
      stratum([&](int k) { return checked_pow(q, 2 * k); }),  // A^2
      stratum([&](int k) { return checked_pow(q, k); }),      // A^1
      stratum([&](int) { return 1LL; }),                      // the point
      ZetaSeries(q, 0, {}),
      false,
  };
  out.product = out.plane_stratum * out.line_stratum * out.point_stratum;
  // expansion of 1/((1-T)(1-qT)(1-q^2 T))
  std::vector<long long> expect(static_cast<size_t>(N) + 1, 0);
  for (int m = 0; m <= N; ++m) {
    long long acc = 0;
    for (int i = 0; i <= m; ++i)
      for (int j = 0; i + j <= m; ++j)
        acc = checked_add(acc, checked_mul(checked_pow(q, i), checked_pow(q, 2 * j)));
    expect[static_cast<size_t>(m)] = acc;
  }
  out.product_matches_p2 = true;
  for (int m = 0; m <= N; ++m)
    out.product_matches_p2 =
        out.product_matches_p2 && out.product.coeff(m) == expect[static_cast<size_t>(m)];
  out.point_stratum.try_fit({1, -1}, 0);
  out.line_stratum.try_fit({1, -q}, 0);
  out.plane_stratum.try_fit({1, -checked_mul(q, q)}, 0);
  return out;
}

}  // namespace adelic::surface
