#include "adelic/harmonic.hpp"

#include <algorithm>

namespace adelic::harmonic {

using adeles::embedded_global_sections;
using adeles::residue_pairing;
using linalg::Mat;

namespace {

long popcount_mask(const std::vector<char>& m) {
  long n = 0;
  for (char c : m) n += c != 0;
  return n;
}

// dimension of { v in rowspace(rows) : v vanishes outside mask }: the kernel
// of (coefficients -> outside coordinates)
long constrained_dim(const Mat& rows, const std::vector<char>& mask) {
  std::vector<size_t> outside;
  for (size_t j = 0; j < mask.size(); ++j)
    if (!mask[j]) outside.push_back(j);
  Mat sys(rows.F, outside.size(), rows.rows);
  for (size_t i = 0; i < rows.rows; ++i)
    for (size_t j = 0; j < outside.size(); ++j) sys.at(j, i) = rows.at(i, outside[j]);
  return static_cast<long>(linalg::kernel(sys).size());
}

}  // namespace

std::vector<std::vector<algebra::Fq>> orthogonal_rows(const Mat& rows, const qspace::Pairing& P) {
  const auto& F = rows.F;
  Mat sys(F, rows.rows, static_cast<size_t>(P.W.dim));
  // precompute Gram as a dense matrix
  Mat G(F, static_cast<size_t>(P.V.dim), static_cast<size_t>(P.W.dim));
  for (const auto& b : P.blocks)
    for (size_t i = 0; i < b.rows.size(); ++i)
      for (size_t j = 0; j < b.cols.size(); ++j)
        G.at(static_cast<size_t>(b.rows[i]), static_cast<size_t>(b.cols[j])) = b.m[i][j];
  for (size_t r = 0; r < rows.rows; ++r)
    for (size_t j = 0; j < static_cast<size_t>(P.W.dim); ++j) {
      algebra::Fq acc = 0;
      for (size_t i = 0; i < rows.cols; ++i) acc = F->add(acc, F->mul(rows.at(r, i), G.at(i, j)));
      sys.at(r, j) = acc;
    }
  return linalg::kernel(sys);
}

AdeleWindow standard_window(const Divisor& D) {
  const auto F = D.F;
  auto om = adeles::omega_divisor(F);
  std::vector<ClosedPoint> S;
  S.push_back(ClosedPoint::infinity(F));
  for (const auto& [x, n] : D.m) S.push_back(x);
  Divisor hi(F), lo(F);
  for (const auto& x : S) {
    long d = D.coeff(x), w = om.coeff(x) - D.coeff(x);
    hi.set(x, std::max({d, w, 0L}));
    lo.set(x, std::min({d, w, 0L}) - 1);
  }
  return AdeleWindow::make(S, lo, hi);
}

long window_l_dim(const Divisor& D, const AdeleWindow& W) {
  auto rows = embedded_global_sections(W.d_high(), W);
  return constrained_dim(rows, W.subgroup_mask(D));
}

RRReport rr_via_parseval(const Divisor& D) { return rr_via_parseval(D, standard_window(D)); }

RRReport rr_via_parseval(const Divisor& D, const AdeleWindow& W) {
  const auto F = D.F;
  auto om = adeles::omega_divisor(F);
  auto Wd = adeles::dual_window(W);
  auto P = residue_pairing(W, Wd);

  RRReport r;
  r.deg_D = D.deg();
  r.window_dim = W.dim();

  auto gamma = embedded_global_sections(W.d_high(), W);  // delta_K lives on this span
  long l_high = static_cast<long>(linalg::rank(gamma));
  if (l_high != curve::l_dim(W.d_high()))
    throw InstabilityError("rr_via_parseval: embedding of L(D_high) is not injective");

  r.l_D = constrained_dim(gamma, W.subgroup_mask(D));

  // dual side: Gamma-perp must be the embedded L((omega) - D_low)
  auto perp = orthogonal_rows(gamma, P);
  auto dual_gamma = embedded_global_sections(om - W.d_low(), Wd);
  r.orthogonality_ok =
      linalg::same_row_space(linalg::from_rows(F, perp, static_cast<size_t>(Wd.dim())), dual_gamma);
  if (!r.orthogonality_ok)
    throw InstabilityError("rr_via_parseval: Gamma-perp differs from embedded L((omega)-D_low)");

  r.l_KD = constrained_dim(dual_gamma, Wd.subgroup_mask(om - D));

  // (delta_K_hat, delta_D_hat) = |Gamma| |A(D)w| #(Gamma-perp cap A((omega)-D)w)
  long dim_AD = popcount_mask(W.subgroup_mask(D));
  r.lhs_exponent = l_high + dim_AD + r.l_KD;
  // |V| (delta_K, delta_D) = q^(dim V + l(D))
  r.rhs_exponent = r.window_dim + r.l_D;
  r.parseval_ok = r.lhs_exponent == r.rhs_exponent;
  r.rr_identity_holds = (r.l_D - r.l_KD) == (r.deg_D + 1);
  return r;
}

bool subgroup_rule_check(const AdeleWindow& W, const Divisor& D) {
  const auto F = W.field();
  auto Wd = adeles::dual_window(W);
  auto P = residue_pairing(W, Wd);
  auto mask = W.subgroup_mask(D);
  auto f = FnTable::char_mask(W.space(), mask);
  auto fhat = fourier(f, P);
  auto om = adeles::omega_divisor(F);
  auto expected = FnTable::char_mask(Wd.space(), Wd.subgroup_mask(om - D))
                      .scaled(Rational::q_pow(F->q(), popcount_mask(mask)));
  return fhat == expected;
}

bool double_transform_check(const AdeleWindow& W, const FnTable& f) {
  auto Wd = adeles::dual_window(W);
  auto P = residue_pairing(W, Wd);
  auto back = fourier(fourier(f, P), P.transposed());
  auto expected = f.negate_arg().scaled(Rational::q_pow(W.field()->q(), W.dim()));
  return back == expected;
}

CubeReport cube_check(const FnTable& f0, const FnTable& f1, const qspace::Pairing& P) {
  CubeReport rep;
  const auto F = P.V.F;
  auto beta_star = [](const FnTable& f) {
    return pushforward(LinMap::to_point(f.space()), f).at(0);
  };
  auto alpha_pull = [](const FnTable& f) {
    return pullback(LinMap::from_point(f.space()), f).at(0);
  };

  auto fhat = fourier(f0, P);
  auto ghat = fourier(f1, P);
  rep.lhs = pair_tables(fhat, ghat);

  // beta_* i^* (F_hat (x) G_hat) literally
  auto i_dual = LinMap::diagonal(P.W);
  auto unwound = beta_star(pullback(i_dual, tensor(fhat, ghat)));
  rep.diagonal_unwind = unwound == rep.lhs;

  auto PP = qspace::product_pairing(P, P);
  auto hat_prod = fourier(tensor(f0, f1), PP);
  rep.tensor_rule = hat_prod == tensor(fhat, ghat);

  // i^* hat = hat j_* with the reflection on the second slot:
  // pullback along the diagonal of the product transform equals the
  // transform of the difference-map pushforward of F (x) (G o neg)
  auto reflected = tensor(f0, f1.negate_arg());
  auto j = LinMap::difference(P.V);
  auto lhs_fn = pullback(i_dual, hat_prod);
  auto rhs_fn = fourier(pushforward(j, reflected), P);
  rep.ij_duality = lhs_fn == rhs_fn;

  // beta_* hat(k) = |V| alpha^*(k)
  auto k_fn = pushforward(j, reflected);
  rep.vol_exponent = P.V.dim;
  auto vol = Rational::q_pow(F->q(), P.V.dim);
  rep.alpha_beta_duality = beta_star(fourier(k_fn, P)) == alpha_pull(k_fn).scaled(vol);

  rep.rhs = pair_tables(f0, f1.negate_arg());
  rep.parseval_reflected = rep.lhs == rep.rhs.scaled(vol);

  rep.ok = rep.diagonal_unwind && rep.tensor_rule && rep.ij_duality && rep.alpha_beta_duality &&
           rep.parseval_reflected;
  return rep;
}

std::string bruhat_type_name(BruhatType t) {
  switch (t) {
    case BruhatType::D: return "D";
    case BruhatType::E: return "E";
    case BruhatType::Dprime: return "D'";
    case BruhatType::Eprime: return "E'";
  }
  return "?";
}

BruhatType flags_to_type(bool support_bounded, bool locally_constant) {
  if (support_bounded && locally_constant) return BruhatType::D;
  if (!support_bounded && locally_constant) return BruhatType::E;
  if (!support_bounded && !locally_constant) return BruhatType::Dprime;
  return BruhatType::Eprime;
}

AdeleWindow WindowFamily::at(int k) const {
  return AdeleWindow::make(S, base_low - step.scaled(k), base_high + step.scaled(k));
}

WindowFamily WindowFamily::standard(const Divisor& D, int levels) {
  const auto F = D.F;
  WindowFamily fam;
  fam.D = D;
  fam.levels = levels;
  fam.S.push_back(ClosedPoint::infinity(F));
  for (const auto& [x, n] : D.m) fam.S.push_back(x);
  std::sort(fam.S.begin(), fam.S.end());
  fam.S.erase(std::unique(fam.S.begin(), fam.S.end()), fam.S.end());
  auto om = adeles::omega_divisor(F);
  Divisor hi(F), lo(F), step(F);
  for (const auto& x : fam.S) {
    long d = D.coeff(x), w = om.coeff(x) - D.coeff(x);
    hi.set(x, std::max({d, w, 0L}));
    lo.set(x, std::min({d, w, 0L}) - 1);
    step.set(x, 1);
  }
  fam.base_low = lo;
  fam.base_high = hi;
  fam.step = step;
  return fam;
}

FnTable catalog_table(CatalogKind kind, const WindowFamily& fam, int k) {
  auto W = fam.at(k);
  auto sp = W.space();
  switch (kind) {
    case CatalogKind::DeltaD:
      return FnTable::char_mask(sp, W.subgroup_mask(fam.D));
    case CatalogKind::DeltaK: {
      auto gamma = embedded_global_sections(W.d_high(), W);
      std::vector<std::vector<algebra::Fq>> rows;
      for (size_t i = 0; i < gamma.rows; ++i) {
        std::vector<algebra::Fq> r(gamma.cols);
        for (size_t j = 0; j < gamma.cols; ++j) r[j] = gamma.at(i, j);
        rows.push_back(std::move(r));
      }
      return FnTable::delta_sum_span(sp, rows);
    }
    case CatalogKind::DeltaH1: {
      // char of A(D)w + Gamma: span of the subgroup coordinates and the
      // embedded global sections
      auto mask = W.subgroup_mask(fam.D);
      auto gamma = embedded_global_sections(W.d_high(), W);
      std::vector<std::vector<algebra::Fq>> rows;
      for (size_t j = 0; j < mask.size(); ++j) {
        if (!mask[j]) continue;
        std::vector<algebra::Fq> e(static_cast<size_t>(W.dim()), 0);
        e[j] = W.field()->one();
        rows.push_back(std::move(e));
      }
      for (size_t i = 0; i < gamma.rows; ++i) {
        std::vector<algebra::Fq> r(gamma.cols);
        for (size_t j = 0; j < gamma.cols; ++j) r[j] = gamma.at(i, j);
        rows.push_back(std::move(r));
      }
      auto m = linalg::from_rows(W.field(), rows, static_cast<size_t>(W.dim()));
      FnTable f(sp);
      const auto one = CycloValue::one(sp.F->p());
      for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
        auto v = sp.coords(idx);
        if (linalg::in_row_space(m, v)) f.set(idx, one);
      }
      return f;
    }
    case CatalogKind::DeltaH0: {
      // delta-sum over Gamma cap A(D)w = embedded L(D)
      auto rows_mat = embedded_global_sections(fam.D, W);
      std::vector<std::vector<algebra::Fq>> rows;
      for (size_t i = 0; i < rows_mat.rows; ++i) {
        std::vector<algebra::Fq> r(rows_mat.cols);
        for (size_t j = 0; j < rows_mat.cols; ++j) r[j] = rows_mat.at(i, j);
        rows.push_back(std::move(r));
      }
      return FnTable::delta_sum_span(sp, rows);
    }
  }
  throw ContractViolation("catalog_table: bad kind");
}

namespace {

struct Flags {
  bool support_bounded, locally_constant;
};

Flags measure_flags(const FnTable& f, const AdeleWindow& W, const Divisor& support_ref,
                    const Divisor& invariance_ref) {
  auto sp = f.space();
  auto smask = W.subgroup_mask(support_ref);
  bool bounded = true;
  for (std::uint64_t idx = 0; idx < f.size() && bounded; ++idx) {
    if (f.at(idx).is_zero()) continue;
    auto v = sp.coords(idx);
    for (size_t j = 0; j < smask.size(); ++j)
      if (!smask[j] && v[j] != 0) {
        bounded = false;
        break;
      }
  }
  auto imask = W.subgroup_mask(invariance_ref);
  bool invariant = true;
  for (size_t j = 0; j < imask.size() && invariant; ++j) {
    if (!imask[j]) continue;
    for (long lambda = 1; lambda < W.field()->q() && invariant; ++lambda) {
      std::vector<algebra::Fq> shift(static_cast<size_t>(sp.dim), 0);
      shift[j] = static_cast<algebra::Fq>(lambda);
      std::uint64_t sidx = sp.index(shift);
      for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
        if (!(f.at(sp.add(idx, sidx)) == f.at(idx))) {
          invariant = false;
          break;
        }
      }
    }
  }
  return {bounded, invariant};
}

}  // namespace

BruhatReport bruhat_type(CatalogKind kind, const WindowFamily& fam) {
  if (fam.levels < 3) throw ContractViolation("bruhat_type: need a family of >= 3 windows");
  BruhatReport rep;
  bool first = true;
  rep.stable = true;
  for (int k = 1; k <= fam.levels; ++k) {
    auto W = fam.at(k);
    auto f = catalog_table(kind, fam, k);
    auto fl = measure_flags(f, W, fam.base_high, fam.base_low);
    if (first) {
      rep.support_bounded = fl.support_bounded;
      rep.locally_constant = fl.locally_constant;
      first = false;
    } else if (fl.support_bounded != rep.support_bounded ||
               fl.locally_constant != rep.locally_constant) {
      rep.stable = false;
    }
  }
  if (!rep.stable) throw InstabilityError("bruhat_type: flags not stable across the window family");
  rep.type = flags_to_type(rep.support_bounded, rep.locally_constant);
  return rep;
}

bool fourier_swap_check(CatalogKind kind, const WindowFamily& fam) {
  auto om = adeles::omega_divisor(fam.D.F);
  auto base = bruhat_type(kind, fam);
  BruhatType expected = BruhatType::D;
  switch (base.type) {
    case BruhatType::D: expected = BruhatType::D; break;
    case BruhatType::E: expected = BruhatType::Eprime; break;
    case BruhatType::Eprime: expected = BruhatType::E; break;
    case BruhatType::Dprime: expected = BruhatType::Dprime; break;
  }
  for (int k = 1; k <= fam.levels; ++k) {
    auto W = fam.at(k);
    auto Wd = adeles::dual_window(W);
    auto P = residue_pairing(W, Wd);
    auto fhat = fourier(catalog_table(kind, fam, k), P);
    auto fl = measure_flags(fhat, Wd, om - fam.base_low, om - fam.base_high);
    if (flags_to_type(fl.support_bounded, fl.locally_constant) != expected) return false;
  }
  return true;
}

}  // namespace adelic::harmonic
