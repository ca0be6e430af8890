#include "adelic/window.hpp"

#include <algorithm>

namespace adelic::adeles {

AdeleWindow AdeleWindow::make(std::vector<ClosedPoint> S, const Divisor& D_low,
                              const Divisor& D_high) {
  if (S.empty()) throw ContractViolation("make_window: empty place set");
  const FqPtr F = D_low.F;
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  auto in_S = [&](const ClosedPoint& x) { return std::find(S.begin(), S.end(), x) != S.end(); };
  for (const auto& [x, n] : D_low.m)
    if (!in_S(x)) throw ContractViolation("make_window: supp(D_low) not inside S");
  for (const auto& [x, n] : D_high.m)
    if (!in_S(x)) throw ContractViolation("make_window: supp(D_high) not inside S");
  if (!(D_low <= D_high)) throw ContractViolation("make_window: D_low <= D_high required");
  if (D_low.deg() > -1)
    throw ContractViolation("make_window: deg(D_low) <= -1 required for injective embedding");
  AdeleWindow W(F, D_low, D_high);
  int off = 0;
  for (const auto& x : S) {
    PlaceBlock b;
    b.x = x;
    b.lo = -D_high.coeff(x);
    b.hi = -D_low.coeff(x);
    b.offset = off;
    off += b.dim();
    W.blocks_.push_back(std::move(b));
  }
  W.dim_ = off;
  return W;
}

AdeleWindow AdeleWindow::local(const ClosedPoint& x, long lo, long hi) {
  if (lo > hi) throw ContractViolation("local window: lo > hi");
  FqPtr F = x.field();
  Divisor dl(F), dh(F);
  dl.set(x, -hi);
  dh.set(x, -lo);
  AdeleWindow W(F, dl, dh);
  PlaceBlock b;
  b.x = x;
  b.lo = lo;
  b.hi = hi;
  b.offset = 0;
  W.blocks_.push_back(b);
  W.dim_ = W.blocks_[0].dim();
  return W;
}

std::vector<char> AdeleWindow::subgroup_mask(const Divisor& D) const {
  std::vector<char> mask(static_cast<size_t>(dim_), 0);
  for (size_t bi = 0; bi < blocks_.size(); ++bi) {
    const auto& b = blocks_[bi];
    long cut = -D.coeff(b.x);
    for (long e = b.lo; e < b.hi; ++e) {
      if (e < cut) continue;
      for (int j = 0; j < b.x.degree; ++j) mask[static_cast<size_t>(coord(bi, e, j))] = 1;
    }
  }
  return mask;
}

bool AdeleWindow::same_shape(const AdeleWindow& o) const {
  if (blocks_.size() != o.blocks_.size() || dim_ != o.dim_) return false;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (!(blocks_[i].x == o.blocks_[i].x) || blocks_[i].lo != o.blocks_[i].lo ||
        blocks_[i].hi != o.blocks_[i].hi)
      return false;
  }
  return true;
}

WindowVector embed_global(const FqRat& f, const AdeleWindow& W) {
  const FqPtr F = W.field();
  WindowVector v(static_cast<size_t>(W.dim()), 0);
  if (f.is_zero()) return v;
  // poles must lie in S and respect D_high
  for (const auto& [x, mult] : series::polar_places(f)) {
    bool found = false;
    for (const auto& b : W.blocks())
      if (b.x == x) {
        found = true;
        if (-mult < b.lo)
          throw ContractViolation("embed_global: pole order exceeds D_high at " + x.str());
      }
    if (!found) throw ContractViolation("embed_global: pole outside the place set at " + x.str());
  }
  size_t off = 0;
  for (const auto& b : W.blocks()) {
    auto coords = series::window_coords(f, b.x, b.lo, b.hi);
    std::copy(coords.begin(), coords.end(), v.begin() + static_cast<long>(off));
    off += static_cast<size_t>(b.dim());
  }
  return v;
}

Divisor omega_divisor(const FqPtr& F) {
  Divisor d(F);
  d.set(ClosedPoint::infinity(F), -2);
  return d;
}

AdeleWindow dual_window(const AdeleWindow& W) {
  std::vector<ClosedPoint> S;
  for (const auto& b : W.blocks()) S.push_back(b.x);
  auto om = omega_divisor(W.field());
  // omega's support must be visible in the window for the pairing to close up
  bool has_inf = false;
  for (const auto& x : S) has_inf = has_inf || x.inf;
  if (!has_inf) throw ContractViolation("dual_window: S must contain the support of (dt) = -2*inf");
  return AdeleWindow::make(S, om - W.d_high(), om - W.d_low());
}

qspace::Pairing residue_pairing(const AdeleWindow& V, const AdeleWindow& Vdual) {
  const FqPtr F = V.field();
  qspace::Pairing P;
  P.V = V.space();
  P.W = Vdual.space();
  if (V.blocks().size() != Vdual.blocks().size())
    throw ContractViolation("residue_pairing: mismatched place sets");
  for (size_t bi = 0; bi < V.blocks().size(); ++bi) {
    const auto& a = V.blocks()[bi];
    const auto& b = Vdual.blocks()[bi];
    if (!(a.x == b.x)) throw ContractViolation("residue_pairing: place order mismatch");
    const int d = a.x.degree;
    // residue of s^e * s^e' * dt: nonzero only at e + e' = -1 (finite) or
    // e + e' = 1 with a sign at infinity (dt = -z^{-2} dz)
    long target = a.x.inf ? 1 : -1;
    std::vector<std::vector<Fq>> tf;  // trace form on k(x)
    if (d > 1) {
      auto kx = series::residue_field(a.x);
      tf.assign(static_cast<size_t>(d), std::vector<Fq>(static_cast<size_t>(d), 0));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          tf[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              kx->trace_to_base(kx->pow(kx->alpha(), i + j));
    }
    for (long e = a.lo; e < a.hi; ++e) {
      long ed = target - e;
      if (ed < b.lo || ed >= b.hi) {
        // partner exponent missing: the windows are not dual
        throw ContractViolation("residue_pairing: windows are not a dual pair");
      }
      qspace::PairBlock blk;
      for (int j = 0; j < d; ++j) {
        blk.rows.push_back(V.coord(bi, e, j));
        blk.cols.push_back(Vdual.coord(bi, ed, j));
      }
      if (d == 1) {
        Fq unit = a.x.inf ? F->neg(F->one()) : F->one();
        blk.m = {{unit}};
      } else {
        blk.m = tf;
      }
      P.blocks.push_back(std::move(blk));
    }
  }
  if (!qspace::nondegenerate(P))
    throw InstabilityError("residue_pairing: degenerate pairing (window construction bug)");
  return P;
}

linalg::Mat embedded_global_sections(const Divisor& D, const AdeleWindow& W) {
  auto basis = curve::rr_space_basis(D);
  linalg::Mat m(W.field(), basis.size(), static_cast<size_t>(W.dim()));
  for (size_t i = 0; i < basis.size(); ++i) {
    auto v = embed_global(basis[i], W);
    for (size_t j = 0; j < v.size(); ++j) m.at(i, j) = v[j];
  }
  return m;
}

}  // namespace adelic::adeles
