#pragma once

#include "adelic/fn_table.hpp"
#include "adelic/series2d.hpp"
#include "adelic/zeta_series.hpp"

namespace adelic::surface {

using algebra::Fq;
using algebra::FqPtr;
using harmonic::FnTable;
using series::BivPoly;
using series::Flag;
using series::IteratedSeries2D;
using series::TwoForm;

// ---- standard subrings of the two-dimensional local field ------------------

// Membership predicates are monomial conditions on the rank-2 valuation:
//   node 12 (O-type, F_q((u))[[t]]):   v_t >= 0
//   node 02 (B_P,   F_q[[u]]((t))):    v_u >= 0 at every level
//   M^n:                                v_t >= n
//   OB (F_q[[u]][[t]]):                 both
struct SubringTag {
  enum class Kind { OType, BType, MPow, OBType };
  Kind kind = Kind::OType;
  long n = 0;
  std::string node;  // diagram label where applicable

  static SubringTag o_type() { return {Kind::OType, 0, "12"}; }
  static SubringTag b_type() { return {Kind::BType, 0, "02"}; }
  static SubringTag m_pow(long n) { return {Kind::MPow, n, ""}; }
  static SubringTag ob_type() { return {Kind::OBType, 0, ""}; }
};

// Answers are certified at the series' window; the report carries it.
struct MembershipReport {
  bool value = false;
  long lo_t = 0, hi_t = 0;
};
MembershipReport subring_membership(const IteratedSeries2D& x, const SubringTag& tag);

// ---- residue relations ------------------------------------------------------

struct ResidueReport {
  struct Entry {
    std::string label;
    Fq value;
  };
  std::vector<Entry> residues;
  Fq sum = 0;
};

// sum over curves through the origin of res_{x,C}(w); polar branches are
// detected from the parsed denominator factors.
ResidueReport residue_relation_point(const TwoForm& w);

// A curve on P^1 x P^1 along which the residues are summed over all points
// (including the places at infinity via the chart swap).
struct CurveSpec {
  enum class Kind { Horizontal, Vertical, Graph };  // t = b, u = a, t = phi(u)
  Kind kind = Kind::Horizontal;
  Fq value = 0;
  Poly<FqHandle> phi;

  static CurveSpec horizontal(Fq b) { return {Kind::Horizontal, b, {}}; }
  static CurveSpec vertical(Fq a) { return {Kind::Vertical, a, {}}; }
  static CurveSpec graph(Poly<FqHandle> phi) { return {Kind::Graph, 0, std::move(phi)}; }
};
ResidueReport residue_relation_curve(const TwoForm& w, const CurveSpec& C);

// ---- Haar normalization torsor ---------------------------------------------

// The two choices behind F_02: the fractional-ideal index i normalizing the
// measure on the residue field, and the u-power k twisting the second
// parameter. Induced volumes: vol_j = q^(-i - j k) at t-level j.
struct NormalizationDatum {
  long i = 0, k = 0;
  long vol_exponent(long j) const { return -(i + j * k); }
  bool operator==(const NormalizationDatum& o) const { return i == o.i && k == o.k; }
};

// recovered from the induced volume families at two levels
std::pair<long, long> torsor_difference(const NormalizationDatum& d1, const NormalizationDatum& d2);
NormalizationDatum torsor_act(const NormalizationDatum& d, long a, long b);

// ---- F_02 pushforward on two-level windows ----------------------------------

// t-levels [lo_t, hi_t), level j carrying the u-exponents [u_lo[j], u_hi[j]).
struct TwoLevelWindow {
  FqPtr F;
  long lo_t = 0, hi_t = 0;
  std::vector<std::pair<long, long>> u_windows;

  int level_dim(long j) const {
    auto [a, b] = u_windows.at(static_cast<size_t>(j - lo_t));
    return static_cast<int>(b - a);
  }
  int dim() const {
    int d = 0;
    for (long j = lo_t; j < hi_t; ++j) d += level_dim(j);
    return d;
  }
  qspace::Space space() const { return qspace::Space{F, dim()}; }
  // mask of the B_P part: u-exponents >= 0 everywhere
  std::vector<char> b_type_mask() const;
};

// Integrate out the t-levels [new_hi_t, hi_t) with the weights vol_j(d); the
// counting sums pick up one vol factor per collapsed level.
FnTable f02_pushforward(const FnTable& f, const TwoLevelWindow& W, long new_hi_t,
                        const NormalizationDatum& d);

// ---- three-factor surface zeta ----------------------------------------------

struct SurfaceZeta {
  ZetaSeries plane_stratum;  // X minus C = A^2
  ZetaSeries line_stratum;   // C minus P = A^1
  ZetaSeries point_stratum;  // P
  ZetaSeries product;
  bool product_matches_p2 = false;
};

// zeta_{P^2} split along the strata of a line and a rational point, each
// factor the zero-cycle Euler product of its stratum.
SurfaceZeta surface_zeta_factorization(const FqPtr& F, int N);

}  // namespace adelic::surface
