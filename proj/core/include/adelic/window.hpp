#pragma once

#include "adelic/curve.hpp"
#include "adelic/linalg.hpp"
#include "adelic/qspace.hpp"

namespace adelic::adeles {

using algebra::Fq;
using algebra::FqPtr;
using curve::Divisor;
using series::ClosedPoint;
using series::FqRat;

// One local factor of a finite adelic window: the exponent range [lo, hi) at
// a place, deg(x) F_q-coordinates per exponent.
struct PlaceBlock {
  ClosedPoint x;
  long lo = 0, hi = 0;
  int offset = 0;
  int dim() const { return static_cast<int>(hi - lo) * x.degree; }
};

// A(D_high)/A(D_low) over a finite place set S: the finite-dimensional stage
// for all window-level Fourier/Parseval computations. deg D_low <= -1 keeps
// global sections embedded injectively.
class AdeleWindow {
 public:
  static AdeleWindow make(std::vector<ClosedPoint> S, const Divisor& D_low, const Divisor& D_high);
  // Unchecked variant for single local fields (hecke) and internal duals;
  // the adelic preconditions are intentionally not enforced here.
  static AdeleWindow local(const ClosedPoint& x, long lo, long hi);

  const FqPtr& field() const { return F_; }
  const std::vector<PlaceBlock>& blocks() const { return blocks_; }
  int dim() const { return dim_; }
  const Divisor& d_low() const { return d_low_; }
  const Divisor& d_high() const { return d_high_; }

  qspace::Space space() const { return qspace::Space{F_, dim_}; }

  int coord(size_t block, long e, int basis) const {
    const auto& b = blocks_[block];
    return b.offset + static_cast<int>(e - b.lo) * b.x.degree + basis;
  }

  // Coordinates free in the subgroup A(D)-window (everything below -D(x) is
  // pinned to zero). Size dim().
  std::vector<char> subgroup_mask(const Divisor& D) const;

  bool same_shape(const AdeleWindow& o) const;

 private:
  FqPtr F_;
  std::vector<PlaceBlock> blocks_;
  int dim_ = 0;
  Divisor d_low_, d_high_;
  AdeleWindow(FqPtr F, Divisor lo, Divisor hi) : F_(std::move(F)), d_low_(std::move(lo)), d_high_(std::move(hi)) {}
};

using WindowVector = std::vector<Fq>;

// Diagonal image of a global function: per-place truncated expansions.
// Throws when f has a pole outside S or exceeding D_high.
WindowVector embed_global(const FqRat& f, const AdeleWindow& W);

// The divisor of the fixed global form omega = dt on P^1.
Divisor omega_divisor(const FqPtr& F);

// Dual window W((omega)-D_high, (omega)-D_low) for the residue pairing.
AdeleWindow dual_window(const AdeleWindow& W);

// Residue pairing <x,y> = sum_x Tr res_x(x y dt) as a block pairing between
// a window and its dual; nondegeneracy is verified on construction.
qspace::Pairing residue_pairing(const AdeleWindow& V, const AdeleWindow& Vdual);

// Rows = embedded basis of L(D) inside W (D <= D_high, supp within S).
linalg::Mat embedded_global_sections(const Divisor& D, const AdeleWindow& W);

}  // namespace adelic::adeles
