#pragma once

#include "adelic/linalg.hpp"
#include "adelic/qspace.hpp"

namespace adelic::harmonic {

using algebra::CycloValue;
using algebra::Fq;
using algebra::FqPtr;
using qspace::Pairing;
using qspace::Space;

// Exact Q(zeta_p)-valued function on a finite F_q space, stored flat:
// (p-1) rational coordinates per point.
class FnTable {
 public:
  explicit FnTable(Space sp);

  const Space& space() const { return sp_; }
  long p() const { return p_; }
  std::uint64_t size() const { return n_; }

  CycloValue at(std::uint64_t idx) const;
  void set(std::uint64_t idx, const CycloValue& v);
  void add_at(std::uint64_t idx, const CycloValue& v);

  static FnTable delta(const Space& sp, std::uint64_t at);
  static FnTable constant(const Space& sp, const CycloValue& v);
  // characteristic function of the coordinate subspace where every
  // coordinate outside the mask vanishes
  static FnTable char_mask(const Space& sp, const std::vector<char>& mask);
  // sum of point deltas over the row space of the given basis rows
  static FnTable delta_sum_span(const Space& sp, const std::vector<std::vector<Fq>>& rows);

  FnTable scaled(const Rational& r) const;
  FnTable operator+(const FnTable& o) const;
  FnTable negate_arg() const;  // x -> f(-x)
  bool operator==(const FnTable& o) const;
  bool is_zero() const;

  std::uint64_t support_size() const;

  // raw access for the transform kernels
  Rational* raw(std::uint64_t idx) { return flat_.data() + idx * stride_; }
  const Rational* raw(std::uint64_t idx) const { return flat_.data() + idx * stride_; }
  size_t stride() const { return stride_; }

 private:
  Space sp_;
  long p_;
  std::uint64_t n_;
  size_t stride_;
  std::vector<Rational> flat_;
};

// y = A x between coordinate spaces (any shapes)
struct LinMap {
  Space src, dst;
  linalg::Mat A;
  std::uint64_t apply(std::uint64_t x) const;

  static LinMap diagonal(const Space& V);    // a -> (a, a) into V x V
  static LinMap difference(const Space& V);  // (a, b) -> a - b from V x V
  static LinMap to_point(const Space& V);    // beta: V -> 0
  static LinMap from_point(const Space& V);  // alpha: 0 -> V
};

// i_* f(v') = sum over the fiber; zero off the image.
FnTable pushforward(const LinMap& i, const FnTable& f);
// i^* g = g o i.
FnTable pullback(const LinMap& i, const FnTable& g);

FnTable tensor(const FnTable& f, const FnTable& g);
CycloValue pair_tables(const FnTable& f, const FnTable& g);  // sum f*g
CycloValue total_mass(const FnTable& f);                     // beta_*

// f_hat(y) = sum_x psi(B(x, y)) f(x); blockwise kernel, cost |V| * sum q^k.
FnTable fourier(const FnTable& f, const Pairing& P);
// independent quadratic-cost oracle used by the tests
FnTable fourier_naive(const FnTable& f, const Pairing& P);

}  // namespace adelic::harmonic
