#pragma once

#include "adelic/window.hpp"

namespace adelic::adeles {

// Kernel/cokernel dimensions of the window truncation of
// W + O_P(D) -> K_P at P = infinity, where W = sections of O(D) over
// P^1 minus P. Recomputed at enlarged bounds; instability is an error,
// never silently accepted.
struct CohomologyReport {
  long h0 = 0, h1 = 0;
  long bound_poles = 0, bound_prec = 0;  // bounds at which the result stabilized
};

CohomologyReport restricted_complex_cohomology(const Divisor& D, long bound_poles = -1,
                                               long bound_prec = -1);

// Do the global functions with poles in S (unbounded at P, bounded by the
// window elsewhere) surject onto the blocks away from P?
bool strong_approximation_check(const AdeleWindow& W, const ClosedPoint& P);

}  // namespace adelic::adeles
