#pragma once

#include "adelic/fq.hpp"

namespace adelic::linalg {

using algebra::Fq;
using algebra::FqPtr;

// Dense matrix over F_q, row-major.
struct Mat {
  FqPtr F;
  size_t rows = 0, cols = 0;
  std::vector<Fq> a;

  Mat(FqPtr field, size_t r, size_t c) : F(std::move(field)), rows(r), cols(c), a(r * c, 0) {}
  Fq& at(size_t i, size_t j) { return a[i * cols + j]; }
  Fq at(size_t i, size_t j) const { return a[i * cols + j]; }
};

size_t rank(Mat m);
// Basis of the right kernel {x : M x = 0} as rows.
std::vector<std::vector<Fq>> kernel(const Mat& m);
// Row space membership: does v lie in the span of the rows of m?
bool in_row_space(const Mat& m, const std::vector<Fq>& v);
// Do two row sets span the same subspace?
bool same_row_space(const Mat& a, const Mat& b);

Mat from_rows(const FqPtr& F, const std::vector<std::vector<Fq>>& rows, size_t cols);

}  // namespace adelic::linalg
