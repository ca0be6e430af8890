#include "adelic/linalg.hpp"

namespace adelic::linalg {

namespace {

// in-place row echelon; returns pivot columns
std::vector<size_t> echelon(Mat& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t sel = r;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.a[sel * m.cols + j], m.a[r * m.cols + j]);
    Fq inv = m.F->inv(m.at(r, c));
    for (size_t j = c; j < m.cols; ++j) m.at(r, j) = m.F->mul(m.at(r, j), inv);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Fq f = m.at(i, c);
      for (size_t j = c; j < m.cols; ++j)
        m.at(i, j) = m.F->sub(m.at(i, j), m.F->mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t rank(Mat m) { return echelon(m).size(); }

std::vector<std::vector<Fq>> kernel(const Mat& m0) {
  Mat m = m0;
  auto pivots = echelon(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Fq>> basis;
  for (size_t freec = 0; freec < m.cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Fq> v(m.cols, 0);
    v[freec] = m.F->one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m.F->neg(m.at(r, freec));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const Mat& m, const std::vector<Fq>& v) {
  Mat big(m.F, m.rows + 1, m.cols);
  big.a.assign(m.a.begin(), m.a.end());
  big.a.insert(big.a.end(), v.begin(), v.end());
  return rank(big) == rank(m);
}

bool same_row_space(const Mat& a, const Mat& b) {
  if (a.cols != b.cols) return false;
  size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  Mat both(a.F, a.rows + b.rows, a.cols);
  both.a.assign(a.a.begin(), a.a.end());
  both.a.insert(both.a.end(), b.a.begin(), b.a.end());
  return rank(both) == ra;
}

Mat from_rows(const FqPtr& F, const std::vector<std::vector<Fq>>& rows, size_t cols) {
  Mat m(F, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ContractViolation("from_rows: ragged rows");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace adelic::linalg
