#include "adelic/qspace.hpp"

#include "adelic/linalg.hpp"

namespace adelic::qspace {

Pairing standard_pairing(const Space& V) {
  Pairing p;
  p.V = V;
  p.W = V;
  for (int i = 0; i < V.dim; ++i) {
    PairBlock b;
    b.rows = {i};
    b.cols = {i};
    b.m = {{V.F->one()}};
    p.blocks.push_back(std::move(b));
  }
  return p;
}

Pairing product_pairing(const Pairing& a, const Pairing& b) {
  if (a.V.F.get() != b.V.F.get()) throw ContractViolation("product_pairing: mixed fields");
  Pairing p;
  p.V = Space{a.V.F, a.V.dim + b.V.dim};
  p.W = Space{a.W.F, a.W.dim + b.W.dim};
  p.blocks = a.blocks;
  for (const auto& blk : b.blocks) {
    PairBlock shifted = blk;
    for (auto& r : shifted.rows) r += a.V.dim;
    for (auto& c : shifted.cols) c += a.W.dim;
    p.blocks.push_back(std::move(shifted));
  }
  return p;
}

bool nondegenerate(const Pairing& p) {
  std::vector<char> rseen(static_cast<size_t>(p.V.dim), 0), cseen(static_cast<size_t>(p.W.dim), 0);
  for (const auto& b : p.blocks) {
    if (b.rows.size() != b.cols.size()) return false;
    for (int r : b.rows) {
      if (rseen[static_cast<size_t>(r)]) return false;
      rseen[static_cast<size_t>(r)] = 1;
    }
    for (int c : b.cols) {
      if (cseen[static_cast<size_t>(c)]) return false;
      cseen[static_cast<size_t>(c)] = 1;
    }
    linalg::Mat m(p.V.F, b.rows.size(), b.cols.size());
    for (size_t i = 0; i < b.rows.size(); ++i)
      for (size_t j = 0; j < b.cols.size(); ++j) m.at(i, j) = b.m[i][j];
    if (linalg::rank(m) != b.rows.size()) return false;
  }
  for (char s : rseen)
    if (!s) return false;
  for (char s : cseen)
    if (!s) return false;
  return true;
}

}  // namespace adelic::qspace
