#pragma once

#include <cstdint>

#include "adelic/cyclo.hpp"
#include "adelic/fq.hpp"

namespace adelic::qspace {

using algebra::Fq;
using algebra::FqPtr;

// Finite F_q coordinate space; elements are indices in [0, q^dim) whose
// base-q digits are the coordinates (element indices of F_q).
struct Space {
  FqPtr F;
  int dim = 0;

  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < dim; ++i) {
      s *= static_cast<std::uint64_t>(F->q());
      if (s > (1ULL << 22)) throw ContractViolation("Space: enumeration cap exceeded");
    }
    return s;
  }
  Fq digit(std::uint64_t idx, int i) const {
    for (int k = 0; k < i; ++k) idx /= static_cast<std::uint64_t>(F->q());
    return static_cast<Fq>(idx % static_cast<std::uint64_t>(F->q()));
  }
  std::vector<Fq> coords(std::uint64_t idx) const {
    std::vector<Fq> v(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      v[static_cast<size_t>(i)] = static_cast<Fq>(idx % static_cast<std::uint64_t>(F->q()));
      idx /= static_cast<std::uint64_t>(F->q());
    }
    return v;
  }
  std::uint64_t index(const std::vector<Fq>& v) const {
    std::uint64_t idx = 0;
    for (int i = dim - 1; i >= 0; --i)
      idx = idx * static_cast<std::uint64_t>(F->q()) + v[static_cast<size_t>(i)];
    return idx;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, mult = 1;
    for (int i = 0; i < dim; ++i) {
      Fq s = F->add(static_cast<Fq>(a % F->q()), static_cast<Fq>(b % F->q()));
      r += mult * s;
      a /= static_cast<std::uint64_t>(F->q());
      b /= static_cast<std::uint64_t>(F->q());
      mult *= static_cast<std::uint64_t>(F->q());
    }
    return r;
  }
  std::uint64_t negate(std::uint64_t a) const {
    std::uint64_t r = 0, mult = 1;
    for (int i = 0; i < dim; ++i) {
      r += mult * F->neg(static_cast<Fq>(a % F->q()));
      a /= static_cast<std::uint64_t>(F->q());
      mult *= static_cast<std::uint64_t>(F->q());
    }
    return r;
  }
  bool compatible(const Space& o) const { return F.get() == o.F.get() && dim == o.dim; }
};

// One block of a bilinear pairing V x W -> F_q: coordinates `rows` of V pair
// with coordinates `cols` of W through the small matrix m, and distinct
// blocks touch disjoint coordinates on each side.
struct PairBlock {
  std::vector<int> rows, cols;
  std::vector<std::vector<Fq>> m;
};

struct Pairing {
  Space V, W;
  std::vector<PairBlock> blocks;

  // B(x, y) in F_q
  Fq value(std::uint64_t x, std::uint64_t y) const {
    Fq acc = 0;
    const auto& F = V.F;
    for (const auto& b : blocks)
      for (size_t i = 0; i < b.rows.size(); ++i) {
        Fq xi = V.digit(x, b.rows[i]);
        if (xi == 0) continue;
        for (size_t j = 0; j < b.cols.size(); ++j)
          acc = F->add(acc, F->mul(xi, F->mul(b.m[i][j], W.digit(y, b.cols[j]))));
      }
    return acc;
  }
  Pairing transposed() const {
    Pairing t;
    t.V = W;
    t.W = V;
    for (const auto& b : blocks) {
      PairBlock tb;
      tb.rows = b.cols;
      tb.cols = b.rows;
      tb.m.assign(b.cols.size(), std::vector<Fq>(b.rows.size(), 0));
      for (size_t i = 0; i < b.rows.size(); ++i)
        for (size_t j = 0; j < b.cols.size(); ++j) tb.m[j][i] = b.m[i][j];
      t.blocks.push_back(std::move(tb));
    }
    return t;
  }
};

// dot-product pairing of a plain coordinate space with itself
Pairing standard_pairing(const Space& V);
// direct sum: pairs (V1 x V2) with (W1 x W2) componentwise
Pairing product_pairing(const Pairing& a, const Pairing& b);
// every pairing block is invertible (the pairing is perfect)
bool nondegenerate(const Pairing& p);

}  // namespace adelic::qspace
