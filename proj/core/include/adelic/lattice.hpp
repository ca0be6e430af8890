#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace adelic::lattice {

// Element of the free distributive lattice on the generators {01, 02, 12},
// in join-of-meets normal form: an antichain of nonempty generator subsets
// (3-bit masks), no subset containing another.
struct LatticeTerm {
  std::vector<std::uint8_t> masks;  // sorted, antichain, each in [1, 7]

  static LatticeTerm generator(int i);  // i in {0 -> 01, 1 -> 02, 2 -> 12}
  static LatticeTerm meet_of(std::uint8_t mask);

  void normalize();
  bool operator==(const LatticeTerm& o) const { return masks == o.masks; }
  bool operator<(const LatticeTerm& o) const { return masks < o.masks; }

  std::string str() const;  // e.g. "(01&02)|(12)"
};

LatticeTerm meet(const LatticeTerm& a, const LatticeTerm& b);
LatticeTerm join(const LatticeTerm& a, const LatticeTerm& b);
bool leq(const LatticeTerm& a, const LatticeTerm& b);

// Evaluation under a Boolean assignment of the three generators; normal-form
// soundness is tested against all eight of these.
bool boolean_evaluate(const LatticeTerm& t, const std::array<bool, 3>& vals);

struct FreeLattice {
  std::vector<LatticeTerm> elements;            // all 18, sorted
  std::vector<std::pair<int, int>> hasse;       // covering pairs (lower, upper)
};
FreeLattice enumerate_free_lattice();
std::string hasse_dot(const FreeLattice& L);

// Count of all monotone Boolean functions on 3 inputs (Dedekind number
// M(3) = 20); independent cross-check for the 18 + two constants.
int count_monotone_boolean_3();

// ---- concrete monomial-subspace model ---------------------------------------

inline constexpr long kNegInf = std::numeric_limits<long>::min() / 4;

// Union of up-quadrants { (i, j) : i >= a, j >= b } with a, b in Z or -inf;
// models the monomial subspace spanned by u^i t^j over the point set.
struct QuadrantSet {
  struct Corner {
    long a = 0, b = 0;
    bool operator==(const Corner& o) const { return a == o.a && b == o.b; }
    bool operator<(const Corner& o) const { return std::pair(a, b) < std::pair(o.a, o.b); }
  };
  std::vector<Corner> corners;  // normalized: minimal corners only, sorted

  static QuadrantSet empty() { return {}; }
  static QuadrantSet quadrant(long a, long b) { return QuadrantSet{{Corner{a, b}}}; }

  void normalize();
  bool operator==(const QuadrantSet& o) const { return corners == o.corners; }
  bool contains_point(long i, long j) const;
  std::string str() const;
};

QuadrantSet set_union(const QuadrantSet& s1, const QuadrantSet& s2);
QuadrantSet set_intersection(const QuadrantSet& s1, const QuadrantSet& s2);

// finite symmetric difference, decided exactly from the row profiles outside
// the bounding box of the finite corner coordinates
bool commensurable(const QuadrantSet& s1, const QuadrantSet& s2);

using Assignment = std::array<QuadrantSet, 3>;  // images of 01, 02, 12

QuadrantSet model_evaluate(const LatticeTerm& t, const Assignment& A);

// do the 18 elements evaluate to pairwise non-commensurable sets?
bool injectivity_check(const Assignment& A);

// Bounded deterministic search over two-corner staircases
// {(A, s1)} U {(-inf, s2)}; returns the first assignment passing
// injectivity_check, if any exists in the range.
std::optional<Assignment> search_assignment();

// The assignment shipped with the library (best found by the search family;
// see the search script and the test suite for its verified properties).
Assignment shipped_assignment();

}  // namespace adelic::lattice
