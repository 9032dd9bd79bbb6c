#pragma once

// Dimension-changing machinery. Downward: a bad d-dimensional coloring on
// [0,R-1] lifts to a bad (d+1)-dimensional coloring on [0,2^R-1] built from
// the highest-differing-bit map and two parity colorings. Upward: a
// left-greedy tree of min-homogeneous sequences extracts a min-homogeneous
// set, which reduces a (d+1)-dimensional coloring to a d-dimensional one.

#include <optional>

#include "wr/core.hpp"

namespace wr {

// Largest domain allowed for the lifted coloring's predecessor scan.
inline constexpr Int kMaxLiftDomain = Int{1} << 16;

// Highest bit position at which the binary representations of x < y differ
// (shorter one padded with zeros). y < 2^R implies the result is < R.
int highest_differing_bit(Int x, Int y);

struct RunParities {
  int increasing = 0;  // parity of the largest i whose first i+1 alphas ascend
  int decreasing = 0;  // same with descending alphas
};

// Parities of the longest initial strictly monotone runs of the chain
// alpha(x_0,x_1), alpha(x_1,x_2), ... over an increasing point list. A
// single-element chain counts as a run of index 0.
RunParities run_parities(std::span<const Int> points);

// Color of the alpha chain under C when it is strictly monotone: C applied
// to the ascending chain directly, to the descending chain reversed, and 0
// otherwise. points has C.dim()+1 entries.
int chain_color(const Coloring& C, std::span<const Int> points);

// Packs chain color and run parities into one value: 4*chain + 2*inc + dec,
// giving a coloring into 4*C.colors() values.
int combined_color(const Coloring& C, std::span<const Int> points);

// Lifts an m-bad coloring C on [0,R-1] (dimension d) to a rule-backed
// (d+1)-dimensional coloring on [0,2^R-1] with 4c+1 colors. A cell gets
// combined color + 1 when some y < x_0 makes {y,x_0,...,x_d} weakly
// homogeneous for the combined coloring, and 0 otherwise. Every weakly
// homogeneous set of the result with more than d+1 elements has size <= m.
Coloring lift_bad_coloring(const Coloring& C, Int m);

// X is min-homogeneous when the color of any increasing (dim-1)-prefix from
// X does not depend on the final element chosen above it inside X.
// Vacuously true for |X| <= dim.
bool is_min_d_homogeneous(const Coloring& C, const std::vector<Int>& X);

// Tree of strictly increasing sequences, closed under prefix, grown one node
// per domain element: element e attaches below the leftmost longest node
// sigma for which sigma + e stays min-homogeneous.
struct ERTree {
  std::vector<std::vector<Int>> nodes;  // insertion order; nodes[0] is the root

  const std::vector<Int>& deepest_leftmost() const;
};

ERTree build_er_tree(const Coloring& C);

// Deepest leftmost branch, extended by the next domain element when that
// keeps the predicate; the result is re-verified before returning.
Witness extract_min_d_homogeneous(const Coloring& C);

struct ReducedColoring {
  Coloring coloring;          // dimension C.dim()-1, on [0, |X|-2] relabeled
  std::vector<Int> ground;    // ground[i] is the original value of point i
  Int apex = 0;               // max X, consumed as the fixed last coordinate
};

// D(x_0,...,x_{d-1}) = C(x_0,...,x_{d-1}, max X) on X minus its maximum,
// relabeled to a contiguous domain. Requires X min-homogeneous with
// |X| >= C.dim(); |X| = C.dim() gives the single-cell minimum.
ReducedColoring reduce_dimension(const Coloring& C, const std::vector<Int>& X);

struct RecursiveSearch {
  std::optional<Witness> witness;
  std::string report;  // where extraction fell short, when absent
};

// Repeatedly extracts a min-homogeneous set and reduces the dimension until
// a pair coloring remains, then searches it directly for a weakly
// homogeneous set of size >= target and maps the result back up.
RecursiveSearch find_weakly_homogeneous_recursive(const Coloring& C, Int target);

}  // namespace wr
