#pragma once

// Constructive transforms between f-bad pair colorings and (a,f)-bounded bad
// tuple sequences. One direction runs a course-of-values recursion on a
// per-color height matrix; the other colors each pair by the least strictly
// decreasing coordinate.

#include "wr/core.hpp"

namespace wr {

// h(i,k) for rows i in [0, R-a] and colors k in [0, c-1]. For an f-bad
// source coloring every entry satisfies 1 <= h(i,k) <= f(a+i), and
// C(a+j, a+i) = k with j < i forces h(j,k) > h(i,k).
struct HMatrix {
  Int a = 0;
  int colors = 0;
  std::vector<std::vector<Int>> h;  // h[i][k]

  Int rows() const { return static_cast<Int>(h.size()); }
};

// h(i,k) = min({f(a+i)} u {h(j,k)-1 : j < i, C(a+j, a+i) = k}), computed by
// increasing i. Requires C to be a 2-dimensional f-bad coloring; that is
// what guarantees h >= 1.
HMatrix compute_h(const Coloring& C, const FSpec& f);

// Row i becomes the tuple (h(i,0)-1, ..., h(i,c-1)-1). The output has
// length R-a+1, is bad, and is (a,f)-bounded.
TupleSequence coloring_to_sequence(const Coloring& C, const FSpec& f);

// C(a+i, a+j) = least k with (items[i])_k > (items[j])_k, on [a, a+D].
// Requires a bad input sequence; when the input is also (a,f)-bounded the
// output is f-bad.
Coloring sequence_to_coloring(const TupleSequence& s, Int a);

}  // namespace wr
