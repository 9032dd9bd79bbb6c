#pragma once

// Brute-force oracles: exhaustive searches for weakly homogeneous sets,
// longest bounded bad sequences, and the derived quantities D, R and the
// weak Ramsey numbers. These provide the ground truth the constructive
// transforms are tested against.

#include <optional>

#include "wr/core.hpp"

namespace wr {

inline constexpr Int kDefaultColoringBudget = Int{1} << 20;
inline constexpr Int kDefaultNodeBudget = Int{1} << 26;

// Some H inside [C.lo, C.hi] with is_weakly_homogeneous(C,H) and
// |H| > f(min H), or nullopt if no such set exists. Exhaustive depth-first
// search over increasing extensions, pruning on color-window mismatch;
// returns the lexicographically least qualifying set.
std::optional<Witness> find_weakly_homogeneous_exceeding(const Coloring& C,
                                                         const FSpec& f);

// Fixed-size variant: a weakly homogeneous set of size >= target, or
// nullopt. Throws BudgetError after max_nodes search nodes.
std::optional<std::vector<Int>> find_weakly_homogeneous_of_size(
    const Coloring& C, Int target, Int max_nodes = kDefaultNodeBudget);

// Every weakly homogeneous set H has |H| <= f(min H).
bool is_f_bad_coloring(const Coloring& C, const FSpec& f);

struct BadSequenceSearch {
  Int length = 0;    // max length found (exact unless capped)
  bool capped = false;
  TupleSequence witness;
};

// Longest (a,f)-bounded bad sequence of c-tuples, capped at cap items.
// Candidates at each depth are generated in decreasing lexicographic order;
// among equal-length maxima the lexicographically least witness is kept.
BadSequenceSearch longest_bad_sequence(int c, Int a, const FSpec& f, Int cap);

struct DValue {
  Int value = 0;
  bool capped = false;
};

// Least D such that every (a,f)-bounded sequence of D+1 c-tuples contains a
// dominated pair; equals the longest bad sequence length.
DValue compute_D(int c, Int a, const FSpec& f, Int cap);

enum class RMethod { ViaD, Brute };

struct RValue {
  Int value = 0;
  bool capped = false;
};

// Least R such that every coloring [a,R]^2 -> c admits a weakly homogeneous
// H with |H| > f(min H). ViaD uses R = D + a; Brute enumerates all colorings
// for increasing R.
RValue compute_R(int c, Int a, const FSpec& f, RMethod method, Int cap,
                 Int max_colorings = kDefaultColoringBudget);

// Closed form a^c for the weak Ramsey number for pairs. The case a = c = 0
// is excluded.
Int compute_wr(int c, Int a);

// Smallest R such that every coloring [0,R]^d -> c admits a weakly
// homogeneous set of size >= a+1, by exhaustive coloring enumeration.
Int brute_wr(int c, Int a, int d, Int max_colorings = kDefaultColoringBudget);

// All a^c tuples of {0..a-1}^c in strictly decreasing lexicographic order.
TupleSequence lex_decreasing_bad_sequence(int c, Int a);

// Deterministic enumeration of all colorings [lo,hi]^dim -> colors. A
// coloring is a mixed-radix integer over the lexicographically ordered cell
// list, cell 0 least significant; iteration is by ascending index.
class ColoringEnumerator {
 public:
  ColoringEnumerator(int dim, int colors, Int lo, Int hi,
                     Int max_colorings = kDefaultColoringBudget);

  Int count() const { return count_; }
  Coloring at(Int index) const;

 private:
  int dim_;
  int colors_;
  Int lo_, hi_;
  Int cells_;
  Int count_;
};

}  // namespace wr
