#pragma once

// Core domain types for colorings of increasing d-subsets and for sequences
// of c-tuples under the coordinatewise product order, plus the primitive
// predicates everything else is built from: domination, norm, badness,
// boundedness, homogeneity and weak (adjacent) homogeneity.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wr {

using Int = std::int64_t;

// Error taxonomy. The CLI maps these onto exit codes: precondition -> 1,
// budget -> 2, parse -> 3.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Binomial coefficient with overflow guard.
Int binomial(Int n, Int k);

// Visits all strictly increasing k-subsets of [lo,hi] in lexicographic
// order. For k == 0 the single empty subset is visited.
template <typename F>
void for_each_combination(Int lo, Int hi, int k, F&& visit) {
  if (k < 0) return;
  if (k == 0) {
    visit(std::span<const Int>{});
    return;
  }
  if (hi - lo + 1 < k) return;
  std::vector<Int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = lo + i;
  while (true) {
    visit(std::span<const Int>(cur));
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi - (k - 1 - i)) --i;
    if (i < 0) return;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// A c-tuple of nonnegative integers.
using Tuple = std::vector<Int>;

// s <= t in the product order: every coordinate of s is <= the matching
// coordinate of t. Reflexive. Throws on arity mismatch.
bool dominates(const Tuple& s, const Tuple& t);

// Max coordinate; 0 for the empty tuple.
Int norm(const Tuple& t);

struct TupleSequence {
  int arity = 0;  // c
  std::vector<Tuple> items;

  Int length() const { return static_cast<Int>(items.size()); }
};

// Checks arity and nonnegativity of every item.
void validate_sequence(const TupleSequence& s);

// A finitely described parameter function f: N -> N.
class FSpec {
 public:
  static FSpec constant(Int k);
  static FSpec identity();
  static FSpec affine(Int p, Int q);  // x -> p*x + q
  static FSpec table(std::vector<Int> values, Int default_beyond,
                     std::string source = {});

  Int operator()(Int x) const;
  std::string to_string() const;  // const:<k> | id | affine:<p>,<q> | table:<src>

 private:
  struct Const { Int k; };
  struct Id {};
  struct Affine { Int p, q; };
  struct Table { std::vector<Int> values; Int fallback; std::string source; };

  std::variant<Const, Id, Affine, Table> v_;
};

inline Int eval_f(const FSpec& f, Int x) { return f(x); }

// Total assignment of one of `colors` colors to every strictly increasing
// dim-subset of [lo,hi]. Either table-backed (cells stored in lexicographic
// order of the subsets) or rule-backed (a pure evaluation function, for
// domains too large to tabulate).
class Coloring {
 public:
  using Rule = std::function<int(std::span<const Int>)>;

  static Coloring table(int dim, int colors, Int lo, Int hi,
                        std::vector<int> cells);
  static Coloring rule(int dim, int colors, Int lo, Int hi, Rule fn);

  int dim() const { return dim_; }
  int colors() const { return colors_; }
  Int lo() const { return lo_; }
  Int hi() const { return hi_; }
  Int points() const { return hi_ - lo_ + 1; }
  Int cell_count() const;  // C(points, dim)
  bool table_backed() const { return rule_ == nullptr; }
  const std::vector<int>& cells() const;

  // Color of an increasing dim-subset of [lo,hi].
  int color_of(std::span<const Int> pts) const;
  int color_of(std::initializer_list<Int> pts) const;

  // Set by lift_bad_coloring so rule-backed colorings can be serialized by
  // their construction. Unset on ordinary colorings (lift_m() < 0).
  void set_lift_provenance(std::shared_ptr<const Coloring> source, Int m);
  const Coloring* lift_source() const { return lift_source_.get(); }
  std::shared_ptr<const Coloring> lift_source_ptr() const { return lift_source_; }
  Int lift_m() const { return lift_m_; }

 private:
  Coloring() = default;

  int dim_ = 0;
  int colors_ = 0;
  Int lo_ = 0;
  Int hi_ = 0;
  std::vector<int> cells_;
  Rule rule_;
  std::shared_ptr<const Coloring> lift_source_;
  Int lift_m_ = -1;
};

// No index pair i < j has items[i] <= items[j].
bool is_bad_sequence(const TupleSequence& s);

// Every item i has norm < f(a+i).
bool is_bounded(const TupleSequence& s, Int a, const FSpec& f);

// H given as a strictly increasing list inside [C.lo, C.hi]. True iff all
// consecutive dim-windows of H receive equal colors; vacuously true for
// |H| <= dim.
bool is_weakly_homogeneous(const Coloring& C, const std::vector<Int>& H);

// All dim-subsets of H share one color.
bool is_homogeneous(const Coloring& C, const std::vector<Int>& H);

enum class WitnessKind { WeakHomSet, BadSequence, BadColoring, MinDHomSet };

// A certified output: the object together with the property that was checked
// when it was produced.
struct Witness {
  WitnessKind kind;
  std::variant<std::vector<Int>, TupleSequence, Coloring> payload;
  std::string checked_property;

  const std::vector<Int>& as_set() const;
  const TupleSequence& as_sequence() const;
  const Coloring& as_coloring() const;
};

}  // namespace wr
