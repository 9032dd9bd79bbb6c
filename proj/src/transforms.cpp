#include "wr/transforms.hpp"

#include <algorithm>

#include "wr/search.hpp"

namespace wr {

HMatrix compute_h(const Coloring& C, const FSpec& f) {
  if (C.dim() != 2)
    throw PreconditionError("transform defined for pair colorings only");
  if (!is_f_bad_coloring(C, f))
    throw PreconditionError("coloring is not f-bad for f=" + f.to_string());

  const Int a = C.lo();
  const Int rows = C.points();
  const int c = C.colors();
  HMatrix m;
  m.a = a;
  m.colors = c;
  m.h.assign(static_cast<std::size_t>(rows), std::vector<Int>(static_cast<std::size_t>(c)));
  for (Int i = 0; i < rows; ++i) {
    for (int k = 0; k < c; ++k) {
      Int v = f(a + i);
      for (Int j = 0; j < i; ++j)
        if (C.color_of({a + j, a + i}) == k) {
          Int prev = m.h[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
          v = std::min(v, prev > 0 ? prev - 1 : 0);
        }
      m.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = v;
    }
  }
  // f-badness of the source guarantees both bounds; check them anyway.
  for (Int i = 0; i < rows; ++i)
    for (int k = 0; k < c; ++k) {
      Int v = m.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (v < 1 || v > f(a + i))
        throw PreconditionError("h(" + std::to_string(i) + "," + std::to_string(k) +
                                ")=" + std::to_string(v) + " outside [1,f(a+i)]");
    }
  return m;
}

TupleSequence coloring_to_sequence(const Coloring& C, const FSpec& f) {
  HMatrix m = compute_h(C, f);
  TupleSequence s;
  s.arity = m.colors;
  s.items.reserve(static_cast<std::size_t>(m.rows()));
  for (const auto& row : m.h) {
    Tuple t;
    t.reserve(row.size());
    for (Int v : row) t.push_back(v - 1);
    s.items.push_back(std::move(t));
  }
  return s;
}

Coloring sequence_to_coloring(const TupleSequence& s, Int a) {
  validate_sequence(s);
  if (a < 0) throw PreconditionError("needs a >= 0");
  if (s.items.empty())
    throw PreconditionError("cannot build a coloring from an empty sequence");
  const Int n = s.length();
  const int c = s.arity;

  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(binomial(n, 2)));
  for (Int i = 0; i < n; ++i)
    for (Int j = i + 1; j < n; ++j) {
      int k = -1;
      for (int t = 0; t < c; ++t)
        if (s.items[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] >
            s.items[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]) {
          k = t;
          break;
        }
      if (k < 0)
        throw PreconditionError("not a bad sequence: items " + std::to_string(i) +
                                " <= " + std::to_string(j));
      cells.push_back(k);
    }
  // Cell order above is (i,j) lexicographic, matching the table layout.
  return Coloring::table(2, c, a, a + n - 1, std::move(cells));
}

}  // namespace wr
