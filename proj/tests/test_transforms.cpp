#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wr/search.hpp"
#include "wr/transforms.hpp"

using wr::Coloring;
using wr::FSpec;
using wr::Int;
using wr::TupleSequence;

namespace {

Coloring constant_coloring(int dim, Int lo, Int hi) {
  std::vector<int> cells(static_cast<std::size_t>(wr::binomial(hi - lo + 1, dim)), 0);
  return Coloring::table(dim, 1, lo, hi, std::move(cells));
}

}  // namespace

TEST_CASE("h recursion on the constant one-color coloring") {
  wr::HMatrix m = wr::compute_h(constant_coloring(2, 0, 2), FSpec::constant(3));
  REQUIRE(m.rows() == 3);
  REQUIRE(m.colors == 1);
  CHECK(m.h[0][0] == 3);
  CHECK(m.h[1][0] == 2);
  CHECK(m.h[2][0] == 1);
}

TEST_CASE("h on a single-point domain is f(a) everywhere") {
  Coloring C = Coloring::table(2, 2, 4, 4, {});
  wr::HMatrix m = wr::compute_h(C, FSpec::identity());
  REQUIRE(m.rows() == 1);
  CHECK(m.h[0][0] == 4);
  CHECK(m.h[0][1] == 4);
}

TEST_CASE("h decreases strictly along same-colored edges") {
  TupleSequence s{2, {{1, 0}, {0, 1}}};
  Coloring C = wr::sequence_to_coloring(s, 0);
  CHECK(C.color_of({0, 1}) == 0);
  wr::HMatrix m = wr::compute_h(C, FSpec::constant(2));
  CHECK(m.h[0][0] == 2);
  CHECK(m.h[1][0] == 1);  // color-0 edge (0,1) forces the drop
  CHECK(m.h[0][1] == 2);
  CHECK(m.h[1][1] == 2);
}

TEST_CASE("h requires an f-bad input") {
  CHECK_THROWS_AS(wr::compute_h(constant_coloring(2, 0, 3), FSpec::constant(3)),
                  wr::PreconditionError);
}

TEST_CASE("coloring_to_sequence on the constant coloring") {
  TupleSequence s =
      wr::coloring_to_sequence(constant_coloring(2, 0, 2), FSpec::constant(3));
  CHECK(s.items == std::vector<wr::Tuple>{{2}, {1}, {0}});
  CHECK(wr::is_bad_sequence(s));
  CHECK(wr::is_bounded(s, 0, FSpec::constant(3)));
}

TEST_CASE("coloring_to_sequence on a single point") {
  Coloring C = Coloring::table(2, 3, 7, 7, {});
  TupleSequence s = wr::coloring_to_sequence(C, FSpec::constant(5));
  REQUIRE(s.length() == 1);
  CHECK(s.items[0] == wr::Tuple{4, 4, 4});
}

TEST_CASE("sequence_to_coloring basics") {
  TupleSequence s{2, {{1, 0}, {0, 1}}};
  Coloring C = wr::sequence_to_coloring(s, 0);
  CHECK(C.dim() == 2);
  CHECK(C.colors() == 2);
  CHECK(C.color_of({0, 1}) == 0);

  TupleSequence single{3, {{5, 0, 2}}};
  Coloring C1 = wr::sequence_to_coloring(single, 9);
  CHECK(C1.lo() == 9);
  CHECK(C1.hi() == 9);
  CHECK(C1.cell_count() == 0);
}

TEST_CASE("sequence_to_coloring of the lex witness is 2-bad") {
  TupleSequence s = wr::lex_decreasing_bad_sequence(2, 2);
  Coloring C = wr::sequence_to_coloring(s, 0);
  CHECK(C.cells() == std::vector<int>{1, 0, 0, 0, 0, 1});
  CHECK(wr::is_f_bad_coloring(C, FSpec::constant(2)));
}

TEST_CASE("sequence_to_coloring rejects non-bad input with the offending pair") {
  TupleSequence s{2, {{0, 0}, {1, 1}}};
  try {
    wr::sequence_to_coloring(s, 0);
    FAIL("expected a precondition error");
  } catch (const wr::PreconditionError& e) {
    CHECK(std::string(e.what()) == "not a bad sequence: items 0 <= 1");
  }
}

TEST_CASE("badness transport from colorings to sequences, exhaustively") {
  const FSpec f = FSpec::constant(2);
  int bad_count = 0;
  for (Int n = 1; n <= 4; ++n) {
    wr::ColoringEnumerator en(2, 2, 0, n - 1);
    for (Int i = 0; i < en.count(); ++i) {
      Coloring C = en.at(i);
      if (!wr::is_f_bad_coloring(C, f)) continue;
      ++bad_count;
      TupleSequence s = wr::coloring_to_sequence(C, f);
      CHECK(s.length() == n);
      CHECK(wr::is_bad_sequence(s));
      CHECK(wr::is_bounded(s, 0, f));
      // h-matrix invariant: same-colored edges strictly decrease h
      wr::HMatrix m = wr::compute_h(C, f);
      for (Int a = 0; a < n; ++a)
        for (Int b = a + 1; b < n; ++b) {
          int k = C.color_of({a, b});
          CHECK(m.h[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] >
                m.h[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)]);
        }
    }
  }
  CHECK(bad_count > 0);
}

TEST_CASE("badness transport from sequences to colorings, exhaustively") {
  const FSpec f = FSpec::constant(2);
  int count = 0;
  wrtest::for_each_bad_sequence(2, 2, [&](const TupleSequence& s) {
    ++count;
    Coloring C = wr::sequence_to_coloring(s, 0);
    CHECK(wr::is_f_bad_coloring(C, f));
    // size bound from the construction: a weakly homogeneous H strictly
    // descends in its window color k, so |H| <= (first item)_k + 1 <= f(min H)
    wrtest::for_each_subset(C.lo(), C.hi(), [&](const std::vector<Int>& H) {
      if (H.size() < 2 || !wr::is_weakly_homogeneous(C, H)) return;
      int k = C.color_of({H[0], H[1]});
      Int head = s.items[static_cast<std::size_t>(H[0])][static_cast<std::size_t>(k)];
      CHECK(static_cast<Int>(H.size()) <= head + 1);
      CHECK(head + 1 <= f(H[0]));
    });
  });
  CHECK(count > 0);
}

TEST_CASE("round trip preserves length and badness") {
  const FSpec f = FSpec::constant(2);
  wrtest::for_each_bad_sequence(2, 2, [&](const TupleSequence& s) {
    Coloring C = wr::sequence_to_coloring(s, 0);
    TupleSequence back = wr::coloring_to_sequence(C, f);
    CHECK(back.length() == s.length());
    CHECK(wr::is_bad_sequence(back));
  });
}
