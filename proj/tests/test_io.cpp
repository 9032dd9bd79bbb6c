#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "wr/io.hpp"
#include "wr/lift.hpp"
#include "wr/search.hpp"
#include "wr/transforms.hpp"

using wr::Coloring;
using wr::FSpec;
using wr::Int;
using wr::TupleSequence;

namespace {

const char* kLexColoringText =
    "coloring d=2 c=2 a=0 R=3\n"
    "0 1 1\n"
    "0 2 0\n"
    "0 3 0\n"
    "1 2 0\n"
    "1 3 0\n"
    "2 3 1\n";

}  // namespace

TEST_CASE("coloring serialization is canonical") {
  TupleSequence s = wr::lex_decreasing_bad_sequence(2, 2);
  Coloring C = wr::sequence_to_coloring(s, 0);
  CHECK(wr::serialize_coloring(C) == kLexColoringText);
  Coloring back = wr::parse_coloring(kLexColoringText);
  CHECK(wr::serialize_coloring(back) == kLexColoringText);
  CHECK(back.color_of({0, 1}) == 1);
  CHECK(back.color_of({1, 3}) == 0);
}

TEST_CASE("coloring parse rejects malformed tables") {
  CHECK_THROWS_AS(wr::parse_coloring(""), wr::ParseError);
  CHECK_THROWS_AS(wr::parse_coloring("sequence c=1 n=0\n"), wr::ParseError);
  CHECK_THROWS_AS(wr::parse_coloring("coloring d=2 c=2 a=0\n"), wr::ParseError);
  // missing cell
  CHECK_THROWS_AS(wr::parse_coloring("coloring d=2 c=2 a=0 R=2\n0 1 0\n0 2 0\n"),
                  wr::ParseError);
  // duplicate cell
  CHECK_THROWS_AS(
      wr::parse_coloring("coloring d=2 c=2 a=0 R=2\n0 1 0\n0 1 0\n1 2 0\n"),
      wr::ParseError);
  // out of order
  CHECK_THROWS_AS(
      wr::parse_coloring("coloring d=2 c=2 a=0 R=2\n0 2 0\n0 1 0\n1 2 0\n"),
      wr::ParseError);
  // color out of range
  CHECK_THROWS_AS(
      wr::parse_coloring("coloring d=2 c=2 a=0 R=2\n0 1 0\n0 2 2\n1 2 0\n"),
      wr::ParseError);
  // trailing garbage cell
  CHECK_THROWS_AS(wr::parse_coloring(
                      "coloring d=2 c=2 a=0 R=2\n0 1 0\n0 2 0\n1 2 0\n9 9 0\n"),
                  wr::ParseError);
  // non-integer
  CHECK_THROWS_AS(wr::parse_coloring("coloring d=2 c=2 a=0 R=2\n0 1 x\n"),
                  wr::ParseError);
}

TEST_CASE("sequence round trip") {
  TupleSequence s{2, {{1, 0}, {0, 1}}};
  std::string text = wr::serialize_sequence(s);
  CHECK(text == "sequence c=2 n=2\n1 0\n0 1\n");
  TupleSequence back = wr::parse_sequence(text);
  CHECK(back.arity == 2);
  CHECK(back.items == s.items);
  CHECK(wr::serialize_sequence(back) == text);
}

TEST_CASE("empty-arity sequences serialize as blank item lines") {
  TupleSequence s{0, {{}}};
  std::string text = wr::serialize_sequence(s);
  CHECK(text == "sequence c=0 n=1\n\n");
  TupleSequence back = wr::parse_sequence(text);
  CHECK(back.arity == 0);
  REQUIRE(back.length() == 1);
  CHECK(back.items[0].empty());
}

TEST_CASE("sequence parse errors") {
  CHECK_THROWS_AS(wr::parse_sequence(""), wr::ParseError);
  CHECK_THROWS_AS(wr::parse_sequence("coloring d=2 c=2 a=0 R=1\n0 1 0\n"),
                  wr::ParseError);
  CHECK_THROWS_AS(wr::parse_sequence("sequence c=2 n=2\n1 0\n"), wr::ParseError);
  CHECK_THROWS_AS(wr::parse_sequence("sequence c=2 n=1\n1 0 3\n"), wr::ParseError);
  CHECK_THROWS_AS(wr::parse_sequence("sequence c=1 n=1\n-2\n"), wr::ParseError);
}

TEST_CASE("random colorings and sequences round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Coloring C = wrtest::random_coloring(2, 3, 1, 6, 1000 + seed);
    std::string text = wr::serialize_coloring(C);
    Coloring back = wr::parse_coloring(text);
    CHECK(wr::serialize_coloring(back) == text);
    CHECK(back.cells() == C.cells());
  }
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 10; ++iter) {
    TupleSequence s;
    s.arity = 3;
    int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      wr::Tuple t(3);
      for (auto& x : t) x = static_cast<Int>(rng() % 9);
      s.items.push_back(t);
    }
    std::string text = wr::serialize_sequence(s);
    TupleSequence back = wr::parse_sequence(text);
    CHECK(back.items == s.items);
    CHECK(wr::serialize_sequence(back) == text);
  }
}

TEST_CASE("lifted colorings serialize by construction and reparse") {
  std::vector<int> cells(3, 0);
  Coloring C = Coloring::table(2, 1, 0, 2, cells);
  Coloring lifted = wr::lift_bad_coloring(C, 3);
  std::string text = wr::serialize_coloring(lifted);
  CHECK(text.rfind("coloring-rule lift m=3 d=3 c=5 a=0 R=7\n", 0) == 0);
  Coloring back = wr::parse_coloring(text);
  CHECK(back.dim() == 3);
  CHECK(back.colors() == 5);
  CHECK(back.hi() == 7);
  CHECK(wr::serialize_coloring(back) == text);
  // rule agreement on every cell
  wr::for_each_combination(0, 7, 3, [&](std::span<const Int> cell) {
    CHECK(back.color_of(cell) == lifted.color_of(cell));
  });
}

TEST_CASE("rule colorings without provenance refuse to serialize") {
  Coloring g = Coloring::rule(3, 2, 0, 7, [](std::span<const Int> pts) {
    return wr::run_parities(pts).increasing;
  });
  CHECK_THROWS_AS(wr::serialize_coloring(g), wr::PreconditionError);
}

TEST_CASE("f-spec grammar") {
  CHECK(wr::parse_fspec("const:3")(17) == 3);
  CHECK(wr::parse_fspec("id")(5) == 5);
  CHECK(wr::parse_fspec("affine:2,1")(3) == 7);
  CHECK(wr::parse_fspec("const:3").to_string() == "const:3");
  CHECK_THROWS_AS(wr::parse_fspec("cubic:3"), wr::ParseError);
  CHECK_THROWS_AS(wr::parse_fspec("const:x"), wr::ParseError);
  CHECK_THROWS_AS(wr::parse_fspec("affine:2"), wr::ParseError);
  CHECK_THROWS_AS(wr::parse_fspec("const:-1"), wr::ParseError);

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "wr_io_test";
  fs::create_directories(dir);
  fs::path table = dir / "f.table";
  wr::write_file(table.string(), "5\n3\n1\ndefault 2\n");
  FSpec f = wr::parse_fspec("table:" + table.string());
  CHECK(f(0) == 5);
  CHECK(f(2) == 1);
  CHECK(f(9) == 2);
  CHECK(f.to_string() == "table:" + table.string());

  wr::write_file(table.string(), "5\n3\n");
  CHECK_THROWS_AS(wr::parse_fspec("table:" + table.string()), wr::ParseError);
  CHECK_THROWS_AS(wr::parse_fspec("table:" + (dir / "missing").string()),
                  wr::ParseError);
  fs::remove_all(dir);
}
