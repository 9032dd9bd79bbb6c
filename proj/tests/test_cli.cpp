#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "wr/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  fs::path dir = fs::temp_directory_path() / "wrtool_cli_test";
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args) {
  fs::path dir = work_dir();
  fs::path out = dir / "stdout.txt";
  fs::path err = dir / "stderr.txt";
  std::string cmd = std::string(WRTOOL_PATH) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = wr::read_file(out.string());
  r.err = wr::read_file(err.string());
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("wr command") {
  RunResult r = run("wr --c 2 --a 2 --brute");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "formula=4 brute=4 AGREE"));
  CHECK(contains(r.out, "RESULT formula=4 brute=4 agree=1"));

  r = run("wr --c 1 --a 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "formula=5"));

  r = run("wr --c 0 --a 0");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.err, "excluded"));
}

TEST_CASE("dmax command") {
  RunResult r = run("dmax --c 1 --a 7 --f id");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "D=7"));
  CHECK(contains(r.out, "RESULT D=7 capped=0"));

  r = run("dmax --c 2 --a 0 --f const:2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "RESULT D=4 capped=0"));

  fs::path witness = work_dir() / "witness.seq";
  r = run("dmax --c 1 --a 0 --f const:3 --witness " + witness.string());
  CHECK(r.exit_code == 0);
  CHECK(wr::read_file(witness.string()) == "sequence c=1 n=3\n2\n1\n0\n");

  r = run("dmax --c 1 --a 0 --f const:5 --cap 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "D>=3 (cap 3 reached)"));
  CHECK(contains(r.out, "RESULT D=3 capped=1"));
}

TEST_CASE("transform commands") {
  fs::path dir = work_dir();
  fs::path tri = dir / "tri.color";
  wr::write_file(tri.string(),
                 "coloring d=2 c=1 a=0 R=2\n0 1 0\n0 2 0\n1 2 0\n");
  fs::path seq = dir / "out.seq";
  RunResult r = run("transform --to-seq --input " + tri.string() + " --f const:3 --output " + seq.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "certificate: sequence of length 3 is bad"));
  CHECK(wr::read_file(seq.string()) == "sequence c=1 n=3\n2\n1\n0\n");

  fs::path lexseq = dir / "lex.seq";
  wr::write_file(lexseq.string(), "sequence c=2 n=4\n1 1\n1 0\n0 1\n0 0\n");
  fs::path color = dir / "lex.color";
  r = run("transform --to-coloring --input " + lexseq.string() +
          " --f const:2 --a 0 --output " + color.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "certificate: coloring on [0,3] is f-bad for f=const:2"));
  CHECK(wr::read_file(color.string()) ==
        "coloring d=2 c=2 a=0 R=3\n0 1 1\n0 2 0\n0 3 0\n1 2 0\n1 3 0\n2 3 1\n");

  fs::path notbad = dir / "notbad.seq";
  wr::write_file(notbad.string(), "sequence c=2 n=2\n0 0\n1 1\n");
  r = run("transform --to-coloring --input " + notbad.string() +
          " --f const:2 --a 0 --output " + (dir / "x.color").string());
  CHECK(r.exit_code == 1);
  CHECK(contains(r.err, "not a bad sequence: items 0 <= 1"));

  fs::path garbage = dir / "garbage.color";
  wr::write_file(garbage.string(), "what even is this\n");
  r = run("transform --to-seq --input " + garbage.string() + " --f id --output " +
          (dir / "y.seq").string());
  CHECK(r.exit_code == 3);
}

TEST_CASE("lift and extract commands") {
  fs::path dir = work_dir();
  fs::path tri = dir / "tri.color";
  wr::write_file(tri.string(),
                 "coloring d=2 c=1 a=0 R=2\n0 1 0\n0 2 0\n1 2 0\n");
  fs::path lifted = dir / "lift.color";
  RunResult r = run("lift --input " + tri.string() + " --m 3 --output " + lifted.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "5-color dim-3 coloring on [0,7]"));
  CHECK(contains(r.out, "verified m-bad"));
  CHECK(contains(r.out, "RESULT colors=5 lo=0 hi=7 verified=1"));

  r = run("extract --input " + lifted.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "certificate: min-homogeneous set of size"));

  r = run("extract --input " + lifted.string() + " --target 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "RESULT found=1 size=3 verified=1"));
}

TEST_CASE("bounds and fgh commands") {
  RunResult r = run("bounds --d 2 --c 2 --m 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "ub=531441 lb=9 (colors 2)"));

  r = run("bounds --d 3 --c 1 --m 2");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "budget"));

  r = run("fgh --n 1 --x 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "F_1(3)=7"));
  CHECK(contains(r.out, "RESULT value=7"));

  r = run("fgh --n 3 --x 3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("unknown arguments exit with the parse code") {
  RunResult r = run("wr --nope 3");
  CHECK(r.exit_code == 3);
}
