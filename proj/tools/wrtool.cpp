// wrtool: command-line frontend for weak Ramsey numbers, Dickson-style
// bounded bad sequences, the coloring<->sequence transforms, the dimension
// lift, min-homogeneous extraction, and the bound/hierarchy evaluators.
//
// Exit codes: 0 verified, 1 precondition, 2 budget, 3 parse.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wr/bounds.hpp"
#include "wr/core.hpp"
#include "wr/io.hpp"
#include "wr/lift.hpp"
#include "wr/search.hpp"
#include "wr/transforms.hpp"

namespace {

using wr::Int;

std::string set_line(const std::vector<Int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ' ';
    out << xs[i];
  }
  return out.str();
}

struct WrArgs {
  int c = 0;
  Int a = 0;
  int d = 2;
  bool brute = false;
  Int budget = wr::kDefaultColoringBudget;
};

int cmd_wr(const WrArgs& args) {
  std::cout << "# wr: weak Ramsey number for pairs; identity wr_c(a) = a^c\n";
  std::ostringstream line, result;
  bool agree = true;
  if (args.d == 2) {
    Int formula = wr::compute_wr(args.c, args.a);
    line << "formula=" << formula;
    result << "RESULT formula=" << formula;
    if (args.brute) {
      Int brute = wr::brute_wr(args.c, args.a, 2, args.budget);
      agree = brute == formula;
      line << " brute=" << brute << (agree ? " AGREE" : " DISAGREE");
      result << " brute=" << brute << " agree=" << (agree ? 1 : 0);
    }
  } else {
    if (!args.brute)
      throw wr::PreconditionError("no closed formula for d != 2; pass --brute");
    Int brute = wr::brute_wr(args.c, args.a, args.d, args.budget);
    line << "brute=" << brute << " (d=" << args.d << ")";
    result << "RESULT brute=" << brute << " d=" << args.d;
  }
  std::cout << line.str() << "\n" << result.str() << "\n";
  return agree ? 0 : 1;
}

struct DmaxArgs {
  int c = 0;
  Int a = 0;
  std::string fspec = "id";
  Int cap = 100;
  std::string witness_path;
};

int cmd_dmax(const DmaxArgs& args) {
  std::cout << "# dmax: least D such that every bounded c-tuple sequence of "
               "length D+1 has a dominated pair\n";
  wr::FSpec f = wr::parse_fspec(args.fspec);
  wr::BadSequenceSearch s = wr::longest_bad_sequence(args.c, args.a, f, args.cap);
  if (!wr::is_bad_sequence(s.witness) || !wr::is_bounded(s.witness, args.a, f))
    throw wr::PreconditionError("witness failed re-verification");
  if (s.capped)
    std::cout << "D>=" << s.length << " (cap " << args.cap << " reached)\n";
  else
    std::cout << "D=" << s.length << "\n";
  if (!args.witness_path.empty()) {
    wr::write_file(args.witness_path, wr::serialize_sequence(s.witness));
    std::cout << "certificate: bad sequence of length " << s.length
              << ", bounds respected; wrote " << args.witness_path << "\n";
  }
  std::cout << "RESULT D=" << s.length << " capped=" << (s.capped ? 1 : 0) << "\n";
  return 0;
}

struct TransformArgs {
  bool to_seq = false;
  bool to_coloring = false;
  std::string input;
  std::string output;
  std::string fspec = "id";
  Int a = 0;
};

int cmd_transform(const TransformArgs& args) {
  std::cout << "# transform: f-bad pair coloring <-> bounded bad tuple sequence\n";
  if (args.to_seq == args.to_coloring)
    throw wr::PreconditionError("pass exactly one of --to-seq / --to-coloring");
  wr::FSpec f = wr::parse_fspec(args.fspec);
  if (args.to_seq) {
    wr::Coloring C = wr::parse_coloring(wr::read_file(args.input));
    wr::TupleSequence s = wr::coloring_to_sequence(C, f);
    if (!wr::is_bad_sequence(s) || !wr::is_bounded(s, C.lo(), f))
      throw wr::PreconditionError("output sequence failed re-verification");
    std::cout << "certificate: sequence of length " << s.length()
              << " is bad and (a=" << C.lo() << ", f=" << f.to_string()
              << ")-bounded\n";
    wr::write_file(args.output, wr::serialize_sequence(s));
    std::cout << "wrote " << args.output << "\n";
    std::cout << "RESULT n=" << s.length() << " verified=1\n";
  } else {
    wr::TupleSequence s = wr::parse_sequence(wr::read_file(args.input));
    if (!wr::is_bounded(s, args.a, f))
      throw wr::PreconditionError("input sequence is not (a,f)-bounded for f=" +
                                  f.to_string());
    wr::Coloring C = wr::sequence_to_coloring(s, args.a);
    if (!wr::is_f_bad_coloring(C, f))
      throw wr::PreconditionError("output coloring failed f-badness re-verification");
    std::cout << "certificate: coloring on [" << C.lo() << "," << C.hi()
              << "] is f-bad for f=" << f.to_string() << "\n";
    wr::write_file(args.output, wr::serialize_coloring(C));
    std::cout << "wrote " << args.output << "\n";
    std::cout << "RESULT points=" << C.points() << " verified=1\n";
  }
  return 0;
}

struct LiftArgs {
  std::string input;
  std::string output;
  Int m = 0;
  Int verify_nodes = wr::kDefaultNodeBudget;
};

int cmd_lift(const LiftArgs& args) {
  std::cout << "# lift: m-bad coloring raised one dimension, one color band added\n";
  wr::Coloring C = wr::parse_coloring(wr::read_file(args.input));
  wr::Coloring lifted = wr::lift_bad_coloring(C, args.m);
  std::cout << lifted.colors() << "-color dim-" << lifted.dim()
            << " coloring on [" << lifted.lo() << "," << lifted.hi() << "]\n";
  if (!args.output.empty()) {
    wr::write_file(args.output, wr::serialize_coloring(lifted));
    std::cout << "wrote " << args.output << "\n";
  }
  Int cap = std::max<Int>(args.m, lifted.dim());
  bool verified = false;
  bool budget_hit = false;
  try {
    verified = !wr::find_weakly_homogeneous_of_size(lifted, cap + 1,
                                                    args.verify_nodes)
                    .has_value();
  } catch (const wr::BudgetError&) {
    budget_hit = true;
  }
  if (budget_hit) {
    std::cout << "unverified (budget)\n";
    std::cout << "RESULT colors=" << lifted.colors() << " lo=" << lifted.lo()
              << " hi=" << lifted.hi() << " verified=0\n";
    throw wr::BudgetError("badness verification exceeded the node budget");
  }
  if (!verified)
    throw wr::PreconditionError(
        "lifted coloring admits a weakly homogeneous set of size " +
        std::to_string(cap + 1));
  std::cout << "verified m-bad (no weakly homogeneous subset of size > " << cap
            << ")\n";
  std::cout << "RESULT colors=" << lifted.colors() << " lo=" << lifted.lo()
            << " hi=" << lifted.hi() << " verified=1\n";
  return 0;
}

struct ExtractArgs {
  std::string input;
  Int target = 0;  // 0: extract only; >0: recursive weak-homogeneous search
};

int cmd_extract(const ExtractArgs& args) {
  wr::Coloring C = wr::parse_coloring(wr::read_file(args.input));
  if (args.target > 0) {
    std::cout << "# extract: recursive weakly homogeneous search via "
                 "dimension reduction\n";
    wr::RecursiveSearch r = wr::find_weakly_homogeneous_recursive(C, args.target);
    if (!r.witness) {
      std::cout << "absent: " << r.report << "\n";
      std::cout << "RESULT found=0\n";
      throw wr::PreconditionError(r.report);
    }
    const auto& H = r.witness->as_set();
    std::cout << "set: " << set_line(H) << "\n";
    std::cout << "certificate: " << r.witness->checked_property << "\n";
    std::cout << "RESULT found=1 size=" << H.size() << " verified=1\n";
    return 0;
  }
  std::cout << "# extract: min-homogeneous set via left-greedy branch tree\n";
  wr::Witness w = wr::extract_min_d_homogeneous(C);
  const auto& X = w.as_set();
  std::cout << "set: " << set_line(X) << "\n";
  std::cout << "certificate: " << w.checked_property << "\n";
  std::cout << "RESULT size=" << X.size() << " verified=1\n";
  return 0;
}

struct BoundsArgs {
  int d = 2;
  int c = 1;
  Int m = 2;
  Int max_bits = wr::Budget{}.max_bits;
};

int cmd_bounds(const BoundsArgs& args) {
  std::cout << "# bounds: dimension-" << args.d
            << " weak Ramsey sandwich, towers of height d-2\n";
  wr::Budget budget;
  budget.max_bits = args.max_bits;
  wr::BigCount ub = wr::ub_bound(args.d, args.c, args.m, budget);
  wr::LowerBound lb = wr::lb_bound(args.d, args.c, args.m, budget);
  std::cout << "ub=" << ub << " lb=" << lb.bound << " (colors " << lb.colors
            << ")\n";
  std::cout << "RESULT ub=" << ub << " lb=" << lb.bound
            << " colors=" << lb.colors << "\n";
  return 0;
}

struct FghArgs {
  int n = 0;
  Int x = 0;
  Int max_steps = wr::Budget{}.max_steps;
};

int cmd_fgh(const FghArgs& args) {
  std::cout << "# fgh: fast-growing hierarchy at a finite index\n";
  wr::Budget budget;
  budget.max_steps = args.max_steps;
  wr::BigCount v = wr::fgh(args.n, args.x, budget);
  std::cout << "F_" << args.n << "(" << args.x << ")=" << v << "\n";
  std::cout << "RESULT value=" << v << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak Ramsey / bounded bad sequence toolkit"};
  app.require_subcommand(1);

  WrArgs wr_args;
  auto* wr_cmd = app.add_subcommand("wr", "weak Ramsey number wr_c(a)");
  wr_cmd->add_option("--c", wr_args.c, "number of colors")->required();
  wr_cmd->add_option("--a", wr_args.a, "target size minus one")->required();
  wr_cmd->add_option("--d", wr_args.d, "dimension for --brute (default 2)");
  wr_cmd->add_flag("--brute", wr_args.brute, "also run the exhaustive oracle");
  wr_cmd->add_option("--budget", wr_args.budget, "max colorings enumerated");

  DmaxArgs dmax_args;
  auto* dmax_cmd = app.add_subcommand("dmax", "longest bounded bad sequence");
  dmax_cmd->add_option("--c", dmax_args.c, "tuple arity")->required();
  dmax_cmd->add_option("--a", dmax_args.a, "bound offset")->required();
  dmax_cmd->add_option("--f", dmax_args.fspec, "f-spec")->required();
  dmax_cmd->add_option("--cap", dmax_args.cap, "search depth cap");
  dmax_cmd->add_option("--witness", dmax_args.witness_path, "write witness file");

  TransformArgs tr_args;
  auto* tr_cmd = app.add_subcommand("transform", "coloring <-> sequence");
  tr_cmd->add_flag("--to-seq", tr_args.to_seq, "coloring file -> sequence file");
  tr_cmd->add_flag("--to-coloring", tr_args.to_coloring,
                   "sequence file -> coloring file");
  tr_cmd->add_option("--input", tr_args.input, "input file")->required();
  tr_cmd->add_option("--output", tr_args.output, "output file")->required();
  tr_cmd->add_option("--f", tr_args.fspec, "f-spec")->required();
  tr_cmd->add_option("--a", tr_args.a, "domain offset (to-coloring)");

  LiftArgs lift_args;
  auto* lift_cmd = app.add_subcommand("lift", "raise a bad coloring one dimension");
  lift_cmd->add_option("--input", lift_args.input, "source coloring file")->required();
  lift_cmd->add_option("--m", lift_args.m, "badness level m")->required();
  lift_cmd->add_option("--output", lift_args.output, "write lifted coloring");
  lift_cmd->add_option("--verify-budget", lift_args.verify_nodes,
                       "search nodes allowed for verification");

  ExtractArgs ex_args;
  auto* ex_cmd = app.add_subcommand("extract", "min-homogeneous extraction");
  ex_cmd->add_option("--input", ex_args.input, "coloring file")->required();
  ex_cmd->add_option("--target", ex_args.target,
                     "recursive weakly homogeneous search for this size");

  BoundsArgs b_args;
  auto* b_cmd = app.add_subcommand("bounds", "upper/lower bound evaluators");
  b_cmd->add_option("--d", b_args.d, "dimension")->required();
  b_cmd->add_option("--c", b_args.c, "colors")->required();
  b_cmd->add_option("--m", b_args.m, "target size")->required();
  b_cmd->add_option("--max-bits", b_args.max_bits, "result size budget in bits");

  FghArgs f_args;
  auto* f_cmd = app.add_subcommand("fgh", "fast-growing hierarchy value");
  f_cmd->add_option("--n", f_args.n, "hierarchy index")->required();
  f_cmd->add_option("--x", f_args.x, "argument")->required();
  f_cmd->add_option("--max-steps", f_args.max_steps, "successor step budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*wr_cmd) return cmd_wr(wr_args);
    if (*dmax_cmd) return cmd_dmax(dmax_args);
    if (*tr_cmd) return cmd_transform(tr_args);
    if (*lift_cmd) return cmd_lift(lift_args);
    if (*ex_cmd) return cmd_extract(ex_args);
    if (*b_cmd) return cmd_bounds(b_args);
    if (*f_cmd) return cmd_fgh(f_args);
  } catch (const wr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const wr::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const wr::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
