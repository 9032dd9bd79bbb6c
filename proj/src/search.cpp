#include "wr/search.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace wr {

namespace {

std::string set_to_string(const std::vector<Int>& H) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (i) out << ',';
    out << H[i];
  }
  out << '}';
  return out.str();
}

// Depth-first search for a weakly homogeneous set of size >= target whose
// minimum is fixed by the first chosen element. Extending H by y only has to
// compare the window ending at y against the one before it.
struct WeakHomSearch {
  const Coloring& C;
  Int target = 0;
  Int nodes = 0;
  Int max_nodes = 0;
  std::vector<Int> cur;

  bool extend_ok(Int y) {
    const int d = C.dim();
    const Int k = static_cast<Int>(cur.size());
    if (k < d) return true;
    cur.push_back(y);
    std::span<const Int> h(cur);
    bool ok = C.color_of(h.subspan(static_cast<std::size_t>(k - d), static_cast<std::size_t>(d))) ==
              C.color_of(h.subspan(static_cast<std::size_t>(k - d + 1), static_cast<std::size_t>(d)));
    cur.pop_back();
    return ok;
  }

  bool dfs() {
    if (static_cast<Int>(cur.size()) >= target) return true;
    if (++nodes > max_nodes)
      throw BudgetError("weak-homogeneity search exceeded " +
                        std::to_string(max_nodes) + " nodes");
    for (Int y = cur.back() + 1; y <= C.hi(); ++y) {
      if (static_cast<Int>(cur.size()) + 1 + (C.hi() - y) < target) break;
      if (!extend_ok(y)) continue;
      cur.push_back(y);
      if (dfs()) return true;
      cur.pop_back();
    }
    return false;
  }

  std::optional<std::vector<Int>> run_from(Int x0) {
    cur.assign(1, x0);
    if (dfs()) return cur;
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<Int>> find_weakly_homogeneous_of_size(
    const Coloring& C, Int target, Int max_nodes) {
  if (C.dim() < 1) throw PreconditionError("search needs dim >= 1");
  if (target <= 0) throw PreconditionError("search needs target >= 1");
  WeakHomSearch s{C, target, 0, max_nodes, {}};
  for (Int x0 = C.lo(); x0 + target - 1 <= C.hi(); ++x0)
    if (auto H = s.run_from(x0)) return H;
  return std::nullopt;
}

std::optional<Witness> find_weakly_homogeneous_exceeding(const Coloring& C,
                                                         const FSpec& f) {
  if (C.dim() < 1) throw PreconditionError("search needs dim >= 1");
  WeakHomSearch s{C, 0, 0, kDefaultNodeBudget, {}};
  for (Int x0 = C.lo(); x0 <= C.hi(); ++x0) {
    s.target = f(x0) + 1;  // need |H| > f(min H)
    if (x0 + s.target - 1 > C.hi()) continue;
    if (auto H = s.run_from(x0)) {
      Witness w;
      w.kind = WitnessKind::WeakHomSet;
      w.payload = *H;
      w.checked_property = "weakly homogeneous set " + set_to_string(*H) +
                           " of size " + std::to_string(H->size()) + " > f(" +
                           std::to_string(x0) + ")=" + std::to_string(f(x0));
      return w;
    }
  }
  return std::nullopt;
}

bool is_f_bad_coloring(const Coloring& C, const FSpec& f) {
  return !find_weakly_homogeneous_exceeding(C, f).has_value();
}

namespace {

// All tuples of {0..bound-1}^c in decreasing lexicographic order.
std::vector<Tuple> tuples_below(int c, Int bound) {
  std::vector<Tuple> out;
  if (c == 0) {
    if (bound >= 1) out.push_back(Tuple{});
    return out;
  }
  if (bound <= 0) return out;
  Tuple cur(static_cast<std::size_t>(c), bound - 1);
  while (true) {
    out.push_back(cur);
    int i = c - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == 0) --i;
    if (i < 0) break;
    --cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < c; ++j) cur[static_cast<std::size_t>(j)] = bound - 1;
  }
  return out;
}

bool sequence_lex_less(const std::vector<Tuple>& a, const std::vector<Tuple>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct BadSeqSearch {
  int c;
  Int a;
  const FSpec& f;
  Int cap;

  std::vector<Tuple> cur;
  std::vector<Tuple> best;
  bool capped = false;

  void dfs() {
    if (cur.size() > best.size() ||
        (cur.size() == best.size() && sequence_lex_less(cur, best)))
      best = cur;
    if (static_cast<Int>(cur.size()) >= cap) {
      capped = true;
      return;
    }
    const Int depth = static_cast<Int>(cur.size());
    for (const Tuple& t : tuples_below(c, f(a + depth))) {
      bool blocked = false;
      for (const Tuple& p : cur)
        if (dominates(p, t)) {  // t would dominate an earlier item
          blocked = true;
          break;
        }
      if (blocked) continue;
      cur.push_back(t);
      dfs();
      cur.pop_back();
      if (capped) return;
    }
  }
};

}  // namespace

BadSequenceSearch longest_bad_sequence(int c, Int a, const FSpec& f, Int cap) {
  if (c < 0) throw PreconditionError("negative arity");
  if (a < 0) throw PreconditionError("negative a");
  if (cap < 0) throw PreconditionError("negative cap");
  BadSeqSearch s{c, a, f, cap, {}, {}, false};
  s.dfs();
  BadSequenceSearch out;
  out.length = static_cast<Int>(s.best.size());
  out.capped = s.capped;
  out.witness.arity = c;
  out.witness.items = std::move(s.best);
  return out;
}

DValue compute_D(int c, Int a, const FSpec& f, Int cap) {
  BadSequenceSearch s = longest_bad_sequence(c, a, f, cap);
  return DValue{s.length, s.capped};
}

RValue compute_R(int c, Int a, const FSpec& f, RMethod method, Int cap,
                 Int max_colorings) {
  if (method == RMethod::ViaD) {
    DValue d = compute_D(c, a, f, cap);
    return RValue{d.value + a, d.capped};
  }
  for (Int R = a;; ++R) {
    ColoringEnumerator en(2, c, a, R, max_colorings);
    bool some_bad = false;
    for (Int i = 0; i < en.count() && !some_bad; ++i)
      some_bad = is_f_bad_coloring(en.at(i), f);
    if (!some_bad) return RValue{R, false};
  }
}

Int compute_wr(int c, Int a) {
  if (a == 0 && c == 0)
    throw PreconditionError("wr_c(a) excluded case: a=0 and c=0");
  if (c < 0 || a < 0) throw PreconditionError("wr_c(a) needs c,a >= 0");
  Int v = 1;
  for (int i = 0; i < c; ++i) {
    if (a != 0 && v > std::numeric_limits<Int>::max() / std::max<Int>(a, 1))
      throw BudgetError("a^c exceeds 63-bit range");
    v *= a;
  }
  return v;
}

Int brute_wr(int c, Int a, int d, Int max_colorings) {
  if (d < 1) throw PreconditionError("brute_wr needs d >= 1");
  if (c < 0 || a < 0) throw PreconditionError("brute_wr needs c,a >= 0");
  for (Int R = 0;; ++R) {
    ColoringEnumerator en(d, c, 0, R, max_colorings);
    bool all_admit = true;
    for (Int i = 0; i < en.count() && all_admit; ++i)
      all_admit = find_weakly_homogeneous_of_size(en.at(i), a + 1).has_value();
    if (all_admit) return R;
  }
}

TupleSequence lex_decreasing_bad_sequence(int c, Int a) {
  if (c < 0 || a < 0) throw PreconditionError("needs c,a >= 0");
  TupleSequence s;
  s.arity = c;
  s.items = tuples_below(c, a);
  return s;
}

ColoringEnumerator::ColoringEnumerator(int dim, int colors, Int lo, Int hi,
                                       Int max_colorings)
    : dim_(dim), colors_(colors), lo_(lo), hi_(hi) {
  if (dim < 1) throw PreconditionError("enumerator needs dim >= 1");
  if (colors < 0) throw PreconditionError("enumerator needs colors >= 0");
  if (lo > hi) throw PreconditionError("enumerator needs lo <= hi");
  cells_ = binomial(hi - lo + 1, dim);
  if (colors_ == 0) {
    // No assignments exist unless the domain is empty.
    count_ = cells_ == 0 ? 1 : 0;
    return;
  }
  unsigned __int128 n = 1;
  for (Int i = 0; i < cells_; ++i) {
    n *= static_cast<unsigned __int128>(colors_);
    if (n > static_cast<unsigned __int128>(max_colorings)) {
      std::ostringstream msg;
      msg << "coloring enumeration budget exceeded: " << colors_ << "^" << cells_
          << " colorings on [" << lo_ << "," << hi_ << "]^" << dim_
          << " > budget " << max_colorings;
      throw BudgetError(msg.str());
    }
  }
  count_ = static_cast<Int>(n);
}

Coloring ColoringEnumerator::at(Int index) const {
  if (index < 0 || index >= count_)
    throw PreconditionError("coloring index out of range");
  std::vector<int> cells(static_cast<std::size_t>(cells_));
  Int n = index;
  for (Int i = 0; i < cells_; ++i) {
    cells[static_cast<std::size_t>(i)] = static_cast<int>(n % colors_);
    n /= colors_;
  }
  return Coloring::table(dim_, colors_, lo_, hi_, std::move(cells));
}

}  // namespace wr
