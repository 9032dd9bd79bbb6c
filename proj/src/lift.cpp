#include "wr/lift.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "wr/search.hpp"

namespace wr {

int highest_differing_bit(Int x, Int y) {
  if (x < 0 || x >= y)
    throw PreconditionError("highest_differing_bit needs 0 <= x < y");
  Int diff = x ^ y;
  int pos = -1;
  while (diff) {
    ++pos;
    diff >>= 1;
  }
  return pos;
}

namespace {

void check_increasing_points(std::span<const Int> points) {
  if (points.size() < 2)
    throw PreconditionError("need at least two points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 0) throw PreconditionError("points must be >= 0");
    if (i > 0 && points[i - 1] >= points[i])
      throw PreconditionError("points not strictly increasing");
  }
}

std::vector<int> alpha_chain(std::span<const Int> points) {
  std::vector<int> chain;
  chain.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    chain.push_back(highest_differing_bit(points[i], points[i + 1]));
  return chain;
}

}  // namespace

RunParities run_parities(std::span<const Int> points) {
  check_increasing_points(points);
  std::vector<int> chain = alpha_chain(points);
  RunParities p;
  int inc = 0;
  while (inc + 1 < static_cast<int>(chain.size()) &&
         chain[static_cast<std::size_t>(inc)] < chain[static_cast<std::size_t>(inc) + 1])
    ++inc;
  int dec = 0;
  while (dec + 1 < static_cast<int>(chain.size()) &&
         chain[static_cast<std::size_t>(dec)] > chain[static_cast<std::size_t>(dec) + 1])
    ++dec;
  p.increasing = inc & 1;
  p.decreasing = dec & 1;
  return p;
}

int chain_color(const Coloring& C, std::span<const Int> points) {
  check_increasing_points(points);
  if (static_cast<int>(points.size()) != C.dim() + 1)
    throw PreconditionError("chain color needs dim+1 points");
  std::vector<int> chain = alpha_chain(points);
  bool asc = true, desc = true;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i] >= chain[i + 1]) asc = false;
    if (chain[i] <= chain[i + 1]) desc = false;
  }
  if (!asc && !desc) return 0;
  std::vector<Int> cell(chain.begin(), chain.end());
  if (desc && !asc) std::reverse(cell.begin(), cell.end());
  return C.color_of(cell);
}

int combined_color(const Coloring& C, std::span<const Int> points) {
  int cc = chain_color(C, points);
  RunParities p = run_parities(points);
  return 4 * cc + 2 * p.increasing + p.decreasing;
}

Coloring lift_bad_coloring(const Coloring& C, Int m) {
  if (C.lo() != 0)
    throw PreconditionError("lift source must live on [0,R-1]");
  const Int R = C.points();
  if (m < C.dim())
    throw PreconditionError("lift needs m >= dim");
  if (R > 62 || (Int{1} << R) > kMaxLiftDomain)
    throw BudgetError("lift domain 2^" + std::to_string(R) + " exceeds budget " +
                      std::to_string(kMaxLiftDomain));
  if (!is_f_bad_coloring(C, FSpec::constant(m)))
    throw PreconditionError("lift source is not m-bad for m=" + std::to_string(m));

  auto src = std::make_shared<const Coloring>(C);
  struct Memo {
    std::mutex mu;
    std::map<std::vector<Int>, int> cache;
  };
  auto memo = std::make_shared<Memo>();
  const int out_dim = C.dim() + 1;
  const int out_colors = 4 * C.colors() + 1;
  const Int hi = (Int{1} << R) - 1;

  Coloring::Rule rule = [src, memo, out_dim](std::span<const Int> pts) -> int {
    std::vector<Int> key(pts.begin(), pts.end());
    {
      std::lock_guard<std::mutex> lock(memo->mu);
      auto it = memo->cache.find(key);
      if (it != memo->cache.end()) return it->second;
    }
    int base = combined_color(*src, pts);
    // Predecessor test: some y < x_0 making {y, x_0, ..., x_d} weakly
    // homogeneous for the combined coloring. With d+2 elements that is one
    // window equality.
    int value = 0;
    std::vector<Int> head(static_cast<std::size_t>(out_dim));
    std::copy(pts.begin(), pts.end() - 1, head.begin() + 1);
    for (Int y = 0; y < pts[0]; ++y) {
      head[0] = y;
      if (combined_color(*src, head) == base) {
        value = base + 1;
        break;
      }
    }
    std::lock_guard<std::mutex> lock(memo->mu);
    memo->cache.emplace(std::move(key), value);
    return value;
  };

  Coloring out = Coloring::rule(out_dim, out_colors, 0, hi, std::move(rule));
  out.set_lift_provenance(src, m);
  return out;
}

bool is_min_d_homogeneous(const Coloring& C, const std::vector<Int>& X) {
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i] < C.lo() || X[i] > C.hi())
      throw PreconditionError("set element outside coloring domain");
    if (i > 0 && X[i - 1] >= X[i])
      throw PreconditionError("set not strictly increasing");
  }
  const int d = C.dim();
  const Int n = static_cast<Int>(X.size());
  if (n <= d) return true;
  bool ok = true;
  for_each_combination(0, n - 1, d - 1, [&](std::span<const Int> prefix) {
    if (!ok) return;
    std::vector<Int> cell(static_cast<std::size_t>(d));
    for (int i = 0; i < d - 1; ++i)
      cell[static_cast<std::size_t>(i)] = X[static_cast<std::size_t>(prefix[static_cast<std::size_t>(i)])];
    Int start = (d >= 2) ? prefix.back() + 1 : 0;
    int first = -1;
    for (Int yi = start; yi < n && ok; ++yi) {
      cell[static_cast<std::size_t>(d - 1)] = X[static_cast<std::size_t>(yi)];
      int c = C.color_of(cell);
      if (first < 0)
        first = c;
      else if (c != first)
        ok = false;
    }
  });
  return ok;
}

namespace {

bool node_before(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();  // longer first
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

const std::vector<Int>& ERTree::deepest_leftmost() const {
  const std::vector<Int>* best = &nodes.front();
  for (const auto& node : nodes)
    if (node_before(node, *best)) best = &node;
  return *best;
}

ERTree build_er_tree(const Coloring& C) {
  ERTree t;
  t.nodes.push_back({});
  for (Int e = C.lo(); e <= C.hi(); ++e) {
    // Try candidate parents longest-first, leftmost on ties; the root always
    // qualifies, so exactly one node is added per element.
    std::vector<const std::vector<Int>*> order;
    order.reserve(t.nodes.size());
    for (const auto& node : t.nodes) order.push_back(&node);
    std::sort(order.begin(), order.end(),
              [](const std::vector<Int>* a, const std::vector<Int>* b) {
                return node_before(*a, *b);
              });
    for (const std::vector<Int>* parent : order) {
      std::vector<Int> ext = *parent;
      ext.push_back(e);
      if (is_min_d_homogeneous(C, ext)) {
        t.nodes.push_back(std::move(ext));
        break;
      }
    }
  }
  return t;
}

Witness extract_min_d_homogeneous(const Coloring& C) {
  ERTree t = build_er_tree(C);
  std::vector<Int> X = t.deepest_leftmost();
  if (!X.empty() && X.back() + 1 <= C.hi()) {
    std::vector<Int> ext = X;
    ext.push_back(X.back() + 1);
    if (is_min_d_homogeneous(C, ext)) X = std::move(ext);
  }
  if (!is_min_d_homogeneous(C, X))
    throw PreconditionError("extracted set failed re-verification");
  Witness w;
  w.kind = WitnessKind::MinDHomSet;
  w.payload = X;
  w.checked_property =
      "min-homogeneous set of size " + std::to_string(X.size());
  return w;
}

ReducedColoring reduce_dimension(const Coloring& C, const std::vector<Int>& X) {
  if (static_cast<Int>(X.size()) < C.dim())
    throw PreconditionError("set of size " + std::to_string(X.size()) +
                            " too small to reduce dimension " +
                            std::to_string(C.dim()));
  if (!is_min_d_homogeneous(C, X))
    throw PreconditionError("reduction input is not min-homogeneous");
  const Int apex = X.back();
  std::vector<Int> ground(X.begin(), X.end() - 1);
  const int d = C.dim() - 1;
  const Int n = static_cast<Int>(ground.size());
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(binomial(n, d)));
  for_each_combination(0, n - 1, d, [&](std::span<const Int> idx) {
    std::vector<Int> cell;
    cell.reserve(static_cast<std::size_t>(d) + 1);
    for (Int i : idx) cell.push_back(ground[static_cast<std::size_t>(i)]);
    cell.push_back(apex);
    cells.push_back(C.color_of(cell));
  });
  return ReducedColoring{Coloring::table(d, C.colors(), 0, n - 1, std::move(cells)),
                         std::move(ground), apex};
}

RecursiveSearch find_weakly_homogeneous_recursive(const Coloring& C, Int target) {
  if (C.dim() < 2)
    throw PreconditionError("recursive search needs dim >= 2");
  if (target < 1) throw PreconditionError("target must be >= 1");

  RecursiveSearch out;
  auto succeed = [&](std::vector<Int> H) {
    Witness w;
    w.kind = WitnessKind::WeakHomSet;
    w.checked_property = "weakly homogeneous set of size " +
                         std::to_string(H.size()) + " >= " + std::to_string(target);
    w.payload = std::move(H);
    out.witness = std::move(w);
  };

  if (target <= C.dim()) {
    // Any dim-or-fewer points are vacuously weakly homogeneous.
    if (C.points() >= target) {
      std::vector<Int> H;
      for (Int v = C.lo(); v < C.lo() + target; ++v) H.push_back(v);
      succeed(std::move(H));
    } else {
      out.report = "domain has fewer than " + std::to_string(target) + " points";
    }
    return out;
  }

  if (C.dim() == 2) {
    if (auto H = find_weakly_homogeneous_of_size(C, target)) {
      succeed(std::move(*H));
    } else {
      out.report = "pair search found no weakly homogeneous set of size " +
                   std::to_string(target) + " on [" + std::to_string(C.lo()) +
                   "," + std::to_string(C.hi()) + "]";
    }
    return out;
  }

  Witness xw = extract_min_d_homogeneous(C);
  const std::vector<Int>& X = xw.as_set();
  if (static_cast<Int>(X.size()) < C.dim()) {
    out.report = "extraction at dimension " + std::to_string(C.dim()) +
                 " produced only " + std::to_string(X.size()) + " points";
    return out;
  }
  ReducedColoring red = reduce_dimension(C, X);
  RecursiveSearch sub = find_weakly_homogeneous_recursive(red.coloring, target);
  if (!sub.witness) {
    out.report = "after reducing to dimension " + std::to_string(C.dim() - 1) +
                 " over " + std::to_string(red.ground.size()) + " points: " +
                 sub.report;
    return out;
  }
  std::vector<Int> H;
  for (Int i : sub.witness->as_set())
    H.push_back(red.ground[static_cast<std::size_t>(i)]);
  if (!is_weakly_homogeneous(C, H)) {
    out.report = "transport re-verification failed";
    return out;
  }
  succeed(std::move(H));
  return out;
}

}  // namespace wr
