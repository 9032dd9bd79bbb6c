#pragma once

// Closed-form bound evaluators over exact arbitrary-precision integers:
// iterated base-2 towers, the dimension-d upper/lower bounds for weak Ramsey
// numbers, finite levels of the fast-growing hierarchy, iterated logs and
// root thresholds. Everything is budget-guarded; budget errors report the
// would-be size instead of hanging.

#include <boost/multiprecision/cpp_int.hpp>

#include "wr/core.hpp"

namespace wr {

using BigCount = boost::multiprecision::cpp_int;

struct Budget {
  Int max_bits = 1'000'000;       // cap on result bit length
  Int max_steps = 50'000'000;     // cap on successor applications in fgh
};

// height-fold iterated power of 2 applied to x; tower(0,x) = x.
BigCount tower(int height, const BigCount& x, const Budget& budget = {});

// tower(d-2, m^(k*c)) with k = (d+1)!.
BigCount ub_bound(int d, int c, Int m, const Budget& budget = {});

struct LowerBound {
  Int colors = 0;     // k*c with k = 5^(d-2)
  BigCount bound;     // tower(d-2, m^c)
};

// The pair (k*c, tower(d-2, m^c)) with k = 5^(d-2): a weak Ramsey number in
// dimension d with k*c colors is at least the bound.
LowerBound lb_bound(int d, int c, Int m, const Budget& budget = {});

// Fast-growing hierarchy at finite index: F_0(x) = x+1 and F_{n+1}(x) is the
// (x+1)-fold iterate of F_n applied to x. Evaluated by direct iteration.
BigCount fgh(int n, Int x, const Budget& budget = {});

// k-fold iterated floor base-2 logarithm; log_iter(0,x) = x.
BigCount log_iter(int k, const BigCount& x);

// Largest r with r^n <= x.
BigCount nth_root_floor(const BigCount& x, int n);

// floor of the n-th root of log_iter(d-2, x); n = 0 yields the iterated log
// itself.
BigCount threshold_f(int d, int n, const BigCount& x);

}  // namespace wr
