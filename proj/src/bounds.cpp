#include "wr/bounds.hpp"

#include <limits>
#include <sstream>

namespace wr {

namespace {

Int bit_length(const BigCount& x) {
  return x.is_zero() ? 0 : static_cast<Int>(boost::multiprecision::msb(x)) + 1;
}

[[noreturn]] void budget_exceeded(const std::string& what, const BigCount& bits,
                                  Int max_bits) {
  std::ostringstream msg;
  msg << what << " would need ~" << bits << " bits (budget " << max_bits << ")";
  throw BudgetError(msg.str());
}

// m^e with a bit-length estimate checked before multiplying anything.
BigCount checked_pow(const BigCount& m, const BigCount& e, const Budget& budget) {
  if (e.is_zero()) return 1;
  if (m.is_zero()) return 0;
  if (m == 1) return 1;
  BigCount est = e * bit_length(m);
  if (est > budget.max_bits) budget_exceeded("power", est, budget.max_bits);
  BigCount acc = 1, base = m, exp = e;
  while (!exp.is_zero()) {
    if (boost::multiprecision::bit_test(exp, 0)) acc *= base;
    exp >>= 1;
    if (!exp.is_zero()) base *= base;
  }
  return acc;
}

}  // namespace

BigCount tower(int height, const BigCount& x, const Budget& budget) {
  if (height < 0) throw PreconditionError("tower height must be >= 0");
  if (x < 0) throw PreconditionError("tower argument must be >= 0");
  BigCount v = x;
  for (int i = 0; i < height; ++i) {
    if (v > budget.max_bits) budget_exceeded("tower level", v + 1, budget.max_bits);
    BigCount next = BigCount(1) << v.convert_to<unsigned long>();
    v = std::move(next);
  }
  return v;
}

BigCount ub_bound(int d, int c, Int m, const Budget& budget) {
  if (d < 2) throw PreconditionError("upper bound needs d >= 2");
  if (c < 0 || m < 0) throw PreconditionError("upper bound needs c,m >= 0");
  BigCount k = 1;
  for (int i = 2; i <= d + 1; ++i) k *= i;  // (d+1)!
  return tower(d - 2, checked_pow(m, k * c, budget), budget);
}

LowerBound lb_bound(int d, int c, Int m, const Budget& budget) {
  if (d < 2) throw PreconditionError("lower bound needs d >= 2");
  if (c < 1) throw PreconditionError("lower bound needs c >= 1");
  if (m < d) throw PreconditionError("lower bound needs m >= d");
  BigCount k = checked_pow(5, d - 2, budget);
  if (k * c > std::numeric_limits<Int>::max())
    throw BudgetError("color count 5^(d-2)*c exceeds 63-bit range");
  LowerBound out;
  out.colors = static_cast<Int>(k * c);
  out.bound = tower(d - 2, checked_pow(m, c, budget), budget);
  return out;
}

BigCount fgh(int n, Int x, const Budget& budget) {
  if (n < 0 || x < 0) throw PreconditionError("fgh needs n,x >= 0");
  Int steps = 0;
  // F_0 is the successor; each higher level iterates the one below it
  // input-plus-one many times.
  std::function<BigCount(int, BigCount)> level = [&](int lvl,
                                                     BigCount v) -> BigCount {
    if (lvl == 0) {
      if (++steps > budget.max_steps)
        throw BudgetError("fgh exceeded " + std::to_string(budget.max_steps) +
                          " successor steps");
      return v + 1;
    }
    BigCount times = v + 1;
    for (BigCount i = 0; i < times; ++i) v = level(lvl - 1, std::move(v));
    return v;
  };
  return level(n, BigCount(x));
}

BigCount log_iter(int k, const BigCount& x) {
  if (k < 0) throw PreconditionError("log iterations must be >= 0");
  if (x < 0) throw PreconditionError("log argument must be >= 0");
  BigCount v = x;
  for (int i = 0; i < k; ++i) {
    if (v < 1)
      throw PreconditionError("iterated log hit a nonpositive value at step " +
                              std::to_string(i + 1));
    v = bit_length(v) - 1;  // floor(log2(v))
  }
  return v;
}

BigCount nth_root_floor(const BigCount& x, int n) {
  if (n < 1) throw PreconditionError("root index must be >= 1");
  if (x < 0) throw PreconditionError("root argument must be >= 0");
  if (x.is_zero() || n == 1) return x;
  BigCount lo = 0, hi = BigCount(1) << static_cast<unsigned>(bit_length(x) / n + 1);
  while (lo < hi) {  // invariant: lo^n <= x < (hi+1)^n is approached from above
    BigCount mid = (lo + hi + 1) >> 1;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(n)) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

BigCount threshold_f(int d, int n, const BigCount& x) {
  if (d < 2) throw PreconditionError("threshold needs d >= 2");
  if (n < 0) throw PreconditionError("threshold root index must be >= 0");
  BigCount v = log_iter(d - 2, x);
  if (n == 0) return v;
  return nth_root_floor(v, n);
}

}  // namespace wr
