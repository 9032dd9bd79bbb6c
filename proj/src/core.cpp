#include "wr/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace wr {

namespace {

std::string join_ints(std::span<const Int> xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ' ';
    out << xs[i];
  }
  return out.str();
}

}  // namespace

Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (Int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<Int>::max()))
      throw BudgetError("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                        ") exceeds 63-bit range");
  }
  return static_cast<Int>(acc);
}

bool dominates(const Tuple& s, const Tuple& t) {
  if (s.size() != t.size())
    throw PreconditionError("arity mismatch: " + std::to_string(s.size()) +
                            " vs " + std::to_string(t.size()));
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] > t[k]) return false;
  return true;
}

Int norm(const Tuple& t) {
  Int m = 0;
  for (Int x : t) m = std::max(m, x);
  return m;
}

void validate_sequence(const TupleSequence& s) {
  if (s.arity < 0) throw PreconditionError("negative arity");
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (static_cast<int>(s.items[i].size()) != s.arity)
      throw PreconditionError("item " + std::to_string(i) + " has arity " +
                              std::to_string(s.items[i].size()) + ", expected " +
                              std::to_string(s.arity));
    for (Int x : s.items[i])
      if (x < 0)
        throw PreconditionError("item " + std::to_string(i) +
                                " has a negative coordinate");
  }
}

FSpec FSpec::constant(Int k) {
  if (k < 0) throw PreconditionError("const f-spec needs k >= 0");
  FSpec f;
  f.v_ = Const{k};
  return f;
}

FSpec FSpec::identity() {
  FSpec f;
  f.v_ = Id{};
  return f;
}

FSpec FSpec::affine(Int p, Int q) {
  if (p < 0 || q < 0) throw PreconditionError("affine f-spec needs p,q >= 0");
  FSpec f;
  f.v_ = Affine{p, q};
  return f;
}

FSpec FSpec::table(std::vector<Int> values, Int default_beyond, std::string source) {
  for (Int v : values)
    if (v < 0) throw PreconditionError("table f-spec values must be >= 0");
  if (default_beyond < 0)
    throw PreconditionError("table f-spec default must be >= 0");
  FSpec f;
  f.v_ = Table{std::move(values), default_beyond, std::move(source)};
  return f;
}

Int FSpec::operator()(Int x) const {
  if (x < 0) throw PreconditionError("f evaluated at negative argument");
  return std::visit(
      [x](const auto& s) -> Int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Const>) {
          return s.k;
        } else if constexpr (std::is_same_v<T, Id>) {
          return x;
        } else if constexpr (std::is_same_v<T, Affine>) {
          return s.p * x + s.q;
        } else {
          if (x < static_cast<Int>(s.values.size()))
            return s.values[static_cast<std::size_t>(x)];
          return s.fallback;
        }
      },
      v_);
}

std::string FSpec::to_string() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Const>) {
          return "const:" + std::to_string(s.k);
        } else if constexpr (std::is_same_v<T, Id>) {
          return "id";
        } else if constexpr (std::is_same_v<T, Affine>) {
          return "affine:" + std::to_string(s.p) + "," + std::to_string(s.q);
        } else {
          return "table:" + (s.source.empty() ? std::string("<inline>") : s.source);
        }
      },
      v_);
}

Coloring Coloring::table(int dim, int colors, Int lo, Int hi,
                         std::vector<int> cells) {
  if (dim < 1) throw PreconditionError("coloring needs dim >= 1");
  if (colors < 0) throw PreconditionError("coloring needs colors >= 0");
  if (lo > hi) throw PreconditionError("coloring needs lo <= hi");
  Int expected = binomial(hi - lo + 1, dim);
  if (static_cast<Int>(cells.size()) != expected)
    throw PreconditionError("coloring table has " + std::to_string(cells.size()) +
                            " cells, expected " + std::to_string(expected));
  if (colors == 0 && expected != 0)
    throw PreconditionError("0-color coloring requires an empty domain");
  for (int c : cells)
    if (c < 0 || c >= colors)
      throw PreconditionError("cell color out of range [0," +
                              std::to_string(colors) + ")");
  Coloring C;
  C.dim_ = dim;
  C.colors_ = colors;
  C.lo_ = lo;
  C.hi_ = hi;
  C.cells_ = std::move(cells);
  return C;
}

Coloring Coloring::rule(int dim, int colors, Int lo, Int hi, Rule fn) {
  if (dim < 1) throw PreconditionError("coloring needs dim >= 1");
  if (colors < 1) throw PreconditionError("rule coloring needs colors >= 1");
  if (lo > hi) throw PreconditionError("coloring needs lo <= hi");
  if (!fn) throw PreconditionError("rule coloring needs a rule");
  Coloring C;
  C.dim_ = dim;
  C.colors_ = colors;
  C.lo_ = lo;
  C.hi_ = hi;
  C.rule_ = std::move(fn);
  return C;
}

Int Coloring::cell_count() const { return binomial(points(), dim_); }

const std::vector<int>& Coloring::cells() const {
  if (!table_backed())
    throw PreconditionError("rule coloring has no cell table");
  return cells_;
}

int Coloring::color_of(std::span<const Int> pts) const {
  if (static_cast<int>(pts.size()) != dim_)
    throw PreconditionError("coloring cell needs " + std::to_string(dim_) +
                            " points, got " + std::to_string(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] < lo_ || pts[i] > hi_)
      throw PreconditionError("point " + std::to_string(pts[i]) +
                              " outside [" + std::to_string(lo_) + "," +
                              std::to_string(hi_) + "]");
    if (i > 0 && pts[i - 1] >= pts[i])
      throw PreconditionError("cell points not strictly increasing: " +
                              join_ints(pts));
  }
  if (rule_) {
    int c = rule_(pts);
    if (c < 0 || c >= colors_)
      throw PreconditionError("rule returned color out of range");
    return c;
  }
  // Lexicographic rank of the subset among all increasing dim-subsets.
  Int rank = 0;
  Int prev = lo_ - 1;
  for (int i = 0; i < dim_; ++i) {
    for (Int v = prev + 1; v < pts[static_cast<std::size_t>(i)]; ++v)
      rank += binomial(hi_ - v, dim_ - 1 - i);
    prev = pts[static_cast<std::size_t>(i)];
  }
  return cells_[static_cast<std::size_t>(rank)];
}

int Coloring::color_of(std::initializer_list<Int> pts) const {
  std::vector<Int> v(pts);
  return color_of(std::span<const Int>(v));
}

void Coloring::set_lift_provenance(std::shared_ptr<const Coloring> source, Int m) {
  lift_source_ = std::move(source);
  lift_m_ = m;
}

bool is_bad_sequence(const TupleSequence& s) {
  const auto& it = s.items;
  for (std::size_t i = 0; i < it.size(); ++i)
    for (std::size_t j = i + 1; j < it.size(); ++j)
      if (dominates(it[i], it[j])) return false;
  return true;
}

bool is_bounded(const TupleSequence& s, Int a, const FSpec& f) {
  for (std::size_t i = 0; i < s.items.size(); ++i)
    if (norm(s.items[i]) >= f(a + static_cast<Int>(i))) return false;
  return true;
}

namespace {

void check_subset(const Coloring& C, const std::vector<Int>& H) {
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (H[i] < C.lo() || H[i] > C.hi())
      throw PreconditionError("set element " + std::to_string(H[i]) +
                              " outside [" + std::to_string(C.lo()) + "," +
                              std::to_string(C.hi()) + "]");
    if (i > 0 && H[i - 1] >= H[i])
      throw PreconditionError("set not strictly increasing");
  }
}

}  // namespace

bool is_weakly_homogeneous(const Coloring& C, const std::vector<Int>& H) {
  check_subset(C, H);
  const int d = C.dim();
  if (static_cast<Int>(H.size()) <= d) return true;
  std::span<const Int> h(H);
  int first = C.color_of(h.subspan(0, static_cast<std::size_t>(d)));
  for (std::size_t i = 1; i + static_cast<std::size_t>(d) <= H.size(); ++i)
    if (C.color_of(h.subspan(i, static_cast<std::size_t>(d))) != first) return false;
  return true;
}

bool is_homogeneous(const Coloring& C, const std::vector<Int>& H) {
  check_subset(C, H);
  const int d = C.dim();
  if (static_cast<Int>(H.size()) < d) return true;
  int first = -1;
  bool ok = true;
  for_each_combination(0, static_cast<Int>(H.size()) - 1, d,
                       [&](std::span<const Int> idx) {
                         if (!ok) return;
                         std::vector<Int> pts;
                         pts.reserve(idx.size());
                         for (Int i : idx) pts.push_back(H[static_cast<std::size_t>(i)]);
                         int c = C.color_of(pts);
                         if (first < 0)
                           first = c;
                         else if (c != first)
                           ok = false;
                       });
  return ok;
}

const std::vector<Int>& Witness::as_set() const {
  return std::get<std::vector<Int>>(payload);
}

const TupleSequence& Witness::as_sequence() const {
  return std::get<TupleSequence>(payload);
}

const Coloring& Witness::as_coloring() const {
  return std::get<Coloring>(payload);
}

}  // namespace wr
