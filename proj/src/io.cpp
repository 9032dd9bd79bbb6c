#include "wr/io.hpp"

#include <fstream>
#include <sstream>

#include "wr/lift.hpp"

namespace wr {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<Int> parse_ints(const std::string& line, const std::string& where) {
  std::vector<Int> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      Int v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(where + ": not an integer: '" + tok + "'");
    }
  }
  return out;
}

// "key=value" tokens after a fixed header word.
Int header_field(const std::string& line, const std::string& key) {
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    if (tok.substr(0, eq) != key) continue;
    try {
      return std::stoll(tok.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("header field " + key + " is not an integer");
    }
  }
  throw ParseError("header missing field " + key);
}

void serialize_table_into(const Coloring& C, std::ostringstream& out) {
  out << "coloring d=" << C.dim() << " c=" << C.colors() << " a=" << C.lo()
      << " R=" << C.hi() << "\n";
  for_each_combination(C.lo(), C.hi(), C.dim(), [&](std::span<const Int> cell) {
    for (Int x : cell) out << x << ' ';
    out << C.color_of(cell) << "\n";
  });
}

Coloring parse_table_coloring(const std::vector<std::string>& lines,
                              std::size_t start) {
  if (start >= lines.size()) throw ParseError("missing coloring header");
  const std::string& header = lines[start];
  if (header.rfind("coloring ", 0) != 0)
    throw ParseError("expected 'coloring' header, got: " + header);
  int d = static_cast<int>(header_field(header, "d"));
  int c = static_cast<int>(header_field(header, "c"));
  Int a = header_field(header, "a");
  Int R = header_field(header, "R");
  if (d < 1 || c < 0 || a > R) throw ParseError("bad coloring header ranges");

  Int expected = binomial(R - a + 1, d);
  std::vector<int> cells(static_cast<std::size_t>(expected), -1);
  std::size_t line_no = start + 1;
  Int seen = 0;

  std::vector<std::vector<Int>> order;
  for_each_combination(a, R, d, [&](std::span<const Int> cell) {
    order.emplace_back(cell.begin(), cell.end());
  });

  for (; line_no < lines.size(); ++line_no) {
    if (lines[line_no].empty()) continue;
    std::vector<Int> vals =
        parse_ints(lines[line_no], "line " + std::to_string(line_no + 1));
    if (static_cast<int>(vals.size()) != d + 1)
      throw ParseError("line " + std::to_string(line_no + 1) + ": expected " +
                       std::to_string(d + 1) + " integers");
    std::vector<Int> cell(vals.begin(), vals.end() - 1);
    if (seen >= expected)
      throw ParseError("too many cells: expected " + std::to_string(expected));
    if (cell != order[static_cast<std::size_t>(seen)])
      throw ParseError("line " + std::to_string(line_no + 1) +
                       ": cell out of order or duplicated");
    Int color = vals.back();
    if (color < 0 || color >= c)
      throw ParseError("line " + std::to_string(line_no + 1) +
                       ": color out of range");
    cells[static_cast<std::size_t>(seen)] = static_cast<int>(color);
    ++seen;
  }
  if (seen != expected)
    throw ParseError("missing cells: got " + std::to_string(seen) +
                     ", expected " + std::to_string(expected));
  try {
    return Coloring::table(d, c, a, R, std::move(cells));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string serialize_coloring(const Coloring& C) {
  std::ostringstream out;
  if (C.table_backed()) {
    serialize_table_into(C, out);
    return out.str();
  }
  if (C.lift_m() < 0 || C.lift_source() == nullptr)
    throw PreconditionError("rule coloring without lift provenance cannot be serialized");
  out << "coloring-rule lift m=" << C.lift_m() << " d=" << C.dim()
      << " c=" << C.colors() << " a=" << C.lo() << " R=" << C.hi() << "\n";
  out << serialize_coloring(*C.lift_source());
  return out.str();
}

Coloring parse_coloring(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty coloring file");
  if (lines[0].rfind("coloring-rule lift ", 0) == 0) {
    Int m = header_field(lines[0], "m");
    int d = static_cast<int>(header_field(lines[0], "d"));
    int c = static_cast<int>(header_field(lines[0], "c"));
    Int a = header_field(lines[0], "a");
    Int R = header_field(lines[0], "R");
    Coloring source = parse_table_coloring(lines, 1);
    Coloring lifted = lift_bad_coloring(source, m);
    if (lifted.dim() != d || lifted.colors() != c || lifted.lo() != a ||
        lifted.hi() != R)
      throw ParseError("coloring-rule header disagrees with reconstruction");
    return lifted;
  }
  return parse_table_coloring(lines, 0);
}

std::string serialize_sequence(const TupleSequence& s) {
  std::ostringstream out;
  out << "sequence c=" << s.arity << " n=" << s.items.size() << "\n";
  for (const Tuple& t : s.items) {
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) out << ' ';
      out << t[k];
    }
    out << "\n";
  }
  return out.str();
}

TupleSequence parse_sequence(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty sequence file");
  if (lines[0].rfind("sequence ", 0) != 0)
    throw ParseError("expected 'sequence' header, got: " + lines[0]);
  int c = static_cast<int>(header_field(lines[0], "c"));
  Int n = header_field(lines[0], "n");
  if (c < 0 || n < 0) throw ParseError("bad sequence header ranges");
  TupleSequence s;
  s.arity = c;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (static_cast<Int>(s.items.size()) == n && lines[i].empty()) continue;
    std::vector<Int> vals = parse_ints(lines[i], "line " + std::to_string(i + 1));
    if (static_cast<int>(vals.size()) != c)
      throw ParseError("line " + std::to_string(i + 1) + ": expected " +
                       std::to_string(c) + " integers, got " +
                       std::to_string(vals.size()));
    s.items.push_back(std::move(vals));
  }
  if (s.length() != n)
    throw ParseError("sequence header says n=" + std::to_string(n) + " but " +
                     std::to_string(s.items.size()) + " items found");
  try {
    validate_sequence(s);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return s;
}

FSpec parse_fspec(const std::string& spec) {
  try {
    if (spec == "id") return FSpec::identity();
    if (spec.rfind("const:", 0) == 0)
      return FSpec::constant(std::stoll(spec.substr(6)));
    if (spec.rfind("affine:", 0) == 0) {
      std::string rest = spec.substr(7);
      auto comma = rest.find(',');
      if (comma == std::string::npos)
        throw ParseError("affine f-spec needs p,q");
      return FSpec::affine(std::stoll(rest.substr(0, comma)),
                           std::stoll(rest.substr(comma + 1)));
    }
    if (spec.rfind("table:", 0) == 0) {
      std::string path = spec.substr(6);
      std::vector<std::string> lines = split_lines(read_file(path));
      std::vector<Int> values;
      Int fallback = -1;
      bool have_fallback = false;
      for (const std::string& line : lines) {
        if (line.empty()) continue;
        if (line.rfind("default ", 0) == 0) {
          fallback = std::stoll(line.substr(8));
          have_fallback = true;
          continue;
        }
        if (have_fallback)
          throw ParseError("table f-spec: values after the default line");
        values.push_back(std::stoll(line));
      }
      if (!have_fallback)
        throw ParseError("table f-spec needs a final 'default <k>' line");
      return FSpec::table(std::move(values), fallback, path);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("bad f-spec '" + spec + "': " + e.what());
  }
  throw ParseError("unknown f-spec '" + spec +
                   "' (expected const:<k> | id | affine:<p>,<q> | table:<path>)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << content;
}

}  // namespace wr
