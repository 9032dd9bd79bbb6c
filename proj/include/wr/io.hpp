#pragma once

// Text formats (UTF-8, LF, deterministic) for colorings, tuple sequences and
// f-specs, plus file helpers. Serialization is canonical: parsing a
// serialized object and serializing it again reproduces the bytes.

#include <string>

#include "wr/core.hpp"

namespace wr {

// Table colorings:
//   coloring d=<d> c=<c> a=<a> R=<R>
//   <x_0> ... <x_{d-1}> <color>          (one line per cell, lexicographic)
// Rule colorings built by lift_bad_coloring:
//   coloring-rule lift m=<m> d=<d> c=<c> a=<a> R=<R>
//   <source coloring, inline>
std::string serialize_coloring(const Coloring& C);
Coloring parse_coloring(const std::string& text);

// sequence c=<c> n=<n>
// <c space-separated integers per line>
std::string serialize_sequence(const TupleSequence& s);
TupleSequence parse_sequence(const std::string& text);

// const:<k> | id | affine:<p>,<q> | table:<path>
// Table files hold one integer per line with a final "default <k>" line.
FSpec parse_fspec(const std::string& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace wr
