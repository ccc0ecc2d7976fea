#pragma once

// Text formats.
//
// Scheme text (canonical, bit-exact):
//   n=5
//   1: 2-4 3-5
//   2: 1-3 4-5
//   ...
// one line per axis, pairs ascending. emit_scheme_text writes no trailing
// newline; parse_scheme_text accepts one.
//
// Compact form (n <= 9): double-digit pairs per axis, axes separated by '/',
// '|', tab or newline, e.g. "24 35 / 13 45 / 14 25 / 15 23 / 12 34". The
// dimension is the number of axis groups.

#include <string>
#include <string_view>

#include "vcp/census.hpp"
#include "vcp/scheme.hpp"
#include "vcp/tensor.hpp"

namespace vcp {

/// Parses either form. Blank lines and lines starting with '#' are ignored.
/// Throws SyntaxError on malformed input and passes validation errors
/// through unchanged.
Scheme parse_scheme_text(std::string_view text);

/// Parses only the compact form.
Scheme parse_scheme_compact(std::string_view text);

std::string emit_scheme_text(const Scheme& s);

/// Compact form; throws Unsupported for n > 9.
std::string emit_scheme_compact(const Scheme& s);

/// One JSON object per line: {"id":..,"n":..,"cursor":[..],"axes":[[[lo,hi],..],..]}.
std::string scheme_to_jsonl(const Scheme& s, std::size_t id, const Cursor& cursor);

/// Reads back the id and cursor of a JSONL scheme line.
std::pair<std::size_t, Cursor> jsonl_position(std::string_view line);

/// "i j -> k sign" for each ordered entry with i < j, one per line.
std::string emit_tensor_dump(const StructureTensor& L);

/// Comma-separated reals, e.g. "0,1,1,0,0".
RealVector parse_real_vector(std::string_view text);

/// Same syntax; nullopt if any component is not an integer literal.
std::optional<IntVector> parse_int_vector(std::string_view text);

/// Shortest round-trip decimal form.
std::string format_number(double x);
std::string format_number(std::int64_t x);

/// Linear combination of basis vectors with zero terms elided, e.g.
/// "2*e1 - e3 + e5". The zero vector prints as "0".
template <typename T>
std::string format_vector(const Vector<T>& v);

/// "(a1,..,an;b1,..,bn)".
std::string format_witness(const Witness& w);

std::string census_csv_header();
std::string census_csv_row(const CensusRecord& r);

}  // namespace vcp
