#include "vcp/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace vcp {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

int column_of(const Line&, std::size_t offset) { return static_cast<int>(offset) + 1; }

/// Reads a positive decimal integer at offset, advancing it.
int read_int(const Line& line, std::size_t& offset, const char* what) {
  const std::string_view s = line.text;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data() + offset, s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data() + offset) {
    throw SyntaxError(line.number, column_of(line, offset), std::string("expected ") + what);
  }
  offset = static_cast<std::size_t>(ptr - s.data());
  return value;
}

void skip_blanks(std::string_view s, std::size_t& offset) {
  while (offset < s.size() && (s[offset] == ' ' || s[offset] == '\t')) ++offset;
}

Scheme parse_full(const std::vector<Line>& lines) {
  const Line& header = lines.front();
  std::size_t off = header.text.find_first_not_of(" \t");
  if (header.text.substr(off, 2) != "n=") {
    throw SyntaxError(header.number, column_of(header, off), "expected \"n=<dimension>\"");
  }
  off += 2;
  const int n = read_int(header, off, "dimension");
  skip_blanks(header.text, off);
  if (off != header.text.size()) {
    throw SyntaxError(header.number, column_of(header, off), "trailing characters after dimension");
  }
  const Dimension dim = feasibility(n);

  RawAssignment raw(static_cast<std::size_t>(dim.n()));
  std::vector<char> seen(static_cast<std::size_t>(dim.n()) + 1, 0);
  for (std::size_t t = 1; t < lines.size(); ++t) {
    const Line& line = lines[t];
    const std::string_view s = line.text;
    std::size_t o = 0;
    skip_blanks(s, o);
    const std::size_t axis_col = o;
    const int axis = read_int(line, o, "axis number");
    if (!dim.contains(axis)) {
      throw SyntaxError(line.number, column_of(line, axis_col),
                        "axis " + std::to_string(axis) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(axis)]) {
      throw SyntaxError(line.number, column_of(line, axis_col),
                        "axis " + std::to_string(axis) + " listed twice");
    }
    seen[static_cast<std::size_t>(axis)] = 1;
    if (o >= s.size() || s[o] != ':') throw SyntaxError(line.number, column_of(line, o), "expected ':'");
    ++o;
    auto& pairs = raw[static_cast<std::size_t>(axis - 1)];
    while (true) {
      skip_blanks(s, o);
      if (o == s.size()) break;
      const int a = read_int(line, o, "pair \"lo-hi\"");
      if (o >= s.size() || s[o] != '-') throw SyntaxError(line.number, column_of(line, o), "expected '-'");
      ++o;
      const int b = read_int(line, o, "second pair member");
      if (o < s.size() && s[o] != ' ' && s[o] != '\t') {
        throw SyntaxError(line.number, column_of(line, o), "unexpected character");
      }
      pairs.emplace_back(a, b);
    }
  }
  for (Index axis = 1; axis <= n; ++axis) {
    if (!seen[static_cast<std::size_t>(axis)]) {
      const Line& last = lines.back();
      throw SyntaxError(last.number, static_cast<int>(last.text.size()) + 1,
                        "no line for axis " + std::to_string(axis));
    }
  }
  return validate_scheme(raw);
}

bool is_group_separator(char c) { return c == '/' || c == '|' || c == '\t' || c == '\n'; }

}  // namespace

Scheme parse_scheme_compact(std::string_view text) {
  RawAssignment raw(1);
  int line = 1;
  std::size_t line_start = 0;
  bool group_has_pairs = false;
  for (std::size_t o = 0; o < text.size();) {
    const char c = text[o];
    const int col = static_cast<int>(o - line_start) + 1;
    if (c == '#') {
      while (o < text.size() && text[o] != '\n') ++o;
      continue;
    }
    if (is_group_separator(c)) {
      if (group_has_pairs) {
        raw.emplace_back();
        group_has_pairs = false;
      } else if (c == '/' || c == '|') {
        throw SyntaxError(line, col, "empty axis group");
      }
      if (c == '\n') {
        ++line;
        line_start = o + 1;
      }
      ++o;
      continue;
    }
    if (c == ' ' || c == ',' || c == '\r') {
      ++o;
      continue;
    }
    if (o + 1 < text.size() && std::isdigit(static_cast<unsigned char>(c)) &&
        std::isdigit(static_cast<unsigned char>(text[o + 1])) &&
        (o + 2 == text.size() || !std::isdigit(static_cast<unsigned char>(text[o + 2])))) {
      raw.back().emplace_back(c - '0', text[o + 1] - '0');
      group_has_pairs = true;
      o += 2;
      continue;
    }
    throw SyntaxError(line, col, "expected a double-digit pair such as \"24\"");
  }
  if (!group_has_pairs) raw.pop_back();
  if (raw.empty()) throw SyntaxError(line, 1, "no pairs found");
  return validate_scheme(raw);
}

Scheme parse_scheme_text(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw SyntaxError(1, 1, "empty scheme text");
  const std::string_view first = lines.front().text;
  const auto start = first.find_first_not_of(" \t");
  if (first.substr(start, 2) == "n=") return parse_full(lines);
  return parse_scheme_compact(text);
}

std::string emit_scheme_text(const Scheme& s) {
  std::string out = "n=" + std::to_string(s.n());
  for (const auto& m : s.matchings()) {
    out += "\n" + std::to_string(m.axis) + ":";
    for (const auto& p : m.pairs) out += " " + to_string(p);
  }
  return out;
}

std::string emit_scheme_compact(const Scheme& s) {
  if (s.n() > 9) {
    throw Error(ErrorCode::Unsupported, "compact form needs single-digit indices (n <= 9)");
  }
  std::string out;
  for (const auto& m : s.matchings()) {
    if (!out.empty()) out += " / ";
    for (std::size_t t = 0; t < m.pairs.size(); ++t) {
      if (t) out += ' ';
      out += static_cast<char>('0' + m.pairs[t].lo);
      out += static_cast<char>('0' + m.pairs[t].hi);
    }
  }
  return out;
}

std::string scheme_to_jsonl(const Scheme& s, std::size_t id, const Cursor& cursor) {
  nlohmann::json axes = nlohmann::json::array();
  for (const auto& m : s.matchings()) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : m.pairs) pairs.push_back({p.lo, p.hi});
    axes.push_back(std::move(pairs));
  }
  nlohmann::ordered_json j;
  j["id"] = id;
  j["n"] = s.n();
  j["cursor"] = cursor;
  j["axes"] = std::move(axes);
  return j.dump();
}

std::pair<std::size_t, Cursor> jsonl_position(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
    return {j.at("id").get<std::size_t>(), j.at("cursor").get<Cursor>()};
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(1, 1, std::string("bad scheme JSON line: ") + e.what());
  }
}

std::string emit_tensor_dump(const StructureTensor& L) {
  std::string out;
  for (Index i = 1; i <= L.n(); ++i) {
    for (Index j = i + 1; j <= L.n(); ++j) {
      const auto e = *L.lookup(i, j);
      out += std::to_string(i) + " " + std::to_string(j) + " -> " + std::to_string(e.axis) +
             (e.sign > 0 ? " +1\n" : " -1\n");
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto end = text.find(',', pos);
    auto tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    out.push_back(tok);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

RealVector parse_real_vector(std::string_view text) {
  std::vector<double> c;
  int col = 1;
  for (auto tok : split_commas(text)) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double x = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(x)) {
      throw SyntaxError(1, col, "bad vector component \"" + std::string(tok) + "\"");
    }
    c.push_back(x);
    col += static_cast<int>(tok.size()) + 1;
  }
  return RealVector(std::move(c));
}

std::optional<IntVector> parse_int_vector(std::string_view text) {
  parse_real_vector(text);  // reports syntax errors
  std::vector<std::int64_t> c;
  for (auto tok : split_commas(text)) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t x = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    c.push_back(x);
  }
  return IntVector(std::move(c));
}

std::string format_number(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_number(std::int64_t x) { return std::to_string(x); }

template <typename T>
std::string format_vector(const Vector<T>& v) {
  std::string out;
  for (Index i = 1; i <= v.size(); ++i) {
    const T c = v.component(i);
    if (c == T{}) continue;
    const bool negative = c < T{};
    const T mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != T{1}) out += format_number(mag) + "*";
    out += "e" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

template std::string format_vector(const IntVector&);
template std::string format_vector(const RealVector&);

std::string format_witness(const Witness& w) {
  std::string out = "(";
  auto append = [&](const IntVector& v) {
    for (Index i = 1; i <= v.size(); ++i) {
      if (i > 1) out += ',';
      out += std::to_string(v.component(i));
    }
  };
  append(w.a);
  out += ';';
  append(w.b);
  out += ')';
  return out;
}

std::string census_csv_header() { return "scheme_id,closed,orthogonality_zero,xab_zero,witness"; }

std::string census_csv_row(const CensusRecord& r) {
  auto b = [](bool x) { return x ? "true" : "false"; };
  std::ostringstream os;
  os << r.scheme_id << ',' << b(r.closed) << ',' << b(r.orthogonality_zero) << ',' << b(r.xab_zero) << ',';
  // The witness contains commas, so it is quoted.
  if (r.witness) os << '"' << format_witness(*r.witness) << '"';
  return os.str();
}

}  // namespace vcp
