#include "vcp/tables.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "vcp/io.hpp"
#include "vcp/table_data.hpp"
#include "vcp/tensor.hpp"
#include "vcp/verification.hpp"

namespace vcp {

namespace {

struct TableLines {
  int n = 0;
  std::vector<std::pair<int, std::string>> rows;      // (line number, text)
  std::vector<std::pair<int, std::string>> errata;    // (line number, text after the tag)
};

TableLines split_table(std::string_view text) {
  TableLines out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("n=", 0) == 0) {
      out.n = std::stoi(line.substr(2));
    } else if (line.rfind("!erratum", 0) == 0) {
      out.errata.emplace_back(number, line.substr(8));
    } else {
      out.rows.emplace_back(number, line);
    }
  }
  if (out.n == 0) throw SyntaxError(1, 1, "table has no \"n=\" line");
  return out;
}

std::vector<IndexPair> parse_cell(std::string_view cell, int line) {
  std::vector<IndexPair> pairs;
  for (std::size_t o = 0; o < cell.size();) {
    if (cell[o] == ',' || cell[o] == ' ') {
      ++o;
      continue;
    }
    if (o + 1 >= cell.size() || !std::isdigit(static_cast<unsigned char>(cell[o])) ||
        !std::isdigit(static_cast<unsigned char>(cell[o + 1]))) {
      throw SyntaxError(line, static_cast<int>(o) + 1, "bad pair in table cell");
    }
    pairs.push_back(IndexPair::of(cell[o] - '0', cell[o + 1] - '0'));
    o += 2;
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<std::string> split_tabs(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string cell;
  while (std::getline(in, cell, '\t')) out.push_back(cell);
  return out;
}

std::string cell_text(const std::vector<IndexPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ',';
    out += std::to_string(p.lo) + std::to_string(p.hi);
  }
  return out;
}

}  // namespace

std::vector<std::vector<IndexPair>> PairingTable::column(Index axis) const {
  std::vector<std::vector<IndexPair>> out;
  for (const auto& row : cells) out.push_back(row.at(static_cast<std::size_t>(axis - 1)));
  return out;
}

PairingTable PairingTable::corrected() const {
  PairingTable t = *this;
  for (const auto& e : errata) {
    t.cells.at(static_cast<std::size_t>(e.kind - 1)).at(static_cast<std::size_t>(e.axis - 1)) = e.corrected;
  }
  t.errata.clear();
  return t;
}

PairingTable parse_pairing_table(std::string_view text) {
  const auto lines = split_table(text);
  PairingTable t;
  t.n = lines.n;
  for (const auto& [number, row] : lines.rows) {
    const auto fields = split_tabs(row);
    if (fields.size() != static_cast<std::size_t>(t.n) + 1) {
      throw SyntaxError(number, 1, "expected a label and " + std::to_string(t.n) + " cells");
    }
    std::vector<std::vector<IndexPair>> cells;
    for (std::size_t f = 1; f < fields.size(); ++f) cells.push_back(parse_cell(fields[f], number));
    t.cells.push_back(std::move(cells));
  }
  for (const auto& [number, body] : lines.errata) {
    std::istringstream in(body);
    Erratum e;
    std::string cell;
    if (!(in >> e.kind >> e.axis >> cell) || e.kind < 1 || e.kind > static_cast<int>(t.cells.size()) ||
        e.axis < 1 || e.axis > t.n) {
      throw SyntaxError(number, 1, "bad erratum line");
    }
    e.corrected = parse_cell(cell, number);
    t.errata.push_back(std::move(e));
  }
  return t;
}

std::vector<Scheme> parse_scheme_table(std::string_view text) {
  const auto lines = split_table(text);
  std::vector<Scheme> out;
  for (const auto& [number, row] : lines.rows) {
    auto fields = split_tabs(row);
    if (fields.size() != static_cast<std::size_t>(lines.n) + 1) {
      throw SyntaxError(number, 1, "expected a label and " + std::to_string(lines.n) + " cells");
    }
    std::string compact;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      if (f > 1) compact += " / ";
      compact += fields[f];
    }
    out.push_back(parse_scheme_compact(compact));
  }
  return out;
}

PairingTable reference_table1() { return parse_pairing_table(table_data::table1); }
std::vector<Scheme> reference_table2() { return parse_scheme_table(table_data::table2); }
PairingTable reference_table3() { return parse_pairing_table(table_data::table3); }
std::vector<Scheme> reference_table4() { return parse_scheme_table(table_data::table4); }

std::vector<ColumnDiff> compare_pairing_table(const PairingTable& table) {
  const Dimension dim = feasibility(table.n);
  std::vector<ColumnDiff> out;
  for (Index axis = 1; axis <= dim.n(); ++axis) {
    std::set<std::vector<IndexPair>> computed;
    for (const auto& m : enumerate_axis_matchings(dim, axis)) computed.insert(m.pairs);
    ColumnDiff d{axis, {}, {}};
    std::set<std::vector<IndexPair>> printed;
    const auto col = table.column(axis);
    for (std::size_t kind = 0; kind < col.size(); ++kind) {
      printed.insert(col[kind]);
      if (!computed.contains(col[kind])) d.unexpected_kinds.push_back(static_cast<int>(kind) + 1);
    }
    for (const auto& m : computed) {
      if (!printed.contains(m)) d.missing.push_back(m);
    }
    // Duplicated printed cells show up as a shortfall in distinct entries.
    if (printed.size() != col.size() && d.unexpected_kinds.empty() && d.missing.empty()) {
      d.unexpected_kinds.push_back(0);
    }
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

TableCheck check_pairing_table(const std::string& title, const PairingTable& table, std::size_t per_axis) {
  TableCheck c{title, true, {}};
  const auto verbatim = compare_pairing_table(table);
  const auto fixed = compare_pairing_table(table.corrected());

  std::size_t counted = table.cells.size();
  c.lines.push_back("n=" + std::to_string(table.n) + ": " + std::to_string(counted) +
                    " pairings per axis printed, " + std::to_string(per_axis) + " computed");
  if (counted != per_axis) c.pass = false;

  for (const auto& d : verbatim) {
    for (int kind : d.unexpected_kinds) {
      const bool covered = std::any_of(table.errata.begin(), table.errata.end(), [&](const Erratum& e) {
        return e.kind == kind && e.axis == d.axis;
      });
      const auto& cell = table.cells.at(static_cast<std::size_t>(kind - 1)).at(static_cast<std::size_t>(d.axis - 1));
      c.lines.push_back("axis " + std::to_string(d.axis) + ", kind " + std::to_string(kind) + ": printed " +
                        cell_text(cell) + " is not a pairing of the remaining indices" +
                        (covered ? " (erratum on file)" : " (no erratum)"));
      if (!covered) c.pass = false;
    }
  }
  for (const auto& e : table.errata) {
    const auto& d = verbatim.at(static_cast<std::size_t>(e.axis - 1));
    if (std::find(d.unexpected_kinds.begin(), d.unexpected_kinds.end(), e.kind) == d.unexpected_kinds.end()) {
      c.lines.push_back("erratum for axis " + std::to_string(e.axis) + ", kind " + std::to_string(e.kind) +
                        " corrects a cell that was already valid");
      c.pass = false;
    }
  }
  std::size_t matched_axes = 0;
  for (const auto& d : fixed) {
    if (d.unexpected_kinds.empty() && d.missing.empty()) {
      ++matched_axes;
    } else {
      c.pass = false;
      c.lines.push_back("axis " + std::to_string(d.axis) + ": column differs from computed pairings");
    }
  }
  c.lines.push_back(std::to_string(matched_axes) + "/" + std::to_string(table.n) +
                    " columns set-equal to computed pairings" +
                    (table.errata.empty() ? "" : " after " + std::to_string(table.errata.size()) + " errata"));
  return c;
}

std::size_t double_factorial(int m) {
  std::size_t r = 1;
  for (int t = m; t > 1; t -= 2) r *= static_cast<std::size_t>(t);
  return r;
}

}  // namespace

bool TablesReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const TableCheck& c) { return c.pass; });
}

std::string TablesReport::text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.title + ": " + (c.pass ? "PASS" : "FAIL") + "\n";
    for (const auto& l : c.lines) out += "  " + l + "\n";
  }
  out += std::string("overall: ") + (all_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

TablesReport reproduce_tables() {
  TablesReport report;

  report.checks.push_back(check_pairing_table("Table 1 (n=5 pairings per axis)", reference_table1(),
                                              double_factorial(3)));

  {
    TableCheck c{"Table 2 (n=5 schemes)", true, {}};
    auto stream = enumerate_schemes(feasibility(5));
    const auto computed = collect_schemes(stream);
    const auto printed = reference_table2();
    const std::set<Scheme> a(computed.begin(), computed.end());
    const std::set<Scheme> b(printed.begin(), printed.end());
    c.lines.push_back(std::to_string(computed.size()) + " schemes enumerated, " +
                      std::to_string(printed.size()) + " rows printed");
    c.pass = a == b && computed.size() == printed.size();
    c.lines.push_back(std::string("set equality: ") + (a == b ? "yes" : "no"));
    report.checks.push_back(std::move(c));
  }

  report.checks.push_back(check_pairing_table("Table 3 (n=7 pairings per axis)", reference_table3(),
                                              double_factorial(5)));

  {
    TableCheck c{"Table 4 (n=7 schemes)", true, {}};
    auto stream = enumerate_schemes(feasibility(7));
    const auto computed = collect_schemes(stream);
    const std::set<Scheme> all(computed.begin(), computed.end());
    std::set<Scheme> closed;
    for (const auto& s : computed) {
      if (is_closed(s)) closed.insert(s);
    }
    const auto printed = reference_table4();
    const std::set<Scheme> rows(printed.begin(), printed.end());
    std::size_t members = 0;
    for (std::size_t r = 0; r < printed.size(); ++r) {
      if (all.contains(printed[r])) {
        ++members;
      } else {
        c.lines.push_back("row " + std::to_string(r + 1) + " not found among enumerated schemes");
      }
    }
    c.lines.push_back(std::to_string(computed.size()) + " schemes enumerated");
    c.lines.push_back(std::to_string(members) + "/" + std::to_string(printed.size()) +
                      " printed rows found in the enumeration");
    c.lines.push_back(std::to_string(closed.size()) + " closed schemes; printed rows " +
                      (rows == closed ? "are exactly" : "are not") + " the closed schemes");
    c.pass = computed.size() == 6240 && members == printed.size() && printed.size() == 30;

    auto xab_line = [&](std::size_t row, bool expect_zero) {
      const bool zero = xab_identically_zero(build_tensor(printed.at(row - 1)));
      c.lines.push_back("row " + std::to_string(row) + ": X_AB " + (zero ? "identically zero" : "not identically zero") +
                        (zero == expect_zero ? "" : " (unexpected)"));
      if (zero != expect_zero) c.pass = false;
    };
    xab_line(11, true);
    xab_line(20, true);
    xab_line(2, false);
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace vcp
