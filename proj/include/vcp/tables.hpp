#pragma once

// Reference tables shipped with the library (data/tables/*.txt, compiled in)
// and the report that recomputes them.
//
//   table1: per-axis pairings for n=5 (3 per axis)
//   table2: the six n=5 schemes
//   table3: per-axis pairings for n=7 (15 per axis)
//   table4: thirty n=7 schemes

#include <string>
#include <vector>

#include "vcp/scheme.hpp"

namespace vcp {

/// A corrected cell of a pairing table.
struct Erratum {
  int kind = 0;  // 1-based row
  Index axis = 0;
  std::vector<IndexPair> corrected;
};

/// Per-axis pairing table as printed: cells[kind-1][axis-1] holds the pairs
/// of one cell, normalized and sorted but not validated (a printed cell need
/// not be a matching).
struct PairingTable {
  int n = 0;
  std::vector<std::vector<std::vector<IndexPair>>> cells;
  std::vector<Erratum> errata;

  /// Column for one axis, as printed.
  std::vector<std::vector<IndexPair>> column(Index axis) const;
  /// Copy with every erratum applied.
  PairingTable corrected() const;
};

/// Parses the per-axis table format: "n=<n>", then one tab-separated row per
/// kind (label, then one cell per axis with comma-separated double-digit
/// pairs), plus optional "!erratum <kind> <axis> <cell>" lines.
PairingTable parse_pairing_table(std::string_view text);

/// Parses the scheme table format: "n=<n>", then one tab-separated row per
/// scheme (label, then one cell per axis with space-separated pairs).
std::vector<Scheme> parse_scheme_table(std::string_view text);

PairingTable reference_table1();
std::vector<Scheme> reference_table2();
PairingTable reference_table3();
std::vector<Scheme> reference_table4();

/// Printed cells of a column that are not among the computed matchings.
struct ColumnDiff {
  Index axis = 0;
  std::vector<int> unexpected_kinds;      // printed cells not computed
  std::vector<std::vector<IndexPair>> missing;  // computed matchings not printed
};

/// Compares every column of the table with enumerate_axis_matchings.
std::vector<ColumnDiff> compare_pairing_table(const PairingTable& table);

struct TableCheck {
  std::string title;
  bool pass = false;
  std::vector<std::string> lines;
};

struct TablesReport {
  std::vector<TableCheck> checks;

  bool all_pass() const;
  std::string text() const;
};

/// Recomputes all four tables and checks them against the shipped data.
TablesReport reproduce_tables();

}  // namespace vcp
