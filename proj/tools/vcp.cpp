// vcp: command-line front end for pairing schemes, structure tensors and the
// cross-term census. Exit status: 0 success, 1 invalid input, 2 table
// reproduction failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "vcp/census.hpp"
#include "vcp/io.hpp"
#include "vcp/scheme.hpp"
#include "vcp/tables.hpp"
#include "vcp/tensor.hpp"
#include "vcp/verification.hpp"

namespace {

using namespace vcp;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Unsupported, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "table2:<row>", "table4:<row>", a file path, or inline scheme text.
Scheme load_scheme(const std::string& source) {
  for (const auto& [prefix, table] : {std::pair{"table2:", 2}, std::pair{"table4:", 4}}) {
    if (source.rfind(prefix, 0) == 0) {
      const auto rows = table == 2 ? reference_table2() : reference_table4();
      std::size_t row = 0;
      try {
        row = std::stoul(source.substr(std::string_view(prefix).size()));
      } catch (const std::exception&) {
        throw SyntaxError(1, 8, "bad table row in \"" + source + "\"");
      }
      if (row < 1 || row > rows.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "table" + std::to_string(table) + " has rows 1.." +
                                                    std::to_string(rows.size()));
      }
      return rows[row - 1];
    }
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return parse_scheme_text(read_file(source));
  return parse_scheme_text(source);
}

Cursor parse_cursor(const std::string& text) {
  Cursor c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(std::stoul(tok));
  return c;
}

/// Output target: a file when a path is given, standard output otherwise.
class Output {
 public:
  explicit Output(const std::string& path, bool append = false) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, append ? std::ios::app : std::ios::trunc);
      if (!*file_) throw Error(ErrorCode::Unsupported, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

template <typename T>
void print_cross_report(const StructureTensor& L, const Scheme& s, const Vector<T>& a, const Vector<T>& b) {
  const auto c = cross(L, a, b);
  const auto r = defect_report(L, s, a, b);
  std::cout << "A x B = " << format_vector(c) << "\n";
  std::cout << "(A x B).A = " << format_number(r.dot_with_a) << "\n";
  std::cout << "(A x B).B = " << format_number(r.dot_with_b) << "\n";
  std::cout << "X_AB = " << format_number(r.xab_direct) << "\n";
  std::cout << "X_AB (tensor contraction) = " << format_number(r.xab_tensor) << "\n";
  std::cout << "X_AB (pair minors) = " << format_number(r.xab_pairs) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Generalized cross products in odd dimensions: schemes, tensors, census"};
  app.require_subcommand(1);

  int max_n = 9;
  auto* dims = app.add_subcommand("dims", "List feasible dimensions and per-axis counts");
  dims->add_option("--max", max_n, "Largest dimension to list")->check(CLI::Range(3, 1001));

  int n = 0;
  int axis = 0;
  auto* matchings = app.add_subcommand("matchings", "List the pairings available to one axis");
  matchings->add_option("-n", n, "Dimension")->required();
  matchings->add_option("--axis", axis, "Axis (1-based)")->required();

  std::size_t limit = 0;
  std::string format = "jsonl";
  std::string output;
  std::string prefix;
  std::string resume;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every scheme of a dimension");
  enumerate->add_option("-n", n, "Dimension")->required();
  enumerate->add_option("--limit", limit, "Stop after this many schemes")->check(CLI::PositiveNumber);
  enumerate->add_option("--format", format, "jsonl or text")->check(CLI::IsMember({"jsonl", "text"}));
  enumerate->add_option("-o,--output", output, "Output file (default: stdout)");
  enumerate->add_option("--prefix", prefix, "Only schemes starting with these 0-based choices, e.g. 0,2");
  enumerate->add_option("--resume", resume, "Continue a JSONL file after its last scheme, appending to it");

  std::string scheme_src;
  auto* tensor = app.add_subcommand("tensor", "Print the signed structure tensor of a scheme");
  tensor->add_option("--scheme", scheme_src, "Scheme file, inline text, or tableR:row")->required();

  std::string vec_a, vec_b;
  auto* crossc = app.add_subcommand("cross", "Evaluate A x B and the cross term");
  crossc->add_option("--scheme", scheme_src, "Scheme file, inline text, or tableR:row")->required();
  crossc->add_option("-A", vec_a, "Comma-separated components")->required();
  crossc->add_option("-B", vec_b, "Comma-separated components")->required();

  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  auto* verify = app.add_subcommand("verify", "Classify one scheme and cross-check the X_AB paths");
  verify->add_option("--scheme", scheme_src, "Scheme file, inline text, or tableR:row")->required();
  verify->add_option("--seed", seed, "Seed for witness search and sampling");
  verify->add_option("--samples", samples, "Random integer pairs for the path check");

  unsigned jobs = 1;
  auto* censusc = app.add_subcommand("census", "Classify every scheme of a dimension (CSV)");
  censusc->add_option("-n", n, "Dimension")->required();
  censusc->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  censusc->add_option("--limit", limit, "Stop after this many schemes")->check(CLI::PositiveNumber);
  censusc->add_option("-o,--output", output, "CSV file (default: stdout)");
  censusc->add_option("--seed", seed, "Seed for witness search");

  auto* tables = app.add_subcommand("tables", "Recompute the reference tables and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (*dims) {
    for (int d = 3; d <= max_n; ++d) {
      try {
        const auto dim = feasibility(d);
        std::size_t per_axis = 1;
        for (int t = d - 2; t > 1; t -= 2) per_axis *= static_cast<std::size_t>(t);
        std::cout << "n=" << d << " K=" << dim.pairs_per_axis() << " pairs=" << dim.pair_count()
                  << " matchings_per_axis=" << per_axis << "\n";
      } catch (const Error& e) {
        std::cout << "n=" << d << " infeasible (" << to_string(e.code()) << ")\n";
      }
    }
    return 0;
  }

  if (*matchings) {
    const auto dim = feasibility(n);
    for (const auto& m : enumerate_axis_matchings(dim, axis)) {
      for (std::size_t t = 0; t < m.pairs.size(); ++t) std::cout << (t ? " " : "") << to_string(m.pairs[t]);
      std::cout << "\n";
    }
    return 0;
  }

  if (*enumerate) {
    const auto dim = feasibility(n);
    EnumerationOptions opts;
    if (limit) opts.limit = limit;
    if (!prefix.empty()) opts.prefix = parse_cursor(prefix);
    std::size_t next_id = 1;
    if (!resume.empty()) {
      if (format != "jsonl") throw Error(ErrorCode::Unsupported, "--resume needs --format jsonl");
      if (!output.empty()) throw Error(ErrorCode::Unsupported, "--resume appends to its own file; drop -o");
      std::ifstream in(resume);
      std::string line, last;
      while (std::getline(in, line)) {
        if (!line.empty()) last = line;
      }
      if (!last.empty()) {
        auto [id, cursor] = jsonl_position(last);
        opts.resume_after = std::move(cursor);
        next_id = id + 1;
      }
      output = resume;
    }
    Output out(output, !resume.empty());
    auto stream = enumerate_schemes(dim, opts);
    while (auto s = stream.next()) {
      if (format == "jsonl") {
        out.stream() << scheme_to_jsonl(*s, next_id, stream.cursor()) << "\n";
      } else {
        out.stream() << "# scheme " << next_id << "\n" << emit_scheme_text(*s) << "\n\n";
      }
      ++next_id;
    }
    return 0;
  }

  if (*tensor) {
    std::cout << emit_tensor_dump(build_tensor(load_scheme(scheme_src)));
    return 0;
  }

  if (*crossc) {
    const auto s = load_scheme(scheme_src);
    const auto L = build_tensor(s);
    const auto ia = parse_int_vector(vec_a);
    const auto ib = parse_int_vector(vec_b);
    if (ia && ib) {
      print_cross_report(L, s, *ia, *ib);
    } else {
      print_cross_report(L, s, parse_real_vector(vec_a), parse_real_vector(vec_b));
    }
    return 0;
  }

  if (*verify) {
    const auto s = load_scheme(scheme_src);
    const auto L = build_tensor(s);
    const auto poly = xab_polynomial(L);
    std::cout << "n=" << s.n() << "\n";
    std::cout << "scheme: " << (s.n() <= 9 ? emit_scheme_compact(s) : std::string("(n > 9)")) << "\n";
    std::cout << "closed: " << std::boolalpha << is_closed(s) << "\n";
    std::cout << "orthogonality identically zero: " << orthogonality_identically_zero(L) << "\n";
    std::cout << "X_AB identically zero: " << poly.empty() << "\n";
    std::cout << "X_AB nonzero monomials: " << poly.size() << "\n";
    if (!poly.empty()) {
      if (const auto w = find_xab_witness(L, seed)) {
        std::cout << "witness: " << format_witness(*w) << " X_AB = " << w->xab << "\n";
      } else {
        std::cout << "witness: none found\n";
      }
    }
    std::mt19937_64 rng(seed);
    std::size_t agree = 0;
    for (std::size_t t = 0; t < samples; ++t) {
      auto a = IntVector::zero(s.n());
      auto b = IntVector::zero(s.n());
      for (Index i = 1; i <= s.n(); ++i) a.component(i) = static_cast<std::int64_t>(rng() % 11) - 5;
      for (Index i = 1; i <= s.n(); ++i) b.component(i) = static_cast<std::int64_t>(rng() % 11) - 5;
      const auto r = defect_report(L, s, a, b);
      if (r.xab_direct == r.xab_tensor && r.xab_direct == r.xab_pairs) ++agree;
    }
    std::cout << "X_AB paths agree on " << agree << "/" << samples << " random integer pairs\n";
    return agree == samples ? 0 : 1;
  }

  if (*censusc) {
    const auto dim = feasibility(n);
    CensusOptions opts;
    opts.jobs = jobs;
    opts.seed = seed;
    if (limit) opts.limit = limit;
    Output out(output);
    out.stream() << census_csv_header() << "\n";
    const auto summary = census(dim, opts, [&](const CensusRecord& r, const Scheme&) {
      out.stream() << census_csv_row(r) << "\n";
    });
    std::cerr << "schemes=" << summary.total << " closed=" << summary.closed
              << " orthogonality_zero=" << summary.orthogonality_zero << " xab_zero=" << summary.xab_zero
              << "\n";
    return 0;
  }

  if (*tables) {
    const auto report = reproduce_tables();
    std::cout << report.text();
    return report.all_pass() ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const vcp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
