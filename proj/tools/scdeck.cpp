// scdeck: enumerate self-complementary graphs, verify that no two of them
// share a deck, and evaluate the exact counting formula.
//
// Exit codes: 0 success/verified, 1 counterexample found, 2 input error,
// 3 I/O error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "scdeck/count.hpp"
#include "scdeck/enumerate.hpp"
#include "scdeck/graph6.hpp"
#include "scdeck/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 70;

int default_workers() {
  if (const char* env = std::getenv("SCDECK_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string diameter_text(const scdeck::Diameter& d) {
  return d.is_infinite() ? "inf" : std::to_string(d.value());
}

// log10 of a positive big integer, from its leading digits.
double log10_of(const scdeck::BigInt& value) {
  const std::string s = value.str();
  const std::size_t take = std::min<std::size_t>(s.size(), 15);
  const double mantissa = std::stod(s.substr(0, take));
  return std::log10(mantissa) + static_cast<double>(s.size() - take);
}

int cmd_enumerate(int n, const std::string& out_path, int workers) {
  if (n < 1 || n > scdeck::Graph::kMaxVertices) {
    std::cerr << "error: n must be in [1, 64]\n";
    return kExitInput;
  }
  if (n > 1 && n % 4 == 2) {
    std::cerr << "error: no SC graphs on 4n+2 vertices\n";
    return kExitInput;
  }
  if (n > 1 && n % 4 == 3) {
    std::cerr << "error: no SC graphs on 4n+3 vertices\n";
    return kExitInput;
  }

  const std::vector<scdeck::Graph> graphs = scdeck::enumerate_sc(n, workers);
  const scdeck::SCCount expected = scdeck::sc_count(n);
  if (scdeck::BigInt(graphs.size()) != expected.value) {
    std::cerr << "internal error: enumerated " << graphs.size()
              << " classes but the counting formula gives " << expected.value
              << "\n";
    return kExitInternal;
  }
  try {
    scdeck::write_g6_file(out_path, graphs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  std::cout << graphs.size() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& in_path, const std::string& mode_name,
               const std::string& report_path, int workers) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "error: cannot open " << in_path << "\n";
    return kExitIo;
  }
  std::vector<scdeck::G6Record> records;
  try {
    records = scdeck::read_g6_records(in);
  } catch (const scdeck::G6FileError& e) {
    std::cerr << "error: " << in_path << ": " << e.what() << "\n";
    return kExitInput;
  }
  for (const auto& rec : records) {
    if (rec.graph.order() != records.front().graph.order()) {
      std::cerr << "error: " << in_path << ": line " << rec.line_number
                << ": vertex count " << rec.graph.order()
                << " differs from line " << records.front().line_number << "\n";
      return kExitInput;
    }
  }
  std::vector<scdeck::Graph> graphs;
  graphs.reserve(records.size());
  for (const auto& rec : records) graphs.push_back(rec.graph);

  const scdeck::VerifyMode mode = mode_name == "pairwise"
                                      ? scdeck::VerifyMode::pairwise
                                      : scdeck::VerifyMode::certificate;
  scdeck::VerificationReport report;
  try {
    report = scdeck::verify_all(graphs, mode, workers);
  } catch (const scdeck::DuplicateInputError& e) {
    std::cerr << "error: " << in_path << ": lines "
              << records[e.first_index()].line_number << " and "
              << records[e.second_index()].line_number
              << " are isomorphic duplicates\n";
    return kExitInput;
  }

  const std::string json = scdeck::report_to_json(report);
  if (report_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out || !(out << json)) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return kExitIo;
    }
  }

  if (!report.collisions.empty()) {
    for (const auto& pair : report.collisions)
      std::cerr << "COUNTEREXAMPLE: decks of " << pair[0] << " and " << pair[1]
                << " are isomorphic\n";
    return kExitCounterexample;
  }
  std::cerr << "verified: " << report.graph_count << " graphs, 0 collisions\n";
  return kExitOk;
}

int cmd_count_single(int n) {
  if (n < 1) {
    std::cerr << "error: n must be >= 1\n";
    return kExitInput;
  }
  std::cout << scdeck::sc_count(n).value.str() << "\n";
  return kExitOk;
}

int cmd_count_table(int max_n, const std::string& csv_path) {
  if (max_n < 1) {
    std::cerr << "error: max_n must be >= 1\n";
    return kExitInput;
  }
  std::ostringstream csv;
  csv << "n,sc_graphs,digits,log10\n";
  for (const scdeck::CountRow& row : scdeck::counts_table(max_n)) {
    char log_buf[32];
    std::snprintf(log_buf, sizeof log_buf, "%.6f", log10_of(row.value));
    csv << row.n << ',' << row.value.str() << ',' << row.digits << ',' << log_buf
        << "\n";
  }
  if (csv_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out || !(out << csv.str())) {
      std::cerr << "error: cannot write " << csv_path << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

int cmd_invariants(const std::string& in_path) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "error: cannot open " << in_path << "\n";
    return kExitIo;
  }
  std::vector<scdeck::G6Record> records;
  try {
    records = scdeck::read_g6_records(in);
  } catch (const scdeck::G6FileError& e) {
    std::cerr << "error: " << in_path << ": " << e.what() << "\n";
    return kExitInput;
  }
  for (const auto& rec : records) {
    const scdeck::Graph& g = rec.graph;
    const scdeck::DegreeSequence ds = scdeck::degree_sequence(g);
    std::ostringstream line;
    line << g.order() << ' ' << g.edge_count() << " [";
    for (std::size_t i = 0; i < ds.degrees.size(); ++i) {
      if (i) line << ',';
      line << ds.degrees[i];
    }
    line << "] " << scdeck::to_string(scdeck::char_poly(g)) << ' '
         << diameter_text(scdeck::diameter(g)) << ' '
         << (scdeck::is_self_complementary(g) ? "SC" : "nonSC");
    std::cout << line.str() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-complementary graph enumeration, deck verification and counting"};
  app.require_subcommand(1);

  int workers = default_workers();

  auto* enumerate = app.add_subcommand("enumerate", "generate all SC graphs on n vertices");
  int enum_n = 0;
  std::string enum_out;
  enumerate->add_option("n", enum_n, "vertex count (1 or 0,1 mod 4)")->required();
  enumerate->add_option("--out", enum_out, "output .g6 listing path")->required();
  enumerate->add_option("--workers", workers, "worker thread count");

  auto* verify = app.add_subcommand("verify", "check weak reconstructibility of a listing");
  std::string verify_in, verify_mode = "certificate", verify_report;
  verify->add_option("path", verify_in, "input .g6 listing")->required();
  verify->add_option("--mode", verify_mode, "pairwise|certificate")
      ->check(CLI::IsMember({"pairwise", "certificate"}));
  verify->add_option("--report", verify_report, "write the JSON report here");
  verify->add_option("--workers", workers, "worker thread count");

  auto* count = app.add_subcommand("count", "evaluate the exact counting formula");
  int count_n = 0, table_n = 0;
  std::string csv_path;
  auto* count_n_opt = count->add_option("n", count_n, "vertex count");
  auto* table_opt = count->add_option("--table", table_n, "emit CSV rows up to this n");
  count->add_option("--csv", csv_path, "CSV output path (default stdout)");
  count_n_opt->excludes(table_opt);

  auto* invariants = app.add_subcommand("invariants", "print level-1 invariants per graph");
  std::string inv_in;
  invariants->add_option("path", inv_in, "input .g6 listing")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(enum_n, enum_out, workers);
    if (verify->parsed())
      return cmd_verify(verify_in, verify_mode, verify_report, workers);
    if (count->parsed()) {
      if (table_opt->count() > 0) return cmd_count_table(table_n, csv_path);
      if (count_n_opt->count() > 0) return cmd_count_single(count_n);
      std::cerr << "error: count needs either n or --table\n";
      return kExitInput;
    }
    if (invariants->parsed()) return cmd_invariants(inv_in);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
