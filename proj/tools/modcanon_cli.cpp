// Command-line front end: tiling, construction, verification, table
// reproduction and grid rendering, with canonical JSON output.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 greedy stuck.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "modcanon/canon_doc.hpp"
#include "modcanon/cm.hpp"
#include "modcanon/construction.hpp"
#include "modcanon/cover.hpp"
#include "modcanon/oracle.hpp"
#include "modcanon/pattern.hpp"

namespace {

using namespace modcanon;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitStuck = 3;

struct OutputOptions {
  std::string format = "json"; // json | text
  std::string output;          // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("-o,--output", opts->output, "Write output to a file");
}

void emit(const OutputOptions& opts, const std::string& content) {
  if (opts.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + opts.output);
  out << content;
}

Modulus parse_modulus(const std::string& text) {
  if (text == "exact") return Modulus::exact();
  try {
    return Modulus::prime(static_cast<uint32_t>(std::stoul(text)));
  } catch (const std::exception&) {
    throw std::invalid_argument("modulus must be a prime or \"exact\"");
  }
}

std::string canon_summary(const CanonDocument& doc) {
  std::ostringstream os;
  os << "tile    " << doc.tile().to_string() << "\n"
     << "entries " << doc.entries().to_string() << "\n"
     << "n       " << doc.n() << "\n"
     << "modulus " << doc.modulus().to_string() << "\n"
     << "compact " << (doc.compact() ? "yes" : "no") << "\n"
     << "donsets " << doc.donset_multiset().to_string() << "\n";
  return os.str();
}

void emit_document(const OutputOptions& opts, const CanonDocument& doc) {
  emit(opts, opts.format == "json" ? doc.to_json() : canon_summary(doc));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_tile(const std::string& pattern_text, const std::string& modulus_text,
             uint64_t max_n, bool fallback, const OutputOptions& opts) {
  const RhythmicPattern tile = parse_pattern(pattern_text);
  const Modulus modulus = parse_modulus(modulus_text);
  if (modulus.is_exact()) {
    throw std::invalid_argument("tile needs a prime modulus");
  }
  const PrimeModulus p = modulus.p();

  std::ostringstream args;
  args << "-a " << pattern_text << " -p " << p.value() << " --max-n " << max_n
       << (fallback ? " --fallback" : "");

  const GreedyOutcome outcome = greedy_tile(tile, p, max_n);
  if (outcome.status == GreedyStatus::compact_tiling) {
    if (outcome.break_fired) {
      std::cerr << "note: stop condition at the word end fired\n";
    }
    CanonDocument doc(tile, outcome.entries_pattern(), outcome.n, modulus,
                      Provenance{"tile", args.str()});
    emit_document(opts, doc);
    return kExitOk;
  }
  if (!fallback) {
    std::cerr << "stuck: " << outcome.diagnostic << "\n"
              << "(rerun with --fallback for a non-compact canon)\n";
    return kExitStuck;
  }
  const auto lifted = noncompact_canon(tile, p, max_n);
  if (!lifted) {
    std::cerr << "stuck: " << outcome.diagnostic << "\n"
              << "fallback found no period up to " << max_n << "\n";
    return kExitStuck;
  }
  CanonDocument doc(tile, lifted->entries, lifted->n, modulus,
                    Provenance{"tile", args.str()});
  emit_document(opts, doc);
  return kExitOk;
}

int run_construct(uint32_t k, bool verify, const OutputOptions& opts) {
  const RhythmicPattern tile = pow2_tile(k);
  const RhythmicPattern entries = schedule_entries(k);
  const ScheduleCounts expect = predicted_counts(k);

  CanonDocument doc(tile, entries, expect.n, Modulus::prime(2),
                    Provenance{"construct", "-k " + std::to_string(k) +
                                                (verify ? " --verify" : "")});
  if (verify) {
    bool ok = schedule_matches_greedy(k);
    ok = ok && entries.size() == expect.entries;
    ok = ok && doc.donset_multiset().distinct_size() == expect.donsets;
    ok = ok && doc.n() == expect.n;
    std::cerr << "construct checks: " << (ok ? "ok" : "FAILED") << "\n";
    if (!ok) return kExitVerifyFailure;
  }
  emit_document(opts, doc);
  return kExitOk;
}

int run_table1(uint32_t max_n_param, const OutputOptions& opts) {
  if (max_n_param < 2) throw std::invalid_argument("table needs max >= 2");
  if (max_n_param > 16) {
    std::cerr << "warning: entries above 16 can take a long time\n";
  }
  std::vector<std::pair<uint32_t, uint64_t>> rows;
  for (uint32_t n = 2; n <= max_n_param; ++n) {
    const RhythmicPattern tile({0, 1, n});
    const auto outcome = greedy_tile(tile, PrimeModulus(2), uint64_t{1} << 22);
    if (outcome.status != GreedyStatus::compact_tiling) {
      throw std::runtime_error("greedy unexpectedly stuck at n = " +
                               std::to_string(n) + ": " + outcome.diagnostic);
    }
    rows.emplace_back(n, outcome.n);
  }

  std::ostringstream os;
  if (opts.format == "json") {
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i) os << ",";
      os << "\n  {\"n\": " << rows[i].first << ", \"size\": " << rows[i].second << "}";
    }
    os << "\n]\n";
  } else {
    for (const auto& [n, size] : rows) os << n << "\t" << size << "\n";
  }
  emit(opts, os.str());
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& modulus_text) {
  const CanonDocument doc = CanonDocument::from_json(read_file(path));
  std::optional<Modulus> override_modulus;
  if (!modulus_text.empty()) override_modulus = parse_modulus(modulus_text);
  const VerifyOutcome outcome = verify_document(doc, override_modulus);
  std::cout << verify_report_text(doc, outcome);
  return outcome.ok() ? kExitOk : kExitVerifyFailure;
}

int run_render(const std::string& path, const std::string& style,
               const OutputOptions& opts) {
  const CanonDocument doc = CanonDocument::from_json(read_file(path));
  emit(opts, style == "svg" ? render_svg(doc) : render_text(doc));
  return kExitOk;
}

int run_vuza_n(uint64_t n, const OutputOptions& opts) {
  const AdmissibilityReport report = vuza_admissibility(n);
  std::ostringstream os;
  if (opts.format == "json") {
    os << "{\"n\": " << n << ", \"admissible\": "
       << (report.admissible ? "true" : "false") << ", \"factors\": [";
    for (size_t i = 0; i < report.factors.size(); ++i) {
      if (i) os << ", ";
      os << "[" << report.factors[i].first << ", " << report.factors[i].second << "]";
    }
    os << "], \"form\": \"" << report.matched_form << "\"}\n";
  } else {
    os << n << " = ";
    for (size_t i = 0; i < report.factors.size(); ++i) {
      if (i) os << " * ";
      os << report.factors[i].first;
      if (report.factors[i].second > 1) os << "^" << report.factors[i].second;
    }
    if (report.factors.empty()) os << "1";
    os << "\n";
    if (report.admissible) {
      os << "admissible\n";
    } else {
      os << "forbidden, form " << report.matched_form << "\n";
    }
  }
  emit(opts, os.str());
  return kExitOk;
}

int run_oracle_minimal(const std::string& pattern_text,
                       const std::string& modulus_text, const SearchBudget& budget,
                       const OutputOptions& opts) {
  const RhythmicPattern tile = parse_pattern(pattern_text);
  const Modulus modulus = parse_modulus(modulus_text);
  if (modulus.is_exact()) {
    throw std::invalid_argument("oracle minimal needs a prime modulus");
  }
  const BruteResult result = brute_minimal_complement(tile, modulus.p(), budget);
  if (result.status == BruteStatus::found) {
    CanonDocument doc(tile, result.entries_pattern(), result.n, modulus,
                      Provenance{"oracle minimal",
                                 "-a " + pattern_text + " -p " + modulus_text});
    emit_document(opts, doc);
    return kExitOk;
  }
  std::cerr << (result.status == BruteStatus::infeasible ? "infeasible: "
                                                         : "undecided: ")
            << result.diagnostic << "\n";
  return kExitStuck;
}

int run_oracle_census(uint32_t n, const OutputOptions& opts) {
  const auto pairs = brute_all_tilings(n);
  std::ostringstream os;
  if (opts.format == "json") {
    os << "{\"n\": " << n << ", \"count\": " << pairs.size() << ", \"pairs\": [";
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (i) os << ",";
      os << "\n  [" << pairs[i].first.to_string() << ", "
         << pairs[i].second.to_string() << "]";
    }
    os << "\n]}\n";
  } else {
    for (const auto& [a, b] : pairs) {
      os << a.to_string() << " | " << b.to_string() << "\n";
    }
    os << pairs.size() << " tilings of Z_" << n << "\n";
  }
  emit(opts, os.str());
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rhythmic tiling canons modulo p"};
  app.require_subcommand(1);

  // tile
  std::string tile_pattern, tile_modulus = "2";
  uint64_t tile_max_n = uint64_t{1} << 20;
  bool tile_fallback = false;
  OutputOptions tile_out;
  auto* tile_cmd = app.add_subcommand("tile", "Greedy compact tiling of a pattern");
  tile_cmd->add_option("-a,--pattern", tile_pattern, "Comma-separated onsets, or @file")
      ->required();
  tile_cmd->add_option("-p,--modulus", tile_modulus, "Prime modulus");
  tile_cmd->add_option("--max-n", tile_max_n, "Largest canon size to try");
  tile_cmd->add_flag("--fallback", tile_fallback,
                     "On stuck, lift a non-compact canon from order-finding");
  add_output_flags(tile_cmd, &tile_out);

  // construct
  uint32_t construct_k = 1;
  bool construct_verify = false;
  OutputOptions construct_out;
  auto* construct_cmd =
      app.add_subcommand("construct", "Recursive canon for the tile {0,1,2^k}");
  construct_cmd->add_option("-k", construct_k, "Order k")->required();
  construct_cmd->add_flag("--verify", construct_verify,
                          "Cross-check against the greedy tiler and counts");
  add_output_flags(construct_cmd, &construct_out);

  // table1
  uint32_t table_max = 16;
  OutputOptions table_out;
  auto* table_cmd =
      app.add_subcommand("table1", "Minimal canon sizes for tiles {0,1,n} mod 2");
  table_cmd->add_option("--max", table_max, "Largest n");
  add_output_flags(table_cmd, &table_out);

  // verify
  std::string verify_path, verify_modulus;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a canon document");
  verify_cmd->add_option("document", verify_path, "Canon document path")->required();
  verify_cmd->add_option("-p,--modulus", verify_modulus,
                         "Re-check under this modulus instead");

  // render
  std::string render_path, render_style = "text";
  OutputOptions render_out;
  auto* render_cmd = app.add_subcommand("render", "Draw the canon grid");
  render_cmd->add_option("document", render_path, "Canon document path")->required();
  render_cmd->add_option("--style", render_style, "Rendering style")
      ->check(CLI::IsMember({"text", "svg"}));
  add_output_flags(render_cmd, &render_out);

  // vuza-n
  uint64_t vuza_n = 0;
  OutputOptions vuza_out;
  auto* vuza_cmd =
      app.add_subcommand("vuza-n", "Admissibility of a period for Vuza canons");
  vuza_cmd->add_option("n", vuza_n, "Period to classify")->required();
  add_output_flags(vuza_cmd, &vuza_out);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  std::string oracle_pattern, oracle_modulus = "2";
  SearchBudget oracle_budget;
  OutputOptions oracle_min_out;
  auto* oracle_min_cmd =
      oracle_cmd->add_subcommand("minimal", "Minimal compact complement by search");
  oracle_min_cmd->add_option("-a,--pattern", oracle_pattern, "Tile")->required();
  oracle_min_cmd->add_option("-p,--modulus", oracle_modulus, "Prime modulus");
  oracle_min_cmd->add_option("--max-n", oracle_budget.max_n, "Size budget");
  oracle_min_cmd->add_option("--max-entries", oracle_budget.max_entries,
                             "Entry budget");
  oracle_min_cmd->add_option("--node-limit", oracle_budget.node_limit,
                             "Search node budget");
  add_output_flags(oracle_min_cmd, &oracle_min_out);

  uint32_t census_n = 1;
  OutputOptions census_out;
  auto* census_cmd =
      oracle_cmd->add_subcommand("census", "All exact tilings of Z_n");
  census_cmd->add_option("-n", census_n, "Period (at most 40)")->required();
  add_output_flags(census_cmd, &census_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (tile_cmd->parsed()) {
      return run_tile(tile_pattern, tile_modulus, tile_max_n, tile_fallback, tile_out);
    }
    if (construct_cmd->parsed()) {
      return run_construct(construct_k, construct_verify, construct_out);
    }
    if (table_cmd->parsed()) return run_table1(table_max, table_out);
    if (verify_cmd->parsed()) return run_verify(verify_path, verify_modulus);
    if (render_cmd->parsed()) return run_render(render_path, render_style, render_out);
    if (vuza_cmd->parsed()) return run_vuza_n(vuza_n, vuza_out);
    if (oracle_min_cmd->parsed()) {
      return run_oracle_minimal(oracle_pattern, oracle_modulus, oracle_budget,
                                oracle_min_out);
    }
    if (census_cmd->parsed()) return run_oracle_census(census_n, census_out);
  } catch (const DocumentParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const DocumentInvalidError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}
