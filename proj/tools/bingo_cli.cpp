// Command-line surface: board parsing, closure traces, the board catalog,
// spiral constructions, max-depth search, and the verification sweeps.
//
// Exit codes: 0 on success, 1 when a verification suite finds a violation
// (or a construction fails its self-check), 2 for usage and input errors.
// Results go to stdout, diagnostics to stderr.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bingo/constructions.hpp"
#include "bingo/json_io.hpp"
#include "bingo/search.hpp"

namespace {

using namespace bingo;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

int run_closure(const std::string& path, bool as_json) {
  const ClosureTrace trace = closure(parse_board(read_input(path)));
  if (as_json) {
    std::cout << trace_to_json(trace).dump(2) << "\n";
  } else {
    std::cout << render_board(trace.final) << "\n";
  }
  return 0;
}

int run_depth(const std::string& path) {
  std::cout << closure_fixpoint(parse_board(read_input(path))).depth << "\n";
  return 0;
}

int run_trace(const std::string& path, const std::string& format, bool pretty) {
  const ClosureTrace trace = closure(parse_board(read_input(path)));
  if (format == "json") {
    std::cout << trace_to_json(trace).dump(2) << "\n";
  } else {
    std::cout << render_board(trace.start, step_labels(trace), pretty) << "\n";
  }
  return 0;
}

int run_catalog(const std::string& name, bool labels, bool pretty) {
  if (name.empty()) {
    for (const CatalogBoard& board : catalog()) std::cout << board.name << "\n";
    return 0;
  }
  const CatalogBoard* board = find_catalog_board(name);
  if (board == nullptr) {
    std::cerr << "unknown catalog board '" << name << "'; names:";
    for (const CatalogBoard& b : catalog()) std::cerr << " " << b.name;
    std::cerr << "\n";
    return 2;
  }
  if (labels) {
    std::cout << render_board(board->occupied, board->labels, pretty) << "\n";
  } else {
    std::cout << render_board(board->occupied) << "\n";
  }
  return 0;
}

int run_construct(int n, const std::string& ring_width, bool as_json,
                  bool pretty) {
  const int width = ring_width == "auto" ? 0 : std::stoi(ring_width);
  const CatalogBoard board = construct_max_depth(BoardSize(n), width);
  if (as_json) {
    std::cout << trace_to_json(closure(board.occupied)).dump(2) << "\n";
  } else {
    std::cout << render_board(board.occupied, board.labels, pretty) << "\n";
  }
  return 0;
}

int run_search(int n, bool exhaustive, bool allow_large, std::uint64_t samples,
               std::uint64_t seed, const std::string& scope, int threads,
               bool no_symmetry) {
  SearchOptions options;
  options.scope = scope_from_string(scope);
  options.use_symmetry = !no_symmetry;
  options.threads = threads;
  options.allow_large = allow_large;
  const BoardSize size(n);
  if (exhaustive && n >= 5) {
    options.on_progress = [](std::uint64_t done, std::uint64_t total) {
      std::cerr << "\rscanned " << done << "/" << total << " ("
                << 100 * done / total << "%)"
                << (done == total ? "\n" : "") << std::flush;
    };
  }
  const SearchReport report =
      exhaustive ? max_depth_exhaustive(size, options)
                 : max_depth_sampled(size, samples, seed, options);
  std::cout << report_to_json(report).dump(2) << "\n";
  return 0;
}

bool report_suite_line(const std::string& line, bool ok) {
  std::cout << (ok ? "ok   " : "FAIL ") << line << "\n";
  return ok;
}

int verify_constructions(int n_max) {
  bool ok = true;
  for (const CatalogBoard& board : catalog()) {
    try {
      verify_board(board);
      ok &= report_suite_line(board.name + " closure matches its labels (depth " +
                                  std::to_string(board.expected_depth) + ")",
                              true);
    } catch (const ConstructionError& e) {
      ok &= report_suite_line(e.what(), false);
    }
  }
  const auto same = [](const CatalogBoard& a, const CatalogBoard& b) {
    return a.occupied == b.occupied && a.labels == b.labels &&
           a.expected_depth == b.expected_depth;
  };
  try {
    ok &= report_suite_line(
        "wrap_ring(board2, 2) reproduces board9",
        same(wrap_ring(*find_catalog_board("board2"), 2),
             *find_catalog_board("board9")));
    ok &= report_suite_line(
        "wrap_ring(boardS, 2) reproduces board10",
        same(wrap_ring(*find_catalog_board("boardS"), 2),
             *find_catalog_board("board10")));
    for (int n = 5; n <= n_max; ++n) {
      const CatalogBoard built = construct_max_depth(BoardSize(n));
      ok &= report_suite_line("construct n=" + std::to_string(n) + " (" +
                                  built.name + ") spans with depth " +
                                  std::to_string(built.expected_depth),
                              built.expected_depth == 2 * n);
    }
  } catch (const ConstructionError& e) {
    ok &= report_suite_line(e.what(), false);
  }
  return ok ? 0 : 1;
}

int verify_laws(int n_max, std::uint64_t samples, std::uint64_t seed) {
  bool ok = true;
  for (int n = 1; n <= n_max; ++n) {
    const BoardSize size(n);
    const bool exhaustive = n <= 3;
    const auto violations =
        closure_law_sweep(size, exhaustive ? SweepMode::Exhaustive : SweepMode::Sampled,
                          samples, seed);
    std::string line = "laws n=" + std::to_string(n) +
                       (exhaustive ? " exhaustive" : " sampled x" + std::to_string(samples)) +
                       ": " + std::to_string(violations.size()) + " violations";
    ok &= report_suite_line(line, violations.empty());
    for (const LawViolation& v : violations) {
      std::cout << "violated " << v.law << " by\n" << render_board(v.a) << "\n";
      if (v.b) std::cout << "with\n" << render_board(*v.b) << "\n";
    }
  }
  return ok ? 0 : 1;
}

int verify_sweep(const std::string& suite, int n_max, std::uint64_t samples,
                 std::uint64_t seed) {
  bool ok = true;
  for (int n = 1; n <= n_max; ++n) {
    const BoardSize size(n);
    const bool exhaustive = n <= 4;
    const SweepMode mode = exhaustive ? SweepMode::Exhaustive : SweepMode::Sampled;
    const std::uint64_t examined =
        exhaustive ? (1ull << size.area()) : samples;
    std::string line = suite + " n=" + std::to_string(n) +
                       (exhaustive ? " exhaustive, " : " sampled, ") +
                       std::to_string(examined) + " boards: ";
    if (suite == "bounds") {
      const auto violations = bound_sweep(size, mode, samples, seed);
      ok &= report_suite_line(line + std::to_string(violations.size()) + " violations",
                              violations.empty());
      for (const BoundViolation& v : violations) {
        std::cout << "depth " << v.observed_depth << " exceeds bound " << v.bound
                  << " (" << (v.spanning ? "spanning" : "non-spanning") << ") on\n"
                  << render_board(v.board) << "\n";
      }
    } else {
      const auto offenders = lemma1_sweep(size, mode, samples, seed);
      ok &= report_suite_line(line + std::to_string(offenders.size()) + " violations",
                              offenders.empty());
      for (const CellSet& k : offenders) {
        std::cout << "proper closed set missing fewer than 4 cells or lines:\n"
                  << render_board(k) << "\n";
      }
    }
  }
  return ok ? 0 : 1;
}

int run_verify(const std::string& suite, int n_max, std::uint64_t samples,
               std::uint64_t seed) {
  if (suite == "constructions") return verify_constructions(n_max);
  if (suite == "laws") {
    return verify_laws(n_max, samples > 0 ? samples : 1000, seed);
  }
  return verify_sweep(suite, n_max, samples > 0 ? samples : 100000, seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bingo closure toolkit: closures and depth of cell sets, the "
               "reference board catalog, spiral max-depth constructions, "
               "exhaustive/sampled depth search, and verification sweeps"};
  app.require_subcommand(1);

  std::string board_path;
  bool as_json = false;
  bool pretty = false;

  CLI::App* closure_cmd =
      app.add_subcommand("closure", "Print the closure of a board");
  closure_cmd->add_option("--board", board_path, "board file ('-' = stdin)")
      ->required();
  closure_cmd->add_flag("--json", as_json, "emit the full trace as JSON");

  CLI::App* depth_cmd =
      app.add_subcommand("depth", "Print the depth of a board");
  depth_cmd->add_option("--board", board_path, "board file ('-' = stdin)")
      ->required();

  std::string format = "ascii";
  CLI::App* trace_cmd =
      app.add_subcommand("trace", "Print the closure trace of a board");
  trace_cmd->add_option("--board", board_path, "board file ('-' = stdin)")
      ->required();
  trace_cmd->add_option("--format", format, "ascii or json")
      ->check(CLI::IsMember({"ascii", "json"}));
  trace_cmd->add_flag("--pretty", pretty, "render occupied cells as bullets");

  bool list_boards = false;
  bool with_labels = false;
  std::string show_name;
  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "List or print the reference boards");
  CLI::Option* list_opt =
      catalog_cmd->add_flag("--list", list_boards, "list board names");
  CLI::Option* show_opt =
      catalog_cmd->add_option("--show", show_name, "print the named board");
  list_opt->excludes(show_opt);
  catalog_cmd->add_flag("--labels", with_labels, "include step labels")
      ->needs(show_opt);
  catalog_cmd->add_flag("--pretty", pretty, "render occupied cells as bullets")
      ->needs(show_opt);

  int construct_n = 0;
  std::string ring_width = "auto";
  CLI::App* construct_cmd = app.add_subcommand(
      "construct", "Build a verified spanning board of depth 2n");
  construct_cmd->add_option("--n", construct_n, "board side, 5..11")
      ->required()
      ->check(CLI::Range(5, 11));
  construct_cmd->add_option("--ring-width", ring_width, "auto, 1 or 2")
      ->check(CLI::IsMember({"auto", "1", "2"}));
  construct_cmd->add_flag("--json", as_json, "emit the closure trace as JSON");
  construct_cmd->add_flag("--pretty", pretty, "render occupied cells as bullets");

  int search_n = 0;
  bool exhaustive = false;
  bool allow_large = false;
  bool no_symmetry = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string scope = "all";
  int threads = 0;
  CLI::App* search_cmd =
      app.add_subcommand("search", "Search boards for the maximum depth");
  search_cmd->add_option("--n", search_n, "board side, 1..11")
      ->required()
      ->check(CLI::Range(1, 11));
  CLI::Option* exhaustive_opt = search_cmd->add_flag(
      "--exhaustive", exhaustive, "enumerate every subset (n <= 5)");
  search_cmd->add_flag("--allow-large", allow_large,
                       "permit the 2^25-board n=5 exhaustive scan");
  CLI::Option* sample_opt =
      search_cmd->add_option("--sample", samples, "number of seeded random boards");
  exhaustive_opt->excludes(sample_opt);
  search_cmd->add_option("--seed", seed, "sampling seed (default 0)");
  search_cmd->add_option("--scope", scope, "all, spanning or nonspanning")
      ->check(CLI::IsMember({"all", "spanning", "nonspanning"}));
  search_cmd->add_option("--threads", threads,
                         "worker threads (default: BINGO_THREADS or hardware)");
  search_cmd->add_flag("--no-symmetry", no_symmetry,
                       "disable canonical-form skipping");

  std::string suite;
  int n_max = 0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification sweep");
  verify_cmd->add_option("--suite", suite, "lemma1, bounds, constructions or laws")
      ->required()
      ->check(CLI::IsMember({"lemma1", "bounds", "constructions", "laws"}));
  verify_cmd->add_option("--n-max", n_max, "largest board side to sweep")
      ->check(CLI::Range(1, 11));
  verify_cmd->add_option("--sample", samples,
                         "boards per sampled side (default: suite-specific)");
  verify_cmd->add_option("--seed", seed, "sampling seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (closure_cmd->parsed()) return run_closure(board_path, as_json);
    if (depth_cmd->parsed()) return run_depth(board_path);
    if (trace_cmd->parsed()) return run_trace(board_path, format, pretty);
    if (catalog_cmd->parsed()) return run_catalog(show_name, with_labels, pretty);
    if (construct_cmd->parsed()) {
      return run_construct(construct_n, ring_width, as_json, pretty);
    }
    if (search_cmd->parsed()) {
      if (!exhaustive && sample_opt->count() == 0) {
        std::cerr << "search needs --exhaustive or --sample K\n";
        return 2;
      }
      return run_search(search_n, exhaustive, allow_large, samples, seed, scope,
                        threads, no_symmetry);
    }
    if (verify_cmd->parsed()) {
      if (n_max == 0) n_max = suite == "constructions" ? 11 : 8;
      return run_verify(suite, n_max, samples, seed);
    }
  } catch (const ConstructionError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
