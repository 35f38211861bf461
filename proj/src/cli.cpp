#include "ssat/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ssat/bench.hpp"
#include "ssat/error.hpp"
#include "ssat/generators.hpp"
#include "ssat/io.hpp"
#include "ssat/solvers.hpp"

namespace ssat {

namespace {

std::uint64_t parse_u64(const std::string &text, const std::string &what) {
  std::uint64_t value = 0;
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw Error(Errc::InvalidArgument,
                "bad " + what + " '" + text + "': expected an unsigned integer");
  return value;
}

std::vector<std::string> split_list(const std::string &text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      items.push_back(item);
  return items;
}

/// Writes to `path`, or to `fallback` when no path was given.
template <typename Fn>
void with_output(const std::string &path, std::ostream &fallback, Fn &&fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw Error(Errc::IoError, "cannot write " + path);
  fn(file);
  if (!file)
    throw Error(Errc::IoError, "write to " + path + " failed");
}

struct SolveArgs {
  std::string input;
  std::string format = "rows";
  std::string cnf_mode = "strict";
  std::string algorithm = "inner-witness";
  std::optional<std::string> seed;
  bool witness = false;
  std::string dump_board;
};

int cmd_solve(const SolveArgs &a, std::ostream &out, std::ostream &err) {
  SsatInstance inst = [&]() -> SsatInstance {
    if (a.format == "rows")
      return parse_rows_file(a.input);
    const CnfMode mode =
        a.cnf_mode == "expand" ? CnfMode::Expand : CnfMode::StrictSsat;
    return std::get<SsatInstance>(parse_cnf_file(a.input, mode));
  }();

  std::uint64_t seed = 0;
  if (a.seed) {
    seed = parse_u64(*a.seed, "--seed");
  } else if (const char *env = std::getenv("SSAT_SEED")) {
    seed = parse_u64(env, "SSAT_SEED");
  }

  const SolverReport report =
      run_algorithm(parse_algorithm(a.algorithm), inst, seed, a.witness);
  verify_report(inst, report);
  out << report_to_json(report) << '\n';

  if (!a.dump_board.empty()) {
    if (report.board)
      dump_board_file(*report.board, a.dump_board);
    else
      err << "warning: " << report.algorithm
          << " builds no pair table; --dump-board ignored\n";
  }
  return report.verdict == Verdict::Unsat ? kExitUnsat : kExitSat;
}

struct GenArgs {
  unsigned n = 0;
  std::string solutions;
  std::uint64_t duplicates = 0;
  std::optional<std::string> shuffle_seed;
  std::string out;
  bool reveal = false;
};

int cmd_gen(const GenArgs &a, std::ostream &out, std::ostream &err) {
  check_width(a.n);
  std::vector<std::uint64_t> members;
  if (a.solutions != "none")
    for (const std::string &item : split_list(a.solutions))
      members.push_back(parse_u64(item, "solution"));
  const SolutionSet solutions(a.n, members);

  SsatInstance inst = build_with_solutions(a.n, solutions);
  if (a.duplicates > 0 || a.shuffle_seed) {
    const std::uint64_t seed =
        a.shuffle_seed ? parse_u64(*a.shuffle_seed, "--shuffle-seed") : 0;
    inst = duplicate_and_shuffle(inst, a.duplicates, seed,
                                 a.shuffle_seed.has_value());
  }
  with_output(a.out, out, [&](std::ostream &o) { write_rows(o, inst); });

  if (a.reveal) {
    err << "m=" << inst.size() << "\nsolutions=";
    if (solutions.empty())
      err << "none";
    for (std::size_t i = 0; i < solutions.size(); ++i)
      err << (i ? "," : "") << solutions.members()[i] << " ("
          << to_bit_string(solutions.members()[i], a.n) << ")";
    err << '\n';
  }
  return 0;
}

struct BenchArgs {
  unsigned n = 10;
  std::uint64_t trials = 100;
  std::string scenario = "unique";
  std::uint64_t duplicates = 0;
  std::string algorithms = "outer-random";
  std::uint64_t seed_base = 0;
  unsigned jobs = 1;
  std::string out;
};

int cmd_bench(const BenchArgs &a, std::ostream &out, std::ostream &) {
  BenchConfig config;
  config.width = a.n;
  config.trials = a.trials;
  config.scenario = parse_scenario(a.scenario);
  config.duplicates = a.duplicates;
  config.algorithms.clear();
  for (const std::string &name : split_list(a.algorithms))
    config.algorithms.push_back(parse_algorithm(name));
  config.seed_base = a.seed_base;
  config.jobs = a.jobs;

  const auto records = run_bench(config);
  const auto summary = summarize(records);
  with_output(a.out, out, [&](std::ostream &o) {
    write_bench_csv(o, records);
    write_bench_summary(o, summary);
  });
  if (!a.out.empty())
    write_bench_summary(out, summary);
  return 0;
}

struct ProbArgs {
  unsigned n = 10;
  std::string mode = "outer";
  std::optional<std::uint64_t> f_max;
  std::string out;
};

int cmd_prob(const ProbArgs &a, std::ostream &out, std::ostream &err) {
  const ProbMode mode = parse_prob_mode(a.mode);
  const ProbTable table = prob_table(a.n, mode, a.f_max);
  with_output(a.out, out,
              [&](std::ostream &o) { write_prob_csv(o, mode, table); });
  if (table.omitted > 0)
    err << "warning: " << table.omitted
        << " arguments outside the domain were omitted\n";
  return 0;
}

struct ConvertArgs {
  std::string input;
  std::string mode = "expand";
  std::string out;
};

int cmd_convert(const ConvertArgs &a, std::ostream &out, std::ostream &) {
  const CnfMode mode = a.mode == "strict"    ? CnfMode::StrictSsat
                       : a.mode == "ternary" ? CnfMode::Ternary
                                             : CnfMode::Expand;
  const CnfResult result = parse_cnf_file(a.input, mode);
  with_output(a.out, out, [&](std::ostream &o) {
    if (const auto *inst = std::get_if<SsatInstance>(&result)) {
      write_rows(o, *inst);
      return;
    }
    const auto &sat = std::get<SatInstance>(result);
    const auto matrix = to_ternary_matrix(sat);
    o << "ternary " << sat.width() << ' ' << matrix.size() << '\n';
    for (const TernaryClause &clause : matrix)
      o << clause.to_string() << '\n';
  });
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Fixed-width SAT (SSAT) solvers, generators and benchmarks"};
  app.name("ssat");
  app.require_subcommand(1);

  const std::vector<std::string> algorithms{
      "quick", "inner-board", "inner-witness", "outer-random", "binary-search"};

  SolveArgs solve;
  auto *solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("--input", solve.input, "Instance file")->required();
  solve_cmd->add_option("--format", solve.format, "Input format")
      ->check(CLI::IsMember({"rows", "cnf"}));
  solve_cmd
      ->add_option("--cnf-mode", solve.cnf_mode,
                   "strict: clauses must be full width; expand: pad them")
      ->check(CLI::IsMember({"strict", "expand"}));
  solve_cmd->add_option("--algorithm", solve.algorithm, "Solver")
      ->check(CLI::IsMember(algorithms));
  solve_cmd->add_option("--seed", solve.seed,
                        "RNG seed (default: $SSAT_SEED, else 0)");
  solve_cmd->add_flag("--witness", solve.witness,
                      "Search for a witness even when the row count decides");
  solve_cmd->add_option("--dump-board", solve.dump_board,
                        "Write the final pair table to this file");

  GenArgs gen;
  auto *gen_cmd =
      app.add_subcommand("gen", "Generate an instance with given solutions");
  gen_cmd->add_option("--n", gen.n, "Variable count")->required();
  gen_cmd->add_option("--solutions", gen.solutions,
                      "Comma-separated solutions, or 'none'")
      ->required();
  gen_cmd->add_option("--duplicates", gen.duplicates,
                      "Extra rows drawn from the base rows");
  gen_cmd->add_option("--shuffle-seed", gen.shuffle_seed,
                      "Shuffle the rows with this seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");
  gen_cmd->add_flag("--reveal", gen.reveal,
                    "Print m and the solution set to stderr");

  BenchArgs bench;
  auto *bench_cmd = app.add_subcommand("bench", "Iteration-count benchmark");
  bench_cmd->add_option("--n", bench.n, "Variable count");
  bench_cmd->add_option("--trials", bench.trials, "Trials per algorithm");
  bench_cmd->add_option("--scenario", bench.scenario, "unique | none")
      ->check(CLI::IsMember({"unique", "none"}));
  bench_cmd->add_option("--duplicates", bench.duplicates,
                        "Duplicated rows per instance");
  bench_cmd->add_option("--algorithms", bench.algorithms,
                        "Comma-separated solver list");
  bench_cmd->add_option("--seed-base", bench.seed_base,
                        "Trial t uses seed seed-base + t");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench.out, "CSV file (default: stdout)");

  ProbArgs prob;
  auto *prob_cmd =
      app.add_subcommand("prob", "Tabulate selection probabilities");
  prob_cmd->add_option("--n", prob.n, "Variable count");
  prob_cmd->add_option("--mode", prob.mode, "inner | outer | poly")
      ->check(CLI::IsMember({"inner", "outer", "poly"}));
  prob_cmd->add_option("--f-max", prob.f_max,
                       "Largest f (or k in poly mode)");
  prob_cmd->add_option("--out", prob.out, "CSV file (default: stdout)");

  ConvertArgs convert;
  auto *convert_cmd =
      app.add_subcommand("convert", "Translate a DIMACS CNF file");
  convert_cmd->add_option("--input", convert.input, "CNF file")->required();
  convert_cmd->add_option("--mode", convert.mode, "strict | expand | ternary")
      ->check(CLI::IsMember({"strict", "expand", "ternary"}));
  convert_cmd->add_option("--out", convert.out, "Output file");

  std::vector<const char *> argv{"ssat"};
  for (const std::string &arg : args)
    argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*solve_cmd)
      return cmd_solve(solve, out, err);
    if (*gen_cmd)
      return cmd_gen(gen, out, err);
    if (*bench_cmd)
      return cmd_bench(bench, out, err);
    if (*prob_cmd)
      return cmd_prob(prob, out, err);
    if (*convert_cmd)
      return cmd_convert(convert, out, err);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

} // namespace ssat
