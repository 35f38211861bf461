#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssat/core.hpp"
#include "ssat/solvers.hpp"

namespace ssat {

enum class Algorithm { Quick, InnerBoard, InnerWitness, OuterRandom, BinarySearch };

std::string_view algorithm_name(Algorithm a) noexcept;
Algorithm parse_algorithm(std::string_view name);

/// Runs one solver. `quick` answers from (n, m) alone when it can and falls
/// back to inner-witness otherwise, or always when `force_witness` is set.
SolverReport run_algorithm(Algorithm algorithm, const SsatInstance &inst,
                           std::uint64_t seed, bool force_witness = false);

enum class Scenario { Unique, None };

Scenario parse_scenario(std::string_view name);

struct BenchConfig {
  unsigned width = 10;
  std::uint64_t trials = 100;
  Scenario scenario = Scenario::Unique;
  std::uint64_t duplicates = 0;
  std::vector<Algorithm> algorithms{Algorithm::OuterRandom};
  std::uint64_t seed_base = 0;
  unsigned jobs = 1;
};

struct BenchRecord {
  std::string algorithm;
  unsigned n = 0;
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::uint64_t seed = 0;
  std::string verdict;
  std::uint64_t iterations = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t wall_ns = 0;
};

struct BenchSummary {
  std::string algorithm;
  std::uint64_t runs = 0;
  std::uint64_t min_iterations = 0;
  double avg_iterations = 0;
  std::uint64_t max_iterations = 0;
};

/// Instance for trial seed `seed`: the extreme construction with a uniformly
/// chosen solution (unique scenario) or none, `duplicates` extra rows, and a
/// seeded shuffle. `sorted` skips duplication and shuffling.
SsatInstance bench_instance(const BenchConfig &config, std::uint64_t seed,
                            bool sorted = false);

/// One record per (trial, algorithm), in trial order then algorithm order.
/// Trial t uses seed seed_base + t for both its instance and its solver.
std::vector<BenchRecord> run_bench(const BenchConfig &config);

std::vector<BenchSummary> summarize(const std::vector<BenchRecord> &records);

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,n,m,r,seed,verdict,iterations,evaluations,wall_ns";

void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records);

/// Summary block as '#'-prefixed lines so CSV readers can skip it.
void write_bench_summary(std::ostream &out,
                         const std::vector<BenchSummary> &summary);

enum class ProbMode { Inner, Outer, Poly };

ProbMode parse_prob_mode(std::string_view name);

struct ProbPoint {
  std::uint64_t x = 0; // f, or k in poly mode
  double probability = 0;
};

struct ProbTable {
  std::vector<ProbPoint> points;
  std::uint64_t omitted = 0; // arguments outside the formula's domain
};

/// Inner/outer: f = 0..f_max (default: the whole domain). Poly:
/// k = 1..f_max (default n), probability n^k / 2^(2n).
ProbTable prob_table(unsigned width, ProbMode mode,
                     std::optional<std::uint64_t> f_max);

void write_prob_csv(std::ostream &out, ProbMode mode, const ProbTable &table);

} // namespace ssat
