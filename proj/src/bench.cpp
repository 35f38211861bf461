#include "ssat/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "ssat/error.hpp"
#include "ssat/generators.hpp"
#include "ssat/random.hpp"

namespace ssat {

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
  case Algorithm::Quick: return "quick";
  case Algorithm::InnerBoard: return "inner-board";
  case Algorithm::InnerWitness: return "inner-witness";
  case Algorithm::OuterRandom: return "outer-random";
  case Algorithm::BinarySearch: return "binary-search";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Quick, Algorithm::InnerBoard,
                      Algorithm::InnerWitness, Algorithm::OuterRandom,
                      Algorithm::BinarySearch})
    if (algorithm_name(a) == name)
      return a;
  throw Error(Errc::InvalidArgument,
              "unknown algorithm '" + std::string(name) + "'");
}

SolverReport run_algorithm(Algorithm algorithm, const SsatInstance &inst,
                           std::uint64_t seed, bool force_witness) {
  switch (algorithm) {
  case Algorithm::Quick:
    if (!force_witness)
      if (auto report = quick_existence(inst.width(), inst.size()))
        return *report;
    return inner_witness_solve(inst);
  case Algorithm::InnerBoard:
    return inner_board_solve(inst);
  case Algorithm::InnerWitness:
    return inner_witness_solve(inst);
  case Algorithm::OuterRandom:
    return outer_random_solve(inst, seed);
  case Algorithm::BinarySearch:
    return binary_search_solve(inst);
  }
  throw Error(Errc::InvalidArgument, "unknown algorithm");
}

Scenario parse_scenario(std::string_view name) {
  if (name == "unique")
    return Scenario::Unique;
  if (name == "none")
    return Scenario::None;
  throw Error(Errc::InvalidArgument,
              "unknown scenario '" + std::string(name) + "'");
}

SsatInstance bench_instance(const BenchConfig &config, std::uint64_t seed,
                            bool sorted) {
  ExtremeSpec spec;
  spec.width = config.width;
  if (config.scenario == Scenario::Unique) {
    Rng rng = make_rng(seed, 2);
    spec.chosen_solution =
        uniform_between(rng, 0, width_mask(config.width));
  }
  spec.duplicates = sorted ? 0 : config.duplicates;
  spec.shuffle = !sorted;
  spec.shuffle_seed = seed;
  return extreme_instance(spec);
}

namespace {

void validate(const BenchConfig &config) {
  check_width(config.width);
  if (config.width > 30)
    throw Error(Errc::CapExceeded, "bench width is limited to 30");
  if (config.algorithms.empty())
    throw Error(Errc::InvalidArgument, "no algorithms selected");
  const bool wants_bisection =
      std::find(config.algorithms.begin(), config.algorithms.end(),
                Algorithm::BinarySearch) != config.algorithms.end();
  if (wants_bisection &&
      (config.scenario != Scenario::Unique || config.duplicates != 0))
    throw Error(Errc::InvalidArgument,
                "binary-search needs the unique scenario without duplicates");
}

std::vector<BenchRecord> run_trial(const BenchConfig &config,
                                   std::uint64_t seed) {
  const SsatInstance inst = bench_instance(config, seed);
  std::optional<SsatInstance> sorted;
  std::vector<BenchRecord> records;
  for (Algorithm algorithm : config.algorithms) {
    const SsatInstance *target = &inst;
    if (algorithm == Algorithm::BinarySearch) {
      if (!sorted)
        sorted = bench_instance(config, seed, true);
      target = &*sorted;
    }
    const auto start = std::chrono::steady_clock::now();
    const SolverReport report = run_algorithm(algorithm, *target, seed);
    const auto stop = std::chrono::steady_clock::now();
    BenchRecord rec;
    rec.algorithm = std::string(algorithm_name(algorithm));
    rec.n = config.width;
    rec.m = target->size();
    rec.r = target == &inst ? config.duplicates : 0;
    rec.seed = seed;
    rec.verdict = std::string(verdict_name(report.verdict));
    rec.iterations = report.iterations;
    rec.evaluations = report.evaluations;
    rec.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
            .count());
    records.push_back(std::move(rec));
  }
  return records;
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchConfig &config) {
  validate(config);
  std::vector<std::vector<BenchRecord>> per_trial(config.trials);
  const unsigned jobs = static_cast<unsigned>(
      std::clamp<std::uint64_t>(config.jobs, 1, std::max<std::uint64_t>(config.trials, 1)));
  if (jobs == 1) {
    for (std::uint64_t t = 0; t < config.trials; ++t)
      per_trial[t] = run_trial(config, config.seed_base + t);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> workers;
      for (unsigned j = 0; j < jobs; ++j)
        workers.emplace_back([&] {
          for (std::uint64_t t; (t = next++) < config.trials;) {
            try {
              per_trial[t] = run_trial(config, config.seed_base + t);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure)
                failure = std::current_exception();
            }
          }
        });
    }
    if (failure)
      std::rethrow_exception(failure);
  }
  std::vector<BenchRecord> records;
  for (auto &trial : per_trial)
    for (auto &rec : trial)
      records.push_back(std::move(rec));
  return records;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord> &records) {
  std::vector<BenchSummary> out;
  std::map<std::string, std::size_t> slot;
  std::vector<long double> sums;
  for (const BenchRecord &rec : records) {
    auto [it, inserted] = slot.try_emplace(rec.algorithm, out.size());
    if (inserted) {
      BenchSummary s;
      s.algorithm = rec.algorithm;
      s.min_iterations = std::numeric_limits<std::uint64_t>::max();
      out.push_back(s);
      sums.push_back(0);
    }
    BenchSummary &s = out[it->second];
    ++s.runs;
    s.min_iterations = std::min(s.min_iterations, rec.iterations);
    s.max_iterations = std::max(s.max_iterations, rec.iterations);
    sums[it->second] += rec.iterations;
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].avg_iterations = static_cast<double>(sums[i] / out[i].runs);
  return out;
}

void write_bench_csv(std::ostream &out,
                     const std::vector<BenchRecord> &records) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRecord &r : records)
    out << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.r << ','
        << r.seed << ',' << r.verdict << ',' << r.iterations << ','
        << r.evaluations << ',' << r.wall_ns << '\n';
}

void write_bench_summary(std::ostream &out,
                         const std::vector<BenchSummary> &summary) {
  out << "# summary,algorithm,runs,min_iterations,avg_iterations,max_iterations\n";
  for (const BenchSummary &s : summary)
    out << "# summary," << s.algorithm << ',' << s.runs << ','
        << s.min_iterations << ',' << std::fixed << std::setprecision(3)
        << s.avg_iterations << std::defaultfloat << ',' << s.max_iterations
        << '\n';
}

ProbMode parse_prob_mode(std::string_view name) {
  if (name == "inner")
    return ProbMode::Inner;
  if (name == "outer")
    return ProbMode::Outer;
  if (name == "poly")
    return ProbMode::Poly;
  throw Error(Errc::InvalidArgument,
              "unknown probability mode '" + std::string(name) + "'");
}

ProbTable prob_table(unsigned width, ProbMode mode,
                     std::optional<std::uint64_t> f_max) {
  check_width(width);
  ProbTable table;
  if (mode == ProbMode::Poly) {
    const std::uint64_t k_max = f_max.value_or(width);
    for (std::uint64_t k = 1; k <= k_max; ++k)
      table.points.push_back(
          {k, prob_poly_subset(width, static_cast<double>(k))
                  .solution_in_subset});
    return table;
  }
  const std::uint64_t domain_max = mode == ProbMode::Inner
                                       ? space_size(width - 1) - 1
                                       : space_size(width) - 1;
  const std::uint64_t last = f_max.value_or(domain_max);
  const std::uint64_t in_domain = std::min(last, domain_max);
  for (std::uint64_t f = 0;; ++f) {
    table.points.push_back({f, mode == ProbMode::Inner
                                   ? prob_ss_inner(width, f)
                                   : prob_ss_outer(width, f)});
    if (f == in_domain)
      break;
  }
  // Arguments past the domain would raise DomainError; they are only counted.
  table.omitted = last - in_domain;
  return table;
}

void write_prob_csv(std::ostream &out, ProbMode mode, const ProbTable &table) {
  out << (mode == ProbMode::Poly ? "k" : "f") << ",probability\n";
  out << std::setprecision(17);
  for (const ProbPoint &p : table.points)
    out << p.x << ',' << p.probability << '\n';
  out << std::defaultfloat;
}

} // namespace ssat
