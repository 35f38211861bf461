#include "ssat/generators.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "ssat/error.hpp"
#include "ssat/random.hpp"

namespace ssat {

SolutionSet::SolutionSet(unsigned width, std::vector<std::uint64_t> members)
    : width_(width), members_(std::move(members)) {
  check_width(width_);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (!members_.empty() && members_.back() > width_mask(width_))
    throw Error(Errc::WidthMismatch,
                "solution " + std::to_string(members_.back()) +
                    " does not fit in " + std::to_string(width_) + " bits");
}

bool SolutionSet::contains(std::uint64_t bits) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), bits);
}

SsatInstance build_with_solutions(unsigned width,
                                  const SolutionSet &solutions) {
  check_width(width);
  if (solutions.width() != width)
    throw Error(Errc::WidthMismatch, "solution set width differs");
  if (width > 30)
    throw Error(Errc::CapExceeded,
                "cannot materialize 2^" + std::to_string(width) + " rows");
  const std::uint64_t total = space_size(width);
  if (solutions.size() >= total)
    throw Error(Errc::EmptyInstance,
                "every assignment is a solution; that needs m = 0 rows");
  const std::uint64_t mask = width_mask(width);
  // y is a row iff complement(y) is not a solution; ascending in y.
  std::vector<std::uint64_t> rows;
  rows.reserve(total - solutions.size());
  for (std::uint64_t y = 0; y < total; ++y)
    if (!solutions.contains(~y & mask))
      rows.push_back(y);
  return SsatInstance(width, std::move(rows));
}

SsatInstance duplicate_and_shuffle(const SsatInstance &base,
                                   std::uint64_t duplicates,
                                   std::uint64_t seed, bool shuffle) {
  std::vector<std::uint64_t> rows(base.row_bits().begin(),
                                  base.row_bits().end());
  Rng rng = make_rng(seed, 1);
  rows.reserve(rows.size() + duplicates);
  for (std::uint64_t i = 0; i < duplicates; ++i)
    rows.push_back(base.row_bits()[uniform_between(rng, 0, base.size() - 1)]);
  if (shuffle)
    std::shuffle(rows.begin(), rows.end(), rng);
  return SsatInstance(base.width(), std::move(rows));
}

SsatInstance extreme_instance(const ExtremeSpec &spec) {
  std::vector<std::uint64_t> chosen;
  if (spec.chosen_solution)
    chosen.push_back(*spec.chosen_solution);
  const SsatInstance base =
      build_with_solutions(spec.width, SolutionSet(spec.width, chosen));
  if (spec.duplicates == 0 && !spec.shuffle)
    return base;
  return duplicate_and_shuffle(base, spec.duplicates, spec.shuffle_seed,
                               spec.shuffle);
}

namespace {

// A clause is true when at least one literal is: some bit of x agrees with
// the polarity bit of the row.
bool satisfies_all_clauses(std::span<const std::uint64_t> rows,
                           std::uint64_t mask, std::uint64_t x) {
  for (std::uint64_t row : rows)
    if ((~(row ^ x) & mask) == 0)
      return false;
  return true;
}

void enumerate_range(std::span<const std::uint64_t> rows, std::uint64_t mask,
                     std::uint64_t begin, std::uint64_t end,
                     std::vector<std::uint64_t> &out) {
  for (std::uint64_t x = begin; x < end; ++x)
    if (satisfies_all_clauses(rows, mask, x))
      out.push_back(x);
}

} // namespace

SolutionSet brute_force_solution_set(const SsatInstance &inst,
                                     unsigned oracle_cap) {
  const unsigned width = inst.width();
  if (width > oracle_cap)
    throw Error(Errc::OracleCapExceeded,
                "width " + std::to_string(width) + " exceeds the oracle cap " +
                    std::to_string(oracle_cap));
  const std::uint64_t total = space_size(width);
  const std::uint64_t mask = width_mask(width);
  const auto rows = inst.row_bits();

  const double work = static_cast<double>(total) * inst.size();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      work < 1e7 ? 1u : static_cast<unsigned>(std::min<std::uint64_t>(hw, total));

  std::vector<std::vector<std::uint64_t>> parts(workers);
  if (workers == 1) {
    enumerate_range(rows, mask, 0, total, parts[0]);
  } else {
    std::vector<std::jthread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, w * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        enumerate_range(rows, mask, begin, end, parts[w]);
      });
    }
  }
  // Chunks are ordered, so concatenation is sorted whatever the split.
  std::vector<std::uint64_t> members;
  for (auto &part : parts)
    members.insert(members.end(), part.begin(), part.end());
  return SolutionSet(width, std::move(members));
}

double prob_ss_inner(unsigned width, std::uint64_t f) {
  check_width(width);
  if (f >= space_size(width - 1))
    throw Error(Errc::DomainError,
                "inner probability needs 2f < 2^n, got f = " +
                    std::to_string(f));
  const double space = std::ldexp(1.0, static_cast<int>(width));
  return 1.0 / ((space - 2.0 * static_cast<double>(f)) * space);
}

double prob_ss_outer(unsigned width, std::uint64_t f) {
  check_width(width);
  if (f >= space_size(width))
    throw Error(Errc::DomainError,
                "outer probability needs f < 2^n, got f = " +
                    std::to_string(f));
  const double space = std::ldexp(1.0, static_cast<int>(width));
  return 1.0 / ((space - static_cast<double>(f)) * space);
}

PolySubsetProbability prob_poly_subset(unsigned width, double k) {
  check_width(width);
  if (!(k > 0))
    throw Error(Errc::DomainError, "k must be positive");
  const double subset = std::pow(static_cast<double>(width), k);
  const int n = static_cast<int>(width);
  return {std::ldexp(subset, -n), std::ldexp(subset, -2 * n)};
}

} // namespace ssat
