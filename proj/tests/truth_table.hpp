#pragma once

// Test-only reference: evaluates each clause literal by literal over an
// explicit vector of variable values. Shares no code with the library.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ssat::truth {

struct TestLiteral {
  unsigned var;
  bool positive;
};

inline std::vector<TestLiteral> clause_of(std::uint64_t row, unsigned width) {
  std::vector<TestLiteral> clause;
  for (unsigned v = 0; v < width; ++v)
    clause.push_back({v, ((row >> v) & 1U) == 1U});
  return clause;
}

inline bool clause_true(const std::vector<TestLiteral> &clause,
                        const std::vector<bool> &values) {
  for (const TestLiteral &lit : clause)
    if (values[lit.var] == lit.positive)
      return true;
  return false;
}

inline std::vector<bool> values_of(std::uint64_t x, unsigned width) {
  std::vector<bool> values(width);
  for (unsigned v = 0; v < width; ++v)
    values[v] = ((x >> v) & 1U) == 1U;
  return values;
}

/// Sorted list of satisfying assignments.
inline std::vector<std::uint64_t>
truth_table_solutions(unsigned width, std::span<const std::uint64_t> rows) {
  std::vector<std::vector<TestLiteral>> clauses;
  for (std::uint64_t row : rows)
    clauses.push_back(clause_of(row, width));
  std::vector<std::uint64_t> solutions;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << width); ++x) {
    const auto values = values_of(x, width);
    bool all = true;
    for (const auto &clause : clauses)
      if (!clause_true(clause, values)) {
        all = false;
        break;
      }
    if (all)
      solutions.push_back(x);
  }
  return solutions;
}

/// General clauses: (var, positive) lists, variables possibly absent.
inline std::vector<std::uint64_t> truth_table_solutions_general(
    unsigned width, const std::vector<std::vector<TestLiteral>> &clauses) {
  std::vector<std::uint64_t> solutions;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << width); ++x) {
    const auto values = values_of(x, width);
    bool all = true;
    for (const auto &clause : clauses)
      all = all && clause_true(clause, values);
    if (all)
      solutions.push_back(x);
  }
  return solutions;
}

/// m rows drawn uniformly with replacement from [0, 2^width).
inline std::vector<std::uint64_t> random_rows(std::mt19937_64 &rng,
                                              unsigned width, std::size_t m) {
  std::uniform_int_distribution<std::uint64_t> pick(
      0, (std::uint64_t{1} << width) - 1);
  std::vector<std::uint64_t> rows(m);
  for (auto &row : rows)
    row = pick(rng);
  return rows;
}

} // namespace ssat::truth
