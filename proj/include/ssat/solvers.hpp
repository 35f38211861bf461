#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ssat/board.hpp"
#include "ssat/core.hpp"
#include "ssat/random.hpp"

namespace ssat {

enum class Verdict {
  Sat,       // a verified witness is attached
  SatExists, // satisfiable, no witness produced
  Unsat,
};

enum class Evidence {
  Witness,       // evaluate(instance, witness) == 1 was checked
  RowCount,      // m < 2^n: the rows cannot cover Sigma^n
  FailureCount,  // m - k2 < 2^n after k1 + k2 failed candidates
  TableGap,      // rows exhausted with an empty pair-table cell
  TableFull,     // every pair-table cell filled: a blocked board
  Exhaustion,    // every candidate pair tested and failed
};

std::string_view verdict_name(Verdict v) noexcept;
std::string_view evidence_name(Evidence e) noexcept;

struct SolverReport {
  std::string algorithm;
  unsigned width = 0;
  std::uint64_t rows = 0;
  Verdict verdict = Verdict::SatExists;
  std::optional<Assignment> witness;
  Evidence evidence = Evidence::RowCount;
  std::uint64_t iterations = 0;
  std::uint64_t evaluations = 0;
  std::optional<std::uint64_t> seed;
  // Pair-table solvers only.
  std::optional<std::uint64_t> table_fill;
  std::optional<std::uint64_t> pair_insertions;
  // Final table, kept so it can be dumped for audit.
  std::shared_ptr<const PairTable> board;

  bool satisfiable() const noexcept { return verdict != Verdict::Unsat; }
};

/// Answers without looking at the rows: m < 2^n leaves some code uncovered.
std::optional<SolverReport> quick_existence(unsigned width, std::uint64_t m);

/// After k1 failures on first-seen rows and k2 failures on repeated rows,
/// at most m - k2 distinct rows exist; fewer than 2^n means satisfiable.
std::optional<SolverReport> counted_existence(unsigned width, std::uint64_t m,
                                              std::uint64_t k1,
                                              std::uint64_t k2);

/// Streams the rows once into a pair table. UNSAT as soon as the table is
/// full; otherwise SAT_EXISTS. Never evaluates the instance.
SolverReport inner_board_solve(const SsatInstance &inst,
                               unsigned table_cap = kDefaultTableCap);

/// Tests each streamed row as a candidate assignment. A failed candidate k
/// eliminates k and complement(k) from the table; a full table is UNSAT,
/// and when rows run out the owner of the first empty cell is the witness.
SolverReport inner_witness_solve(const SsatInstance &inst,
                                 unsigned table_cap = kDefaultTableCap);

/// Permutation of [0, max_index] in which no position i < max_index keeps
/// its own value. Each fixed point is swapped with a uniform pick from the
/// positions after it.
std::vector<std::uint64_t> random_permutation(std::uint64_t max_index,
                                              std::uint64_t seed);

/// Same sequence as random_permutation, produced one cell at a time with
/// memory proportional to the number of displaced cells.
class LazyPermutation {
public:
  LazyPermutation(std::uint64_t max_index, std::uint64_t seed);

  bool done() const noexcept { return next_ > max_index_; }
  /// Final value of the next cell, in index order.
  std::uint64_t next();

private:
  std::uint64_t value_at(std::uint64_t index) const;

  std::uint64_t max_index_;
  std::uint64_t next_ = 0;
  Rng rng_;
  std::unordered_map<std::uint64_t, std::uint64_t> displaced_;
};

/// Walks a random permutation of [0, 2^(n-1)); each value x yields the
/// candidate 0x and its complement 1~x, so 2^(n-1) iterations cover Sigma^n.
SolverReport outer_random_solve(const SsatInstance &inst, std::uint64_t seed);

/// For 2^n - 1 strictly ascending rows with a single missing code g: finds g
/// by bisection on rows[i] == i and returns the verified one of g and
/// complement(g). `iterations` counts row comparisons.
SolverReport binary_search_solve(const SsatInstance &inst);

/// Throws WitnessVerificationFailed unless every witness in the report
/// satisfies the instance.
void verify_report(const SsatInstance &inst, const SolverReport &report);

} // namespace ssat
