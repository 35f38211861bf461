#include "ssat/solvers.hpp"

#include <numeric>

#include "ssat/error.hpp"

namespace ssat {

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
  case Verdict::Sat: return "SAT";
  case Verdict::SatExists: return "SAT_EXISTS";
  case Verdict::Unsat: return "UNSAT";
  }
  return "?";
}

std::string_view evidence_name(Evidence e) noexcept {
  switch (e) {
  case Evidence::Witness: return "witness";
  case Evidence::RowCount: return "row-count";
  case Evidence::FailureCount: return "failure-count";
  case Evidence::TableGap: return "table-gap";
  case Evidence::TableFull: return "table-full";
  case Evidence::Exhaustion: return "exhaustion";
  }
  return "?";
}

namespace {

SolverReport start_report(std::string_view algorithm,
                          const SsatInstance &inst) {
  SolverReport report;
  report.algorithm = std::string(algorithm);
  report.width = inst.width();
  report.rows = inst.size();
  return report;
}

void attach_witness(SolverReport &report, const SsatInstance &inst,
                    Assignment witness) {
  if (!evaluate(inst, witness))
    throw Error(Errc::WitnessVerificationFailed,
                report.algorithm + " produced " + to_string(witness) +
                    ", which does not satisfy the instance");
  report.verdict = Verdict::Sat;
  report.evidence = Evidence::Witness;
  report.witness = witness;
}

} // namespace

std::optional<SolverReport> quick_existence(unsigned width, std::uint64_t m) {
  check_width(width);
  if (m < 1)
    throw Error(Errc::EmptyInstance, "m must be at least 1");
  if (m >= space_size(width))
    return std::nullopt;
  SolverReport report;
  report.algorithm = "quick";
  report.width = width;
  report.rows = m;
  report.verdict = Verdict::SatExists;
  report.evidence = Evidence::RowCount;
  return report;
}

std::optional<SolverReport> counted_existence(unsigned width, std::uint64_t m,
                                              std::uint64_t k1,
                                              std::uint64_t k2) {
  check_width(width);
  if (k1 + k2 > m)
    throw Error(Errc::InvalidArgument,
                "more failed candidates than rows (k1 + k2 > m)");
  if (m - k2 >= space_size(width))
    return std::nullopt;
  SolverReport report;
  report.algorithm = "counted";
  report.width = width;
  report.rows = m;
  report.verdict = Verdict::SatExists;
  report.evidence = Evidence::FailureCount;
  report.iterations = k1 + k2;
  return report;
}

SolverReport inner_board_solve(const SsatInstance &inst, unsigned table_cap) {
  SolverReport report = start_report("inner-board", inst);
  auto table = std::make_shared<PairTable>(inst.width(), table_cap);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    ++report.iterations;
    table->insert(inst.row(i));
    if (table->full()) {
      report.verdict = Verdict::Unsat;
      report.evidence = Evidence::TableFull;
      break;
    }
  }
  if (!table->full()) {
    report.verdict = Verdict::SatExists;
    report.evidence = Evidence::TableGap;
  }
  report.table_fill = table->filled();
  report.board = std::move(table);
  return report;
}

SolverReport inner_witness_solve(const SsatInstance &inst,
                                 unsigned table_cap) {
  SolverReport report = start_report("inner-witness", inst);
  auto table = std::make_shared<PairTable>(inst.width(), table_cap);
  std::uint64_t insertions = 0;
  auto finish = [&] {
    report.table_fill = table->filled();
    report.pair_insertions = insertions;
    report.board = table;
  };

  for (std::size_t i = 0; i < inst.size(); ++i) {
    const RowCode k = inst.row(i);
    ++report.iterations;
    ++report.evaluations;
    if (evaluate(inst, as_assignment(k))) {
      attach_witness(report, inst, as_assignment(k));
      finish();
      return report;
    }
    if (table->insert_pair(k))
      ++insertions;
    if (table->full()) {
      report.verdict = Verdict::Unsat;
      report.evidence = Evidence::TableFull;
      finish();
      return report;
    }
  }

  // Every row failed and was eliminated with its complement, so neither the
  // owner of an empty cell nor its complement is a row.
  const std::optional<RowCode> gap = table->find_gap();
  if (!gap)
    throw Error(Errc::WitnessVerificationFailed,
                "inner-witness: table has no gap after row exhaustion");
  ++report.evaluations;
  attach_witness(report, inst, as_assignment(*gap));
  report.evidence = Evidence::TableGap;
  finish();
  return report;
}

std::vector<std::uint64_t> random_permutation(std::uint64_t max_index,
                                              std::uint64_t seed) {
  if (max_index < 1)
    throw Error(Errc::InvalidArgument, "max_index must be at least 1");
  std::vector<std::uint64_t> table(max_index + 1);
  std::iota(table.begin(), table.end(), std::uint64_t{0});
  Rng rng = make_rng(seed);
  for (std::uint64_t i = 0; i < max_index; ++i) {
    if (table[i] != i)
      continue;
    const std::uint64_t pick = uniform_between(rng, i + 1, max_index);
    std::swap(table[i], table[pick]);
  }
  return table;
}

LazyPermutation::LazyPermutation(std::uint64_t max_index, std::uint64_t seed)
    : max_index_(max_index), rng_(make_rng(seed)) {}

std::uint64_t LazyPermutation::value_at(std::uint64_t index) const {
  const auto it = displaced_.find(index);
  return it == displaced_.end() ? index : it->second;
}

std::uint64_t LazyPermutation::next() {
  if (done())
    throw Error(Errc::PreconditionBreach, "permutation exhausted");
  const std::uint64_t i = next_++;
  std::uint64_t value = value_at(i);
  if (i < max_index_ && value == i) {
    const std::uint64_t pick = uniform_between(rng_, i + 1, max_index_);
    const std::uint64_t swapped = value_at(pick);
    displaced_[pick] = value;
    value = swapped;
  }
  // Cells before next_ are never read again.
  displaced_.erase(i);
  return value;
}

SolverReport outer_random_solve(const SsatInstance &inst,
                                std::uint64_t seed) {
  SolverReport report = start_report("outer-random", inst);
  report.seed = seed;
  const unsigned width = inst.width();
  LazyPermutation order(space_size(width - 1) - 1, seed);
  while (!order.done()) {
    // Top bit clear: the candidate lives in 0 Sigma^(n-1).
    const Assignment candidate{order.next(), width};
    ++report.iterations;
    ++report.evaluations;
    if (evaluate(inst, candidate)) {
      attach_witness(report, inst, candidate);
      return report;
    }
    ++report.evaluations;
    if (evaluate(inst, complement(candidate))) {
      attach_witness(report, inst, complement(candidate));
      return report;
    }
  }
  report.verdict = Verdict::Unsat;
  report.evidence = Evidence::Exhaustion;
  return report;
}

SolverReport binary_search_solve(const SsatInstance &inst) {
  SolverReport report = start_report("binary-search", inst);
  const unsigned width = inst.width();
  if (width > kDefaultTableCap)
    throw Error(Errc::CapExceeded, "binary search needs 2^n - 1 rows");
  const std::uint64_t last = space_size(width) - 2; // index of the final row
  const auto rows = inst.row_bits();
  if (rows.size() != last + 1)
    throw Error(Errc::PreconditionBreach,
                "binary search needs exactly 2^n - 1 = " +
                    std::to_string(last + 1) + " rows, got " +
                    std::to_string(rows.size()));
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i - 1] >= rows[i])
      throw Error(Errc::PreconditionBreach,
                  "rows are not strictly ascending at row " +
                      std::to_string(i));

  auto matches_index = [&](std::uint64_t i) {
    ++report.iterations;
    return rows[i] == i;
  };

  std::uint64_t gap = 0;
  if (!matches_index(0)) {
    gap = 0;
  } else if (matches_index(last)) {
    gap = last + 1;
  } else {
    // rows[lo] == lo and rows[hi] != hi: the gap lies in (lo, hi].
    std::uint64_t lo = 0;
    std::uint64_t hi = last;
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (matches_index(mid))
        lo = mid;
      else
        hi = mid;
    }
    gap = lo + 1;
  }

  const Assignment missing{gap, width};
  ++report.evaluations;
  if (evaluate(inst, missing)) {
    attach_witness(report, inst, missing);
    return report;
  }
  ++report.evaluations;
  if (evaluate(inst, complement(missing))) {
    attach_witness(report, inst, complement(missing));
    return report;
  }
  throw Error(Errc::WitnessVerificationFailed,
              "neither the missing row " + to_string(missing) +
                  " nor its complement satisfies the instance");
}

void verify_report(const SsatInstance &inst, const SolverReport &report) {
  if (report.verdict != Verdict::Sat)
    return;
  if (!report.witness || !evaluate(inst, *report.witness))
    throw Error(Errc::WitnessVerificationFailed,
                report.algorithm + " reported SAT without a valid witness");
}

} // namespace ssat
