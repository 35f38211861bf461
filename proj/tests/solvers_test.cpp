#include "ssat/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "ssat/error.hpp"
#include "ssat/io.hpp"
#include "truth_table.hpp"

using namespace ssat;

namespace {

SsatInstance worked() {
  return SsatInstance(3, std::vector<std::uint64_t>{0, 1, 2, 3, 5, 6, 7});
}

SsatInstance blocked(unsigned n) {
  std::vector<std::uint64_t> rows(space_size(n));
  std::iota(rows.begin(), rows.end(), 0);
  return SsatInstance(n, rows);
}

SsatInstance two_rows() {
  return SsatInstance(2, std::vector<std::uint64_t>{0b01, 0b11});
}

} // namespace

TEST(QuickExistence, Examples) {
  const auto r = quick_existence(3, 7);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->verdict, Verdict::SatExists);
  EXPECT_EQ(r->evidence, Evidence::RowCount);
  EXPECT_EQ(r->iterations, 0u);
  EXPECT_FALSE(quick_existence(3, 8));
  EXPECT_TRUE(quick_existence(10, 1));
  EXPECT_THROW(quick_existence(3, 0), Error);
}

TEST(CountedExistence, Examples) {
  const auto r = counted_existence(3, 8, 0, 1);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->verdict, Verdict::SatExists);
  EXPECT_EQ(r->evidence, Evidence::FailureCount);
  EXPECT_FALSE(counted_existence(3, 8, 0, 0));
  EXPECT_TRUE(counted_existence(2, 5, 0, 2));
  EXPECT_THROW(counted_existence(2, 5, 4, 2), Error);

  // Five rows, two of them repeats: three distinct rows leave 11 uncovered,
  // so 00 is satisfying.
  const std::vector<std::uint64_t> rows{0b00, 0b01, 0b10, 0b00, 0b01};
  EXPECT_EQ(truth::truth_table_solutions(2, rows),
            (std::vector<std::uint64_t>{0b00}));
}

TEST(InnerBoard, Examples) {
  const auto b = inner_board_solve(blocked(3));
  EXPECT_EQ(b.verdict, Verdict::Unsat);
  EXPECT_EQ(b.evidence, Evidence::TableFull);
  EXPECT_EQ(b.iterations, 8u);
  EXPECT_EQ(b.evaluations, 0u);
  EXPECT_EQ(b.table_fill, 8u);

  const auto w = inner_board_solve(worked());
  EXPECT_EQ(w.verdict, Verdict::SatExists);
  EXPECT_FALSE(w.witness);
  EXPECT_EQ(w.table_fill, 7u);

  EXPECT_EQ(inner_board_solve(two_rows()).verdict, Verdict::SatExists);
}

TEST(InnerBoard, DuplicatesDoNotFill) {
  const SsatInstance inst(2, std::vector<std::uint64_t>{1, 1, 1, 1, 1, 0, 3});
  const auto r = inner_board_solve(inst);
  EXPECT_EQ(r.verdict, Verdict::SatExists);
  EXPECT_EQ(r.table_fill, 3u);
  EXPECT_EQ(r.iterations, 7u);
}

TEST(InnerWitness, Examples) {
  const auto b = inner_witness_solve(
      SsatInstance(2, std::vector<std::uint64_t>{0b00, 0b11, 0b01, 0b10}));
  EXPECT_EQ(b.verdict, Verdict::Unsat);
  EXPECT_EQ(b.evidence, Evidence::TableFull);
  EXPECT_EQ(b.pair_insertions, 2u);
  EXPECT_EQ(b.table_fill, 4u);
  EXPECT_EQ(b.iterations, 3u);

  const auto w = inner_witness_solve(worked());
  EXPECT_EQ(w.verdict, Verdict::Sat);
  ASSERT_TRUE(w.witness);
  EXPECT_EQ(to_string(*w.witness), "011");

  const auto t = inner_witness_solve(two_rows());
  EXPECT_EQ(t.verdict, Verdict::Sat);
  EXPECT_EQ(t.iterations, 1u);
  EXPECT_EQ(t.witness, (Assignment{0b01, 2}));
}

TEST(InnerWitness, GapWitnessWhenRowsRunOut) {
  // Every row fails, but 01/10 never show up: the table keeps a gap.
  const SsatInstance inst(2, std::vector<std::uint64_t>{0b00, 0b11});
  const auto r = inner_witness_solve(inst);
  EXPECT_EQ(r.verdict, Verdict::Sat);
  EXPECT_EQ(r.evidence, Evidence::TableGap);
  EXPECT_EQ(r.witness, (Assignment{0b01, 2}));
  EXPECT_TRUE(evaluate(inst, *r.witness));
}

TEST(InnerWitness, BlockedBoardsInsertHalfTheSpace) {
  for (unsigned n : {1u, 2u, 3u, 8u, 12u}) {
    const auto r = inner_witness_solve(blocked(n));
    EXPECT_EQ(r.verdict, Verdict::Unsat);
    EXPECT_EQ(r.pair_insertions, space_size(n - 1));
    EXPECT_EQ(r.table_fill, space_size(n));
  }
}

TEST(RandomPermutation, Examples) {
  EXPECT_EQ(random_permutation(1, 0), (std::vector<std::uint64_t>{1, 0}));
  EXPECT_EQ(random_permutation(1, 12345), (std::vector<std::uint64_t>{1, 0}));
  const auto t = random_permutation(3, 42);
  ASSERT_EQ(t.size(), 4u);
  for (std::uint64_t i = 0; i < 3; ++i)
    EXPECT_NE(t[i], i);
  EXPECT_THROW(random_permutation(0, 1), Error);
}

TEST(RandomPermutation, IsDerangedPermutation) {
  for (std::uint64_t mi : {1u, 2u, 3u, 7u, 100u, 4096u})
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto t = random_permutation(mi, seed);
      for (std::uint64_t i = 0; i < mi; ++i)
        ASSERT_NE(t[i], i);
      std::sort(t.begin(), t.end());
      for (std::uint64_t i = 0; i <= mi; ++i)
        ASSERT_EQ(t[i], i);
    }
}

TEST(RandomPermutation, SeedDeterminism) {
  EXPECT_EQ(random_permutation(500, 9), random_permutation(500, 9));
  EXPECT_NE(random_permutation(500, 9), random_permutation(500, 10));
}

TEST(LazyPermutation, MatchesEagerSequence) {
  for (std::uint64_t mi : {1u, 2u, 5u, 63u, 1000u})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto eager = random_permutation(mi, seed);
      LazyPermutation lazy(mi, seed);
      std::vector<std::uint64_t> got;
      while (!lazy.done())
        got.push_back(lazy.next());
      ASSERT_EQ(got, eager) << "mi=" << mi << " seed=" << seed;
    }
}

TEST(OuterRandom, Examples) {
  const auto b = outer_random_solve(blocked(3), 7);
  EXPECT_EQ(b.verdict, Verdict::Unsat);
  EXPECT_EQ(b.evidence, Evidence::Exhaustion);
  EXPECT_EQ(b.iterations, 4u);
  EXPECT_EQ(b.seed, 7u);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto w = outer_random_solve(worked(), seed);
    EXPECT_EQ(w.verdict, Verdict::Sat);
    EXPECT_EQ(w.witness, (Assignment{0b011, 3}));
    EXPECT_LE(w.iterations, 4u);

    const auto t = outer_random_solve(two_rows(), seed);
    ASSERT_TRUE(t.witness);
    EXPECT_TRUE(t.witness->bits == 0b01 || t.witness->bits == 0b11);
  }
}

TEST(OuterRandom, Deterministic) {
  std::mt19937_64 rng(3);
  const SsatInstance inst(9, truth::random_rows(rng, 9, 600));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    EXPECT_EQ(report_to_json(outer_random_solve(inst, seed)),
              report_to_json(outer_random_solve(inst, seed)));
}

TEST(OuterRandom, UnsatUsesExactlyHalfTheSpace) {
  for (unsigned n = 1; n <= 12; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto r = outer_random_solve(blocked(n), seed);
      ASSERT_EQ(r.verdict, Verdict::Unsat);
      ASSERT_EQ(r.iterations, space_size(n - 1));
      ASSERT_EQ(r.evaluations, space_size(n));
    }
}

TEST(BinarySearch, Examples) {
  const auto w = binary_search_solve(worked());
  EXPECT_EQ(w.verdict, Verdict::Sat);
  EXPECT_EQ(w.witness, (Assignment{0b011, 3}));

  for (unsigned n : {1u, 2u, 3u, 6u}) {
    std::vector<std::uint64_t> low(space_size(n) - 1);
    std::iota(low.begin(), low.end(), 1); // gap 0
    const auto a = binary_search_solve(SsatInstance(n, low));
    ASSERT_TRUE(a.witness);
    EXPECT_EQ(a.witness->bits, width_mask(n));

    std::vector<std::uint64_t> high(space_size(n) - 1);
    std::iota(high.begin(), high.end(), 0); // gap 2^n - 1
    const auto b = binary_search_solve(SsatInstance(n, high));
    ASSERT_TRUE(b.witness);
    EXPECT_EQ(b.witness->bits, 0u);
  }
}

TEST(BinarySearch, AllGapsAndCost) {
  for (unsigned n = 1; n <= 10; ++n)
    for (std::uint64_t gap = 0; gap < space_size(n); ++gap) {
      std::vector<std::uint64_t> rows;
      for (std::uint64_t c = 0; c < space_size(n); ++c)
        if (c != gap)
          rows.push_back(c);
      const SsatInstance inst(n, rows);
      const auto r = binary_search_solve(inst);
      ASSERT_EQ(r.verdict, Verdict::Sat);
      ASSERT_EQ(r.witness, (Assignment{~gap & width_mask(n), n}));
      ASSERT_LE(r.iterations, n + 2u);
    }
}

TEST(BinarySearch, Preconditions) {
  auto code_of = [](const SsatInstance &inst) {
    try {
      binary_search_solve(inst);
    } catch (const Error &e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code_of(SsatInstance(3, std::vector<std::uint64_t>{
                                        1, 0, 2, 3, 5, 6, 7})),
            Errc::PreconditionBreach);
  EXPECT_EQ(code_of(blocked(3)), Errc::PreconditionBreach);
  EXPECT_EQ(code_of(SsatInstance(3, std::vector<std::uint64_t>{0, 1, 2})),
            Errc::PreconditionBreach);
}

// Every solver agrees with the truth table, and witnesses satisfy.
TEST(Solvers, AgreeWithTruthTable) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + trial % 8;
    const std::size_t m = 1 + rng() % (2 * space_size(n) + 1);
    const auto rows = truth::random_rows(rng, n, m);
    const SsatInstance inst(n, rows);
    const bool sat = !truth::truth_table_solutions(n, rows).empty();
    const auto board = inner_board_solve(inst);
    const auto witness = inner_witness_solve(inst);
    const auto outer = outer_random_solve(inst, trial);
    ASSERT_EQ(board.satisfiable(), sat);
    ASSERT_EQ(witness.satisfiable(), sat);
    ASSERT_EQ(outer.satisfiable(), sat);
    ASSERT_LE(outer.iterations, space_size(n - 1));
    for (const auto *r : {&witness, &outer})
      if (sat) {
        ASSERT_TRUE(r->witness);
        ASSERT_TRUE(evaluate(inst, *r->witness));
      }
    EXPECT_NO_THROW(verify_report(inst, witness));
  }
}

TEST(VerifyReport, RejectsBadWitness) {
  SolverReport report;
  report.verdict = Verdict::Sat;
  report.witness = Assignment{0b100, 3};
  EXPECT_THROW(verify_report(worked(), report), Error);
  report.witness = Assignment{0b011, 3};
  EXPECT_NO_THROW(verify_report(worked(), report));
}
