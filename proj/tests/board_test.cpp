#include "ssat/board.hpp"

#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "ssat/error.hpp"

using namespace ssat;

TEST(AddressOf, Examples) {
  EXPECT_EQ(address_of({0b000, 3}), 0u);
  EXPECT_EQ(address_of({0b111, 3}), 1u);
  EXPECT_EQ(address_of({0b001, 3}), 2u);
  EXPECT_EQ(address_of({0b110, 3}), 3u);

  EXPECT_EQ(address_of({0b00, 2}), 0u);
  EXPECT_EQ(address_of({0b11, 2}), 1u);
  EXPECT_EQ(address_of({0b01, 2}), 2u);
  EXPECT_EQ(address_of({0b10, 2}), 3u);

  EXPECT_EQ(address_of({0, 1}), 0u);
  EXPECT_EQ(address_of({1, 1}), 1u);
}

TEST(InverseAddress, Examples) {
  EXPECT_EQ(inverse_address(0, 3), (RowCode{0b000, 3}));
  EXPECT_EQ(inverse_address(1, 3), (RowCode{0b111, 3}));
  EXPECT_THROW(inverse_address(8, 3), Error);
}

TEST(AddressOf, BijectionAndAdjacentComplements) {
  for (unsigned n = 1; n <= 12; ++n) {
    std::vector<bool> seen(space_size(n), false);
    for (std::uint64_t c = 0; c < space_size(n); ++c) {
      const RowCode code{c, n};
      const std::uint64_t a = address_of(code);
      ASSERT_LT(a, space_size(n));
      ASSERT_FALSE(seen[a]);
      seen[a] = true;
      ASSERT_EQ(inverse_address(a, n), code);
      ASSERT_EQ(a / 2, address_of(complement(code)) / 2);
      ASSERT_NE(a, address_of(complement(code)));
    }
  }
}

TEST(PairTable, InsertExamples) {
  PairTable table(3);
  EXPECT_EQ(table.capacity(), 8u);
  EXPECT_TRUE(table.insert({0b000, 3}));
  EXPECT_EQ(table.filled(), 1u);
  EXPECT_FALSE(table.insert({0b000, 3}));
  EXPECT_EQ(table.filled(), 1u);
  for (std::uint64_t c = 0; c < 8; ++c)
    table.insert({c, 3});
  EXPECT_EQ(table.filled(), 8u);
  EXPECT_TRUE(table.full());
  EXPECT_FALSE(table.find_gap());
}

TEST(PairTable, InsertPairExamples) {
  PairTable table(3);
  EXPECT_TRUE(table.insert_pair({0b001, 3}));
  EXPECT_EQ(table.at(2), (RowCode{0b001, 3}));
  EXPECT_EQ(table.at(3), (RowCode{0b110, 3}));
  EXPECT_EQ(table.filled(), 2u);
  EXPECT_FALSE(table.insert_pair({0b110, 3}));
  EXPECT_EQ(table.filled(), 2u);
  EXPECT_FALSE(table.at(0));
}

TEST(PairTable, HalfTheCodesFillTheTable) {
  for (unsigned n = 1; n <= 12; ++n) {
    PairTable table(n);
    for (std::uint64_t c = 0; c < space_size(n - 1); ++c)
      ASSERT_TRUE(table.insert_pair({c, n}));
    EXPECT_EQ(table.filled(), space_size(n));
    EXPECT_TRUE(table.full());
  }
}

TEST(PairTable, FindGap) {
  PairTable fresh(4);
  EXPECT_EQ(fresh.find_gap(), (RowCode{0, 4}));

  // Failed candidates of the worked SSAT(3,7) instance: every row except 3
  // and its complement 4 fails evaluation.
  PairTable table(3);
  for (std::uint64_t c : {0, 1, 2, 5, 6, 7})
    table.insert_pair({c, 3});
  const auto gap = table.find_gap();
  ASSERT_TRUE(gap);
  EXPECT_EQ(*gap, (RowCode{0b011, 3}));
}

TEST(PairTable, GapIsLowestEmptyAddress) {
  PairTable table(4);
  table.insert({0, 4});
  table.insert({0b1111, 4});
  table.insert({0b0001, 4});
  // Address 3 belongs to 1110.
  EXPECT_EQ(table.find_gap(), (RowCode{0b1110, 4}));
}

TEST(PairTable, RejectsWrongWidthAndCap) {
  PairTable table(3);
  EXPECT_THROW(table.insert({0, 2}), Error);
  EXPECT_THROW(table.insert_pair({0, 4}), Error);
  try {
    PairTable huge(31);
    FAIL() << "expected CapExceeded";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::CapExceeded);
  }
  EXPECT_THROW(PairTable(10, 8), Error);
}

TEST(PairTable, Dump) {
  PairTable table(2);
  table.insert_pair({0b01, 2});
  std::ostringstream out;
  table.dump(out);
  EXPECT_EQ(out.str(), "0 -1\n1 -1\n2 1\n3 2\n");
}
