#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ssat/core.hpp"

namespace ssat {

/// Largest width for which a 2^n-cell table may be allocated.
inline constexpr unsigned kDefaultTableCap = 30;

/// Address of `k` in the pair table. Codes with a clear top bit go to the
/// even cell 2*low(k); codes with the top bit set go to the odd cell
/// 2*(2^(n-1) - low(k)) - 1. A code and its complement always share the
/// pair {2j, 2j+1}.
std::uint64_t address_of(RowCode k) noexcept;

/// The unique code whose address is `address`.
RowCode inverse_address(std::uint64_t address, unsigned width);

/// Unsatisfactory-board table: one cell per code in Sigma^n, filled with the
/// codes seen so far. The board is blocked once every cell is filled.
class PairTable {
public:
  explicit PairTable(unsigned width, unsigned table_cap = kDefaultTableCap);

  unsigned width() const noexcept { return width_; }
  std::uint64_t capacity() const noexcept { return cells_.size(); }
  std::uint64_t filled() const noexcept { return filled_; }
  bool full() const noexcept { return filled_ == cells_.size(); }

  /// Code stored at `address`, or nothing when the cell is empty.
  std::optional<RowCode> at(std::uint64_t address) const;

  /// Stores `k` in its own cell. False if the cell was already filled.
  bool insert(RowCode k);

  /// Stores `k` and its complement in their adjacent cells. False (and no
  /// change) if `k`'s cell was already filled.
  bool insert_pair(RowCode k);

  /// Owner of the lowest empty address, or nothing when the table is full.
  std::optional<RowCode> find_gap() const;

  /// One line per address: "address value", with -1 for an empty cell.
  void dump(std::ostream &out) const;

private:
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

  void require_width(RowCode k) const;

  unsigned width_;
  std::vector<std::uint32_t> cells_;
  std::uint64_t filled_ = 0;
};

} // namespace ssat
