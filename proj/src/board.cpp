#include "ssat/board.hpp"

#include <ostream>

#include "ssat/error.hpp"

namespace ssat {

std::uint64_t address_of(RowCode k) noexcept {
  const std::uint64_t half = space_size(k.width - 1);
  const std::uint64_t low = k.bits & (half - 1);
  if ((k.bits & half) == 0)
    return 2 * low;
  return 2 * (half - low) - 1;
}

RowCode inverse_address(std::uint64_t address, unsigned width) {
  check_width(width);
  if (address >= space_size(width))
    throw Error(Errc::InvalidArgument,
                "address " + std::to_string(address) + " outside table");
  const std::uint64_t half = space_size(width - 1);
  if (address % 2 == 0)
    return {address / 2, width};
  return {half | (half - (address + 1) / 2), width};
}

PairTable::PairTable(unsigned width, unsigned table_cap) : width_(width) {
  check_width(width);
  if (table_cap > 31)
    throw Error(Errc::InvalidArgument, "table cap must not exceed 31");
  if (width > table_cap)
    throw Error(Errc::CapExceeded,
                "width " + std::to_string(width) + " exceeds the table cap " +
                    std::to_string(table_cap));
  cells_.assign(space_size(width), kEmpty);
}

void PairTable::require_width(RowCode k) const {
  if (k.width != width_ || k.bits > width_mask(width_))
    throw Error(Errc::WidthMismatch,
                "code of width " + std::to_string(k.width) +
                    " for a table of width " + std::to_string(width_));
}

std::optional<RowCode> PairTable::at(std::uint64_t address) const {
  const std::uint32_t cell = cells_.at(address);
  if (cell == kEmpty)
    return std::nullopt;
  return RowCode{cell, width_};
}

bool PairTable::insert(RowCode k) {
  require_width(k);
  std::uint32_t &cell = cells_[address_of(k)];
  if (cell != kEmpty)
    return false;
  cell = static_cast<std::uint32_t>(k.bits);
  ++filled_;
  return true;
}

bool PairTable::insert_pair(RowCode k) {
  require_width(k);
  std::uint32_t &cell = cells_[address_of(k)];
  if (cell != kEmpty)
    return false;
  const RowCode partner = complement(k);
  cell = static_cast<std::uint32_t>(k.bits);
  ++filled_;
  // The partner cell can only be filled already if insert() was mixed in.
  std::uint32_t &partner_cell = cells_[address_of(partner)];
  if (partner_cell == kEmpty) {
    partner_cell = static_cast<std::uint32_t>(partner.bits);
    ++filled_;
  }
  return true;
}

std::optional<RowCode> PairTable::find_gap() const {
  if (full())
    return std::nullopt;
  for (std::uint64_t a = 0; a < cells_.size(); ++a)
    if (cells_[a] == kEmpty)
      return inverse_address(a, width_);
  return std::nullopt;
}

void PairTable::dump(std::ostream &out) const {
  for (std::uint64_t a = 0; a < cells_.size(); ++a) {
    out << a << ' ';
    if (cells_[a] == kEmpty)
      out << -1;
    else
      out << cells_[a];
    out << '\n';
  }
}

} // namespace ssat
