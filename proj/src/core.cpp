#include "ssat/core.hpp"

#include <algorithm>
#include <bit>

#include "ssat/error.hpp"

namespace ssat {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
  case Errc::MissingVariable: return "MissingVariable";
  case Errc::DuplicateVariable: return "DuplicateVariable";
  case Errc::VariableOutOfRange: return "VariableOutOfRange";
  case Errc::WidthMismatch: return "WidthMismatch";
  case Errc::EmptyInstance: return "EmptyInstance";
  case Errc::BlowupLimit: return "BlowupLimit";
  case Errc::CapExceeded: return "CapExceeded";
  case Errc::OracleCapExceeded: return "OracleCapExceeded";
  case Errc::PreconditionBreach: return "PreconditionBreach";
  case Errc::WitnessVerificationFailed: return "WitnessVerificationFailed";
  case Errc::SyntaxError: return "SyntaxError";
  case Errc::DomainError: return "DomainError";
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

void check_width(unsigned width) {
  if (width < 1 || width > kMaxWidth)
    throw Error(Errc::InvalidArgument,
                "width must be in [1, " + std::to_string(kMaxWidth) +
                    "], got " + std::to_string(width));
}

RowCode make_row(std::uint64_t bits, unsigned width) {
  check_width(width);
  if (bits > width_mask(width))
    throw Error(Errc::WidthMismatch, "code " + std::to_string(bits) +
                                         " does not fit in " +
                                         std::to_string(width) + " bits");
  return {bits, width};
}

Assignment make_assignment(std::uint64_t bits, unsigned width) {
  return as_assignment(make_row(bits, width));
}

RowCode complement(RowCode code) noexcept {
  return {~code.bits & width_mask(code.width), code.width};
}

Assignment complement(Assignment x) noexcept {
  return {~x.bits & width_mask(x.width), x.width};
}

std::string to_bit_string(std::uint64_t bits, unsigned width) {
  std::string out(width, '0');
  for (unsigned i = 0; i < width; ++i)
    if ((bits >> i) & 1U)
      out[width - 1 - i] = '1';
  return out;
}

bool is_blocking_pair(RowCode a, RowCode b) {
  if (a.width != b.width)
    throw Error(Errc::WidthMismatch, "blocking pair of unequal widths");
  return b == complement(a);
}

RowCode translate_row(std::span<const Literal> clause, unsigned width) {
  check_width(width);
  std::uint64_t seen = 0;
  std::uint64_t bits = 0;
  for (const Literal &lit : clause) {
    if (lit.var >= width)
      throw Error(Errc::VariableOutOfRange,
                  "x" + std::to_string(lit.var) + " outside width " +
                      std::to_string(width));
    const std::uint64_t bit = std::uint64_t{1} << lit.var;
    if (seen & bit)
      throw Error(Errc::DuplicateVariable,
                  "x" + std::to_string(lit.var) + " appears twice");
    seen |= bit;
    if (lit.positive)
      bits |= bit;
  }
  if (seen != width_mask(width)) {
    const auto missing = std::countr_zero(~seen & width_mask(width));
    throw Error(Errc::MissingVariable,
                "x" + std::to_string(missing) + " does not appear");
  }
  return {bits, width};
}

Clause untranslate(RowCode code) {
  Clause clause;
  clause.reserve(code.width);
  for (unsigned i = code.width; i-- > 0;)
    clause.push_back({i, ((code.bits >> i) & 1U) != 0});
  return clause;
}

SsatInstance::SsatInstance(unsigned width, std::vector<std::uint64_t> rows)
    : width_(width), rows_(std::move(rows)) {
  check_width(width_);
  if (rows_.empty())
    throw Error(Errc::EmptyInstance, "an instance needs at least one row");
  const std::uint64_t mask = width_mask(width_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] > mask)
      throw Error(Errc::WidthMismatch,
                  "row " + std::to_string(i) + " does not fit in " +
                      std::to_string(width_) + " bits");
  build_index();
}

namespace {

std::vector<std::uint64_t> row_bits_of(unsigned width,
                                       std::span<const RowCode> rows) {
  std::vector<std::uint64_t> bits;
  bits.reserve(rows.size());
  for (const RowCode &r : rows) {
    if (r.width != width)
      throw Error(Errc::WidthMismatch,
                  "row of width " + std::to_string(r.width) +
                      " in an instance of width " + std::to_string(width));
    bits.push_back(r.bits);
  }
  return bits;
}

} // namespace

SsatInstance::SsatInstance(unsigned width, std::span<const RowCode> rows)
    : SsatInstance(width, row_bits_of(width, rows)) {}

void SsatInstance::build_index() {
  if (width_ > kIndexedWidth)
    return;
  present_.assign((space_size(width_) + 63) / 64, 0);
  for (std::uint64_t r : rows_)
    present_[r >> 6] |= std::uint64_t{1} << (r & 63);
}

bool SsatInstance::contains(std::uint64_t bits) const noexcept {
  if (bits > width_mask(width_))
    return false;
  if (!present_.empty())
    return (present_[bits >> 6] >> (bits & 63)) & 1U;
  return std::find(rows_.begin(), rows_.end(), bits) != rows_.end();
}

namespace {

void require_same_width(const SsatInstance &inst, Assignment x) {
  if (x.width != inst.width())
    throw Error(Errc::WidthMismatch,
                "assignment of width " + std::to_string(x.width) +
                    " for an instance of width " +
                    std::to_string(inst.width()));
}

} // namespace

bool evaluate(const SsatInstance &inst, Assignment x) {
  require_same_width(inst, x);
  return !inst.contains(complement(x).bits);
}

bool evaluate_by_matching(const SsatInstance &inst, Assignment x) {
  require_same_width(inst, x);
  bool all_rows_matched = true;
  for (std::uint64_t row : inst.row_bits()) {
    bool matched = false;
    for (unsigned i = 0; i < inst.width(); ++i)
      matched |= ((row >> i) & 1U) == ((x.bits >> i) & 1U);
    all_rows_matched &= matched;
  }
  return all_rows_matched;
}

TernaryClause::TernaryClause(std::vector<std::uint8_t> digits_by_var)
    : digits_(std::move(digits_by_var)) {
  for (std::uint8_t d : digits_)
    if (d > 2)
      throw Error(Errc::InvalidArgument,
                  "ternary digit out of range: " + std::to_string(d));
}

bool TernaryClause::is_full_width() const noexcept {
  return absent_count() == 0;
}

unsigned TernaryClause::absent_count() const noexcept {
  return static_cast<unsigned>(std::count(digits_.begin(), digits_.end(), 2));
}

RowCode TernaryClause::to_row() const {
  if (!is_full_width())
    throw Error(Errc::MissingVariable, "clause " + to_string() +
                                           " does not mention every variable");
  std::uint64_t bits = 0;
  for (unsigned i = 0; i < width(); ++i)
    if (digits_[i] == 1)
      bits |= std::uint64_t{1} << i;
  return make_row(bits, width());
}

std::string TernaryClause::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it)
    out.push_back(static_cast<char>('0' + *it));
  return out;
}

SatInstance::SatInstance(unsigned width, std::vector<Clause> clauses)
    : width_(width), clauses_(std::move(clauses)) {
  check_width(width_);
  if (clauses_.empty())
    throw Error(Errc::EmptyInstance, "an instance needs at least one clause");
  for (Clause &clause : clauses_) {
    if (clause.empty())
      throw Error(Errc::InvalidArgument, "empty clause");
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    Clause unique;
    for (const Literal &lit : clause) {
      if (lit.var >= width_)
        throw Error(Errc::VariableOutOfRange,
                    "x" + std::to_string(lit.var) + " outside width " +
                        std::to_string(width_));
      const std::uint64_t bit = std::uint64_t{1} << lit.var;
      if ((lit.positive ? neg : pos) & bit)
        throw Error(Errc::DuplicateVariable,
                    "x" + std::to_string(lit.var) +
                        " appears with both signs (tautology)");
      if ((lit.positive ? pos : neg) & bit)
        continue;
      (lit.positive ? pos : neg) |= bit;
      unique.push_back(lit);
    }
    clause = std::move(unique);
  }
}

TernaryClause to_ternary(const Clause &clause, unsigned width) {
  std::vector<std::uint8_t> digits(width, 2);
  for (const Literal &lit : clause) {
    if (lit.var >= width)
      throw Error(Errc::VariableOutOfRange,
                  "x" + std::to_string(lit.var) + " outside width " +
                      std::to_string(width));
    digits[lit.var] = lit.positive ? 1 : 0;
  }
  return TernaryClause(std::move(digits));
}

std::vector<TernaryClause> to_ternary_matrix(const SatInstance &sat) {
  std::vector<TernaryClause> matrix;
  matrix.reserve(sat.clauses().size());
  for (const Clause &clause : sat.clauses())
    matrix.push_back(to_ternary(clause, sat.width()));
  return matrix;
}

SsatInstance expand_to_ssat(const SatInstance &sat, std::size_t row_cap) {
  const unsigned width = sat.width();
  std::vector<std::uint64_t> rows;
  for (const Clause &clause : sat.clauses()) {
    std::uint64_t fixed = 0;
    std::uint64_t base = 0;
    for (const Literal &lit : clause) {
      fixed |= std::uint64_t{1} << lit.var;
      if (lit.positive)
        base |= std::uint64_t{1} << lit.var;
    }
    const std::uint64_t free = ~fixed & width_mask(width);
    const int absent = std::popcount(free);
    if (absent >= 63 ||
        rows.size() + (std::uint64_t{1} << absent) > row_cap)
      throw Error(Errc::BlowupLimit,
                  "expansion exceeds the cap of " + std::to_string(row_cap) +
                      " rows");
    // Enumerate every subset of the free variables (ascending).
    std::uint64_t sub = 0;
    do {
      rows.push_back(base | sub);
      sub = (sub - free) & free;
    } while (sub != 0);
  }
  return SsatInstance(width, std::move(rows));
}

} // namespace ssat
