#pragma once

// Fixed-width clause model: every clause of an instance mentions all n
// variables x_{n-1} .. x_0 exactly once, so a clause is an n-bit code with
// bit i set iff x_i appears as a positive literal.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ssat {

inline constexpr unsigned kMaxWidth = 63;

/// Mask with the low `width` bits set.
constexpr std::uint64_t width_mask(unsigned width) noexcept {
  return width >= 64 ? ~std::uint64_t{0}
                     : (std::uint64_t{1} << width) - 1;
}

/// 2^width as an unsigned count.
constexpr std::uint64_t space_size(unsigned width) noexcept {
  return std::uint64_t{1} << width;
}

void check_width(unsigned width);

/// One fixed-width clause, as an n-bit code.
struct RowCode {
  std::uint64_t bits = 0;
  unsigned width = 0;

  friend bool operator==(const RowCode &, const RowCode &) = default;
};

/// A truth assignment to x_{n-1} .. x_0; bit i is the value of x_i.
struct Assignment {
  std::uint64_t bits = 0;
  unsigned width = 0;

  friend bool operator==(const Assignment &, const Assignment &) = default;
};

RowCode make_row(std::uint64_t bits, unsigned width);
Assignment make_assignment(std::uint64_t bits, unsigned width);

RowCode complement(RowCode code) noexcept;
Assignment complement(Assignment x) noexcept;

/// Reinterprets a code as the assignment with the same bit string.
constexpr Assignment as_assignment(RowCode code) noexcept {
  return {code.bits, code.width};
}
constexpr RowCode as_row(Assignment x) noexcept { return {x.bits, x.width}; }

/// Renders bits MSB first (x_{n-1} leftmost), e.g. "011".
std::string to_bit_string(std::uint64_t bits, unsigned width);
inline std::string to_string(RowCode code) {
  return to_bit_string(code.bits, code.width);
}
inline std::string to_string(Assignment x) {
  return to_bit_string(x.bits, x.width);
}

bool is_blocking_pair(RowCode a, RowCode b);

struct Literal {
  unsigned var = 0; // index i of x_i
  bool positive = true;

  friend bool operator==(const Literal &, const Literal &) = default;
};

using Clause = std::vector<Literal>;

/// Encodes a clause that mentions each of the n variables exactly once.
RowCode translate_row(std::span<const Literal> clause, unsigned width);

/// Inverse of translate_row; literals are listed x_{n-1} first.
Clause untranslate(RowCode code);

/// Immutable SSAT instance: n plus the rows in input order, duplicates kept.
class SsatInstance {
public:
  SsatInstance(unsigned width, std::vector<std::uint64_t> rows);
  SsatInstance(unsigned width, std::span<const RowCode> rows);

  unsigned width() const noexcept { return width_; }
  std::size_t size() const noexcept { return rows_.size(); }
  RowCode row(std::size_t i) const noexcept { return {rows_[i], width_}; }
  std::span<const std::uint64_t> row_bits() const noexcept { return rows_; }

  /// True iff some row equals `bits`.
  bool contains(std::uint64_t bits) const noexcept;

  friend bool operator==(const SsatInstance &a, const SsatInstance &b) {
    return a.width_ == b.width_ && a.rows_ == b.rows_;
  }

private:
  void build_index();

  unsigned width_;
  std::vector<std::uint64_t> rows_;
  // Presence bitmap over [0, 2^n); only built for small widths.
  std::vector<std::uint64_t> present_;
};

/// Widths up to this value get a presence bitmap for O(1) row lookup.
inline constexpr unsigned kIndexedWidth = 24;

/// SSAT(n,m)(x): 1 iff every row has at least one literal true under x.
/// Uses the blocking law: x fails exactly when complement(x) is a row.
bool evaluate(const SsatInstance &inst, Assignment x);

/// Same function computed by digit matching: every row must agree with x in
/// at least one position. Performs all m*n digit comparisons.
bool evaluate_by_matching(const SsatInstance &inst, Assignment x);

/// A general clause over {0,1,2}: digit 2 marks an absent variable.
class TernaryClause {
public:
  TernaryClause() = default;
  explicit TernaryClause(std::vector<std::uint8_t> digits_by_var);

  unsigned width() const noexcept {
    return static_cast<unsigned>(digits_.size());
  }
  /// Digit of variable x_i.
  std::uint8_t digit(unsigned var) const { return digits_.at(var); }
  std::span<const std::uint8_t> digits() const noexcept { return digits_; }

  bool is_full_width() const noexcept;
  unsigned absent_count() const noexcept;

  /// Requires is_full_width().
  RowCode to_row() const;

  /// MSB first, e.g. "1220" for (x3 v ~x0) over four variables.
  std::string to_string() const;

  friend bool operator==(const TernaryClause &, const TernaryClause &) = default;

private:
  std::vector<std::uint8_t> digits_; // indexed by variable
};

/// General SAT(n, m): clauses may omit variables.
class SatInstance {
public:
  SatInstance(unsigned width, std::vector<Clause> clauses);

  unsigned width() const noexcept { return width_; }
  const std::vector<Clause> &clauses() const noexcept { return clauses_; }

private:
  unsigned width_;
  std::vector<Clause> clauses_;
};

TernaryClause to_ternary(const Clause &clause, unsigned width);
std::vector<TernaryClause> to_ternary_matrix(const SatInstance &sat);

inline constexpr std::size_t kDefaultExpansionCap = std::size_t{1} << 22;

/// Pads each clause with both polarities of every absent variable, using
/// F == F & (v | ~v), producing an equisatisfiable (in fact equivalent)
/// fixed-width instance.
SsatInstance expand_to_ssat(const SatInstance &sat,
                            std::size_t row_cap = kDefaultExpansionCap);

} // namespace ssat
