#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ssat/core.hpp"

namespace ssat {

/// Satisfying assignments of an instance, kept sorted and unique.
class SolutionSet {
public:
  explicit SolutionSet(unsigned width, std::vector<std::uint64_t> members = {});

  unsigned width() const noexcept { return width_; }
  const std::vector<std::uint64_t> &members() const noexcept {
    return members_;
  }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::uint64_t bits) const noexcept;

  friend bool operator==(const SolutionSet &, const SolutionSet &) = default;

private:
  unsigned width_;
  std::vector<std::uint64_t> members_;
};

/// Rows { complement(x) : x not in S } in ascending order. The result is
/// satisfied by exactly the members of S.
SsatInstance build_with_solutions(unsigned width, const SolutionSet &solutions);

/// Appends `duplicates` rows drawn uniformly with replacement from `base`,
/// then optionally shuffles the whole row list. Both steps use `seed`.
SsatInstance duplicate_and_shuffle(const SsatInstance &base,
                                   std::uint64_t duplicates,
                                   std::uint64_t seed, bool shuffle);

/// At most one solution, padded with duplicated rows and disordered.
struct ExtremeSpec {
  unsigned width = 1;
  std::optional<std::uint64_t> chosen_solution; // none: a blocked board
  std::uint64_t duplicates = 0;
  std::uint64_t shuffle_seed = 0;
  bool shuffle = true;
};

SsatInstance extreme_instance(const ExtremeSpec &spec);

inline constexpr unsigned kDefaultOracleCap = 20;

/// Exact solution set by enumerating all 2^n assignments and checking every
/// clause literally. Independent of the complement-lookup path used by
/// evaluate(); may split the enumeration across threads.
SolutionSet brute_force_solution_set(const SsatInstance &inst,
                                     unsigned oracle_cap = kDefaultOracleCap);

/// Chance of hitting the single solution after f failed candidates drawn
/// from the rows (each failure removes two codes).
double prob_ss_inner(unsigned width, std::uint64_t f);

/// Same, for f failed candidates drawn from the search space.
double prob_ss_outer(unsigned width, std::uint64_t f);

struct PolySubsetProbability {
  double in_subset;       // |C| / 2^n with |C| = n^k
  double solution_in_subset; // n^k / 2^(2n)
};

PolySubsetProbability prob_poly_subset(unsigned width, double k);

} // namespace ssat
