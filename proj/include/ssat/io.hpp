#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "ssat/core.hpp"
#include "ssat/solvers.hpp"

namespace ssat {

// Rows format:
//
//   ssat <n> <m>
//   <n characters over {0,1}, x_{n-1} first>   (m lines)
//
// Blank lines and lines starting with 'c' are ignored.

SsatInstance parse_rows(std::istream &in);
SsatInstance parse_rows_file(const std::filesystem::path &path);
void write_rows(std::ostream &out, const SsatInstance &inst);

enum class CnfMode {
  StrictSsat, // every clause must mention every variable exactly once
  Expand,     // pad short clauses with both polarities of absent variables
  Ternary,    // keep the general instance
};

/// DIMACS variable v is x_{v-1}; the result of Ternary mode is a SatInstance.
using CnfResult = std::variant<SsatInstance, SatInstance>;

CnfResult parse_cnf(std::istream &in, CnfMode mode,
                    std::size_t row_cap = kDefaultExpansionCap);
CnfResult parse_cnf_file(const std::filesystem::path &path, CnfMode mode,
                         std::size_t row_cap = kDefaultExpansionCap);

/// Single-line JSON object; deterministic for identical reports.
std::string report_to_json(const SolverReport &report);

void dump_board_file(const PairTable &table,
                     const std::filesystem::path &path);

} // namespace ssat
