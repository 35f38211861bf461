#include "ssat/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ssat/error.hpp"

namespace ssat {

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string &what) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_skippable(const std::string &line) {
  return line.empty() || line[0] == 'c';
}

template <typename Int>
bool parse_int(const std::string &token, Int &value) {
  const char *end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::ifstream open_input(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::IoError, "cannot open " + path.string());
  return in;
}

} // namespace

SsatInstance parse_rows(std::istream &in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned width = 0;
  std::uint64_t expected = 0;
  std::vector<std::uint64_t> rows;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (is_skippable(line))
      continue;
    if (!have_header) {
      std::istringstream fields(line);
      std::string tag, n_tok, m_tok, extra;
      fields >> tag >> n_tok >> m_tok;
      if (tag != "ssat" || (fields >> extra))
        syntax_error(line_no, "expected header 'ssat <n> <m>'");
      if (!parse_int(n_tok, width) || width < 1 || width > kMaxWidth)
        syntax_error(line_no, "bad variable count '" + n_tok + "'");
      if (!parse_int(m_tok, expected))
        syntax_error(line_no, "bad row count '" + m_tok + "'");
      if (expected == 0)
        throw Error(Errc::EmptyInstance,
                    "line " + std::to_string(line_no) + ": instance has no rows");
      have_header = true;
      rows.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(expected, 1u << 24)));
      continue;
    }
    if (rows.size() == expected)
      syntax_error(line_no, "more than the declared " +
                                std::to_string(expected) + " rows");
    std::uint64_t bits = 0;
    for (char c : line) {
      if (c != '0' && c != '1')
        syntax_error(line_no, std::string("illegal character '") + c +
                                  "' in row");
      bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    if (line.size() != width)
      throw Error(Errc::WidthMismatch,
                  "line " + std::to_string(line_no) + ": row has " +
                      std::to_string(line.size()) + " digits, expected " +
                      std::to_string(width));
    rows.push_back(bits);
  }
  if (!have_header)
    syntax_error(line_no, "missing 'ssat <n> <m>' header");
  if (rows.size() != expected)
    syntax_error(line_no, "declared " + std::to_string(expected) +
                              " rows, found " + std::to_string(rows.size()));
  return SsatInstance(width, std::move(rows));
}

SsatInstance parse_rows_file(const std::filesystem::path &path) {
  std::ifstream in = open_input(path);
  return parse_rows(in);
}

void write_rows(std::ostream &out, const SsatInstance &inst) {
  out << "ssat " << inst.width() << ' ' << inst.size() << '\n';
  for (std::uint64_t row : inst.row_bits())
    out << to_bit_string(row, inst.width()) << '\n';
}

CnfResult parse_cnf(std::istream &in, CnfMode mode, std::size_t row_cap) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned width = 0;
  std::uint64_t declared = 0;
  std::vector<Clause> clauses;
  std::vector<std::size_t> clause_lines;
  Clause current;
  std::size_t current_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (is_skippable(line))
      continue;
    if (line[0] == '%')
      break;
    std::istringstream tokens(line);
    if (line[0] == 'p') {
      if (have_header)
        syntax_error(line_no, "second problem line");
      std::string p, fmt, n_tok, m_tok, extra;
      tokens >> p >> fmt >> n_tok >> m_tok;
      if (p != "p" || fmt != "cnf" || (tokens >> extra))
        syntax_error(line_no, "expected 'p cnf <vars> <clauses>'");
      if (!parse_int(n_tok, width) || width < 1 || width > kMaxWidth)
        syntax_error(line_no, "bad variable count '" + n_tok + "'");
      if (!parse_int(m_tok, declared))
        syntax_error(line_no, "bad clause count '" + m_tok + "'");
      have_header = true;
      continue;
    }
    if (!have_header)
      syntax_error(line_no, "clause before the 'p cnf' line");
    std::string tok;
    while (tokens >> tok) {
      long long lit = 0;
      if (!parse_int(tok, lit))
        syntax_error(line_no, "bad literal '" + tok + "'");
      if (lit == 0) {
        if (current.empty())
          syntax_error(line_no, "empty clause");
        clauses.push_back(std::move(current));
        clause_lines.push_back(current_line);
        current.clear();
        continue;
      }
      const long long limit = width;
      if (lit > limit || lit < -limit)
        syntax_error(line_no, "variable " + tok.substr(lit < 0 ? 1 : 0) +
                                  " exceeds the declared " +
                                  std::to_string(width));
      const long long var = lit < 0 ? -lit : lit;
      if (current.empty())
        current_line = line_no;
      current.push_back({static_cast<unsigned>(var - 1), lit > 0});
    }
  }
  if (!have_header)
    syntax_error(line_no, "missing 'p cnf' line");
  if (!current.empty())
    syntax_error(line_no, "last clause is not terminated by 0");
  if (clauses.size() != declared)
    syntax_error(line_no, "declared " + std::to_string(declared) +
                              " clauses, found " +
                              std::to_string(clauses.size()));

  if (mode == CnfMode::StrictSsat) {
    std::vector<std::uint64_t> rows;
    rows.reserve(clauses.size());
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      try {
        rows.push_back(translate_row(clauses[i], width).bits);
      } catch (const Error &e) {
        throw Error(e.code(), "line " + std::to_string(clause_lines[i]) +
                                  ": " + e.detail());
      }
    }
    return SsatInstance(width, std::move(rows));
  }

  // A clause holding v and ~v is always true and constrains nothing.
  std::erase_if(clauses, [](const Clause &clause) {
    for (const Literal &a : clause)
      for (const Literal &b : clause)
        if (a.var == b.var && a.positive != b.positive)
          return true;
    return false;
  });
  SatInstance sat(width, std::move(clauses));
  if (mode == CnfMode::Ternary)
    return sat;
  return expand_to_ssat(sat, row_cap);
}

CnfResult parse_cnf_file(const std::filesystem::path &path, CnfMode mode,
                         std::size_t row_cap) {
  std::ifstream in = open_input(path);
  return parse_cnf(in, mode, row_cap);
}

std::string report_to_json(const SolverReport &report) {
  nlohmann::ordered_json j;
  j["algorithm"] = report.algorithm;
  j["n"] = report.width;
  j["m"] = report.rows;
  j["verdict"] = std::string(verdict_name(report.verdict));
  if (report.witness) {
    j["witness"] = to_string(*report.witness);
    j["witness_value"] = report.witness->bits;
  } else {
    j["witness"] = nullptr;
  }
  j["evidence"] = std::string(evidence_name(report.evidence));
  j["iterations"] = report.iterations;
  j["evaluations"] = report.evaluations;
  if (report.seed)
    j["seed"] = *report.seed;
  else
    j["seed"] = nullptr;
  if (report.table_fill)
    j["table_fill"] = *report.table_fill;
  if (report.pair_insertions)
    j["pair_insertions"] = *report.pair_insertions;
  return j.dump();
}

void dump_board_file(const PairTable &table,
                     const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::IoError, "cannot write " + path.string());
  table.dump(out);
}

} // namespace ssat
