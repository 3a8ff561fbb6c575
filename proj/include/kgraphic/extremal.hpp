#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgraphic/decider.hpp"
#include "kgraphic/oracle.hpp"
#include "kgraphic/seqcore.hpp"

namespace kgraphic {

/// Every positive graphic sequence of length n with d_1 <= n - 1 and even
/// sum >= min_sigma, each once, ordered by decreasing sum and then
/// lexicographically decreasing.
std::vector<DegreeSequence> enumerate_graphic_sequences(int n, std::int64_t min_sigma = 0);

enum class SweepMode { Decider, Oracle, Both };
const char* to_string(SweepMode mode);
std::optional<SweepMode> parse_sweep_mode(std::string_view text);

struct SweepOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;  // 0: hardware concurrency
  int decider_ceiling = 12;
  int oracle_ceiling = 9;
  const ExceptionCatalog* catalog = nullptr;  // nullptr: builtin
};

struct SweepEntry {
  DegreeSequence seq;
  std::optional<bool> decider;              // absent in oracle-only mode
  std::optional<OracleStatus> oracle;       // absent in decider-only mode
  std::string decider_reason;
  std::uint64_t oracle_nodes = 0;
};

struct SweepReport {
  int n = 0;
  SweepMode mode = SweepMode::Decider;
  std::uint64_t total = 0;
  std::uint64_t potentially = 0;
  std::vector<SweepEntry> not_potentially;   // sorted by sigma desc, then lex desc
  std::vector<SweepEntry> mismatches;        // decider and oracle disagree
  std::vector<SweepEntry> budget_exceeded;
  /// Largest sum of a non-potentially sequence plus 2; absent when every
  /// sequence of this length is potentially K_{2,5}-graphic.
  std::optional<std::int64_t> sigma_extremal;

  bool clean() const { return mismatches.empty() && budget_exceeded.empty(); }
};

/// Classifies every positive graphic sequence of length n. The oracle is the
/// referee in Oracle and Both modes; in Both mode every disagreement with the
/// decider is recorded. Throws InvalidInput when n < 7 or n exceeds the
/// ceiling for the mode.
SweepReport sigma_extremal_k25(int n, SweepMode mode, const SweepOptions& options = {});

/// Runs fn(i) for i in [0, count) on `threads` workers (0: hardware
/// concurrency). Results must be written to per-index slots.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

struct WitnessReport {
  int n = 0;
  DegreeSequence seq;
  std::int64_t sigma = 0;
  std::int64_t expected_sigma = 0;     // 5n-5 for odd n, 5n-4 for even n
  bool graphic = false;
  bool decider_decision = true;
  int failed_condition = 0;
  std::int64_t lower_bound = 0;        // sigma + 2
  std::int64_t expected_bound = 0;     // 5n-3 odd, 5n-2 even
  bool ok = false;
};

/// Builds (n-1, 5, 4^(n-3), 3) for odd n or (n-1, 5, 4^(n-2)) for even n and
/// checks that it is graphic, has the expected sum and is rejected by the
/// K_{2,5} decider through condition (2). Requires n >= 7.
WitnessReport witness_check(int n);

/// 5n-3 for odd n, 5n-2 for even n.
std::int64_t sigma_k25_formula(int n);

struct FormulaReport {
  int n = 0;
  std::int64_t threshold = 0;
  std::int64_t max_exception_sigma = -1;  // over instantiable catalog patterns
  std::string max_exception_id;
  std::int64_t max_condition3_sigma = -1; // over all decomposition-family members
  std::int64_t bound_small_d2 = 0;        // d_2 <= 4
  std::int64_t bound_small_d7 = 0;        // d_7 = 1
  std::int64_t bound_small_d3 = 0;        // d_1 = n-1, d_2 = 5, d_3 <= 4
  std::int64_t bound_small_d7_star = 0;   // d_1 = n-1, d_2 = 5, d_7 <= 2
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks that no exception pattern or condition-(3) family member reaches
/// the formula value at n, and that the degree-based eliminations stay below
/// it. Requires n >= 37.
FormulaReport sigma_formula_consistency(int n);

}  // namespace kgraphic
