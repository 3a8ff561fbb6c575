#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgraphic/seqcore.hpp"

namespace kgraphic {

/// Integer of the form coeff_n * n + offset; catalogs only use coeff_n in {0, 1}.
struct AffineInt {
  int coeff_n = 0;
  int offset = 0;
  int at(int n) const { return coeff_n * n + offset; }
  std::string str() const;
  bool operator==(const AffineInt&) const = default;
};

struct PatternTerm {
  AffineInt value;
  AffineInt count{0, 1};
  bool operator==(const PatternTerm&) const = default;
};

/// Run-length sequence template such as (n-1, 5^4, 3^2, 1^(n-7)).
struct PatternSequence {
  std::string id;
  std::vector<PatternTerm> terms;

  /// Parses "n-1,5^4,3^2,1^(n-7)". Throws InvalidInput.
  static PatternSequence parse(std::string id, std::string_view text);

  /// Terms at the given n, sorted nonincreasing; nullopt when some count or
  /// value is negative or the length differs from n.
  std::optional<std::vector<int>> instantiate(int n) const;
  std::string str() const;
};

/// Exception lists for the K_{2,4} and K_{2,5} characterizations.
class ExceptionCatalog {
 public:
  /// Parses the line-oriented catalog format (see data/exceptions.catalog).
  static ExceptionCatalog parse(std::string_view text);
  static ExceptionCatalog load(const std::string& path);

  /// Catalog compiled into the library from data/exceptions.catalog.
  static const ExceptionCatalog& builtin();
  static std::string_view builtin_text();

  const std::vector<PatternSequence>& k24() const { return k24_; }
  const std::vector<PatternSequence>& k25() const { return k25_; }
  const PatternSequence* find(std::string_view id) const;

  /// This catalog followed by the entries of `extra` (ids must not collide).
  ExceptionCatalog merged(const ExceptionCatalog& extra) const;

  /// FNV-1a 64-bit digest of the catalog text, hex encoded.
  const std::string& checksum() const { return checksum_; }

 private:
  std::vector<PatternSequence> k24_;
  std::vector<PatternSequence> k25_;
  std::string checksum_;
};

std::string fnv1a64_hex(std::string_view text);

/// True iff seq equals the pattern instantiated at n = seq.n().
bool match_parametric(const DegreeSequence& seq, const PatternSequence& pattern);

/// One reading of seq as (n-l, 5^i, 4^j, 3^k, 2^t, 1^(n-7)).
struct Condition3Match {
  int l = 0;
  int i = 0;
  int j = 0;
  int k = 0;
  int t = 0;
  DegreeSequence residual;  // (3^(i-1), 2^j, 1^(k+l-2))
  bool residual_graphic = false;
};

/// Every decomposition with l in {2,3,4}, n - l >= 5, i >= 1 and
/// i + j + k + t = 6, in ascending l. Empty when the shape does not fit.
std::vector<Condition3Match> condition3_decompositions(const DegreeSequence& seq);

/// Residual left after placing K_{2,5} on the seven largest degrees with
/// vertices 1 (degree n - l) and 2 (degree 5) as the two-vertex side, then
/// sending the remaining n - l - 5 edges of vertex 1 into vertices 8..n.
/// Those edges must be forced: either they fill every vertex there, or all
/// vertices there have the same degree so the choice is immaterial.
/// Throws NotApplicable otherwise, or when d_1 != n - l, d_2 != 5, n < 7 or
/// some d_3..d_7 < 2.
DegreeSequence forced_residual(const DegreeSequence& seq, int l);

/// Whether forced_residual(seq, l) is graphic; a false result means seq is
/// not potentially K_{2,5}-graphic. For sequences of the condition-(3) shape
/// this reproduces the (3^(i-1), 2^j, 1^(k+l-2)) residual.
bool necessary_residual_check(const DegreeSequence& seq, int l);

struct TraceEntry {
  std::string check;
  bool passed = false;
  std::string detail;
};

struct Verdict {
  enum class Reason { Pass, ConditionFailed, ExceptionMatched };

  bool decision = false;
  Reason reason = Reason::Pass;
  int failed_condition = 0;        // 1..4 when reason == ConditionFailed
  std::string matched_exception;   // catalog id when reason == ExceptionMatched
  std::vector<Condition3Match> condition3;
  std::vector<TraceEntry> trace;

  std::string reason_string() const;
};

/// Complete characterization of potentially K_{2,4}-graphic sequences.
/// Zero terms are dropped first; throws OutOfScope when fewer than 6 positive
/// terms remain or the sequence is not graphic.
Verdict is_potentially_k24(const DegreeSequence& seq,
                           const ExceptionCatalog& catalog = ExceptionCatalog::builtin());

/// Complete characterization of potentially K_{2,5}-graphic sequences.
/// Same scope rules with a minimum of 7 positive terms.
Verdict is_potentially_k25(const DegreeSequence& seq,
                           const ExceptionCatalog& catalog = ExceptionCatalog::builtin());

}  // namespace kgraphic
