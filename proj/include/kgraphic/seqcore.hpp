#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kgraphic {

/// Nonincreasing sequence of nonnegative degrees.
///
/// Values built with normalize() carry no zero terms; sequences produced by
/// reductions (layoff, rho) may keep zeros so that their length stays
/// meaningful. sigma() is cached and always equals the sum of terms.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  /// Sorts nonincreasing and strips zero terms. Throws InvalidInput on a
  /// negative entry.
  static DegreeSequence normalize(std::span<const int> raw);
  static DegreeSequence normalize(std::initializer_list<int> raw) {
    return normalize(std::span<const int>(raw.begin(), raw.size()));
  }

  /// Sorts nonincreasing but keeps zero terms.
  static DegreeSequence sorted(std::vector<int> raw);

  std::span<const int> terms() const { return terms_; }
  const std::vector<int>& vector() const { return terms_; }
  int n() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }
  std::int64_t sigma() const { return sigma_; }

  /// Length of the raw input before zero-stripping.
  int original_length() const { return original_length_; }

  /// 1-based access, matching the usual d_1 >= d_2 >= ... >= d_n indexing.
  int d(int k) const { return terms_.at(static_cast<std::size_t>(k - 1)); }
  int operator[](std::size_t i) const { return terms_[i]; }

  /// Largest and smallest positive terms; 0 when there are none.
  int max_positive() const;
  int min_positive() const;
  int count_of(int value) const;
  bool has_zero() const { return !terms_.empty() && terms_.back() == 0; }

  DegreeSequence without_zeros() const;

  bool operator==(const DegreeSequence& other) const { return terms_ == other.terms_; }
  std::strong_ordering operator<=>(const DegreeSequence& other) const {
    return terms_ <=> other.terms_;
  }

 private:
  explicit DegreeSequence(std::vector<int> sorted_terms, int original_length);

  std::vector<int> terms_;
  std::int64_t sigma_ = 0;
  int original_length_ = 0;
};

/// Residual sequence obtained by laying off the k-th term (k is 1-based).
///
/// When d_k >= k the first d_k + 1 terms other than position k are
/// decremented; otherwise the first d_k terms are. Position k is removed and
/// the result re-sorted, so the length is n - 1. Zeros are kept.
/// Throws InvalidInput when k is out of range or d_k > n - 1.
DegreeSequence layoff(const DegreeSequence& seq, int k);

/// Graphicality by repeatedly laying off the last term.
bool is_graphic(const DegreeSequence& seq);

/// Graphicality by the Erdős–Gallai inequalities.
bool is_graphic_eg(const DegreeSequence& seq);

/// Erdős–Gallai test on a raw nonincreasing span (zeros allowed), including
/// the parity and d_1 <= n - 1 checks. Allocation free.
bool erdos_gallai_holds(std::span<const int> nonincreasing);

/// Largest positive term at most 2, smallest positive term 1, even sum:
/// always graphic. nullopt outside that hypothesis; never false.
std::optional<bool> graphic_if_max_two(const DegreeSequence& seq);

/// n >= 4, positive terms, even sum, d_1 <= 3: graphic unless the sequence is
/// (3,3,3,1) or (3,3,1,1). nullopt outside the hypothesis.
std::optional<bool> graphic_if_max_three(const DegreeSequence& seq);

/// Shape (4^x,3^y,2^z,1^m) with x >= 1, n >= 5, even sum: graphic unless the
/// sequence is one of thirteen listed exceptions. nullopt outside the shape.
std::optional<bool> graphic_if_max_four(const DegreeSequence& seq);

/// The thirteen non-graphic exceptions of shape (4^x,3^y,2^z,1^m).
const std::vector<DegreeSequence>& max_four_exceptions();

// Sequence text: whitespace or comma separated integers, or run-length
// tokens base^count ("5^2,2^5"); both may be mixed.

/// Parses raw terms without normalizing. Throws InvalidInput.
std::vector<int> parse_terms(std::string_view text);

/// parse_terms followed by normalize.
DegreeSequence parse_sequence(std::string_view text);

/// Run-length rendering, e.g. "5^2,2^5"; single terms carry no exponent.
std::string render(std::span<const int> terms);
inline std::string render(const DegreeSequence& seq) { return render(seq.terms()); }

}  // namespace kgraphic
