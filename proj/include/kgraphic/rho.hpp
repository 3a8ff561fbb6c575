#pragma once

#include <vector>

#include "kgraphic/seqcore.hpp"

namespace kgraphic {

/// Sequence and part size for the two-step K_{2,s} reduction.
///
/// Requires s >= 2, n >= s + 2, d_1 <= n - 2 and d_2 >= s. Vertex 1 and
/// vertex 2 play the two-vertex side, vertices 3..s+2 the s-vertex side.
class RhoInput {
 public:
  /// Throws NotApplicable when a hypothesis fails.
  static RhoInput make(const DegreeSequence& seq, int s);
  static bool applicable(const DegreeSequence& seq, int s);

  const DegreeSequence& seq() const { return seq_; }
  int s() const { return s_; }

 private:
  RhoInput(DegreeSequence seq, int s) : seq_(std::move(seq)), s_(s) {}
  DegreeSequence seq_;
  int s_;
};

/// First reduction: lay off vertex 1 onto vertices 2..d_1+1 (when d_2 > s) or
/// onto 3..d_1+2 (when d_2 == s, leaving d_2 untouched). Length n - 1.
///
/// The result is positional: entry 0 is vertex 2, entries 1..s are vertices
/// 3..s+2, and the tail from vertex s+3 on is sorted nonincreasing. Zeros are
/// kept and the whole vector need not be nonincreasing.
std::vector<int> rho_prime(const RhoInput& in);

/// Second reduction: additionally lay off vertex 2 onto 3..s+2 (and onward to
/// d_2+1 when d_2 > s). Length n - 2, entries 0..s-1 are vertices 3..s+2,
/// the tail is sorted nonincreasing. Entries may be negative when d_j < 2
/// for some 3 <= j <= s+2.
std::vector<int> rho(const RhoInput& in);

enum class RhoTest { NotApplicable, Sufficient, Inconclusive };

/// If rho(seq, s) is graphic then seq is potentially K_{2,s}-graphic.
/// A non-graphic rho proves nothing, hence Inconclusive rather than false.
RhoTest rho_sufficient(const DegreeSequence& seq, int s);

/// Graphicality of a positional reduction result (false on any negative entry).
bool positional_is_graphic(const std::vector<int>& terms);

const char* to_string(RhoTest t);

}  // namespace kgraphic
