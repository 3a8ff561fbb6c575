#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgraphic/seqcore.hpp"

namespace kgraphic {

/// Labeled simple graph on at most 32 vertices, adjacency stored as bit rows.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 32;
  using Row = std::uint32_t;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int n() const { return n_; }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  Row neighbors(int v) const { return rows_[v]; }
  int degree(int v) const;

  /// Degrees in vertex order (not sorted).
  std::vector<int> degrees() const;
  std::vector<std::pair<int, int>> edges() const;

  /// Throws InvalidInput on loops or asymmetric rows; used after hand edits.
  void validate() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  std::array<Row, kMaxVertices> rows_{};
};

/// Two distinct vertices with at least s common neighbors.
bool contains_k2s(const SimpleGraph& g, int s);

/// As contains_k2s, but all s + 2 vertices must lie in `mask`.
bool contains_k2s_within(const SimpleGraph& g, int s, SimpleGraph::Row mask);

/// Some vertex of degree at least s.
bool contains_k1s(const SimpleGraph& g, int s);

enum class OracleStatus { FoundWitness, ExhaustedNoWitness, BudgetExceeded };
const char* to_string(OracleStatus status);

struct OracleResult {
  OracleStatus status = OracleStatus::ExhaustedNoWitness;
  std::optional<SimpleGraph> witness;
  std::uint64_t nodes_explored = 0;
  std::uint64_t realizations = 0;  // complete labeled realizations visited
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;
inline constexpr int kDefaultMaxVertices = 12;

/// Returns true to stop the enumeration.
using RealizationVisitor = std::function<bool(const SimpleGraph&)>;

/// Visits every labeled realization of seq on vertices 0..n-1 with vertex v
/// receiving degree seq[v]. Backtracks over the upper triangle in row-major
/// order; each completed row is pruned by parity, degree-cap and
/// Erdős–Gallai feasibility of the remaining residual degrees.
///
/// Status is FoundWitness when the visitor asked to stop (the graph it saw
/// is returned), ExhaustedNoWitness after a complete pass, BudgetExceeded
/// when more than `budget` search nodes were needed.
/// Throws InvalidInput when seq is not graphic or n exceeds max_vertices.
OracleResult enumerate_realizations(const DegreeSequence& seq, const RealizationVisitor& visit,
                                    std::uint64_t budget = kDefaultBudget,
                                    int max_vertices = kDefaultMaxVertices);

/// Brute-force existence of a realization using only local pruning (no
/// Erdős–Gallai), so it can referee the graphicality tests. Accepts
/// non-graphic input.
OracleResult find_realization(const DegreeSequence& seq, std::uint64_t budget = kDefaultBudget,
                              int max_vertices = kDefaultMaxVertices);

struct Target {
  enum class Kind { K2s, K1s };
  Kind kind = Kind::K2s;
  int s = 5;

  static Target k2s(int s) { return {Kind::K2s, s}; }
  static Target k1s(int s) { return {Kind::K1s, s}; }
  std::string name() const;
};

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;
  int max_vertices = kDefaultMaxVertices;
  /// Branch-and-bound on possible common neighbourhoods and early exit once
  /// the decided rows already contain the target. Off gives the plain
  /// enumerate-then-test referee.
  bool prune = true;
  /// Only accept K_{2,s} copies on the s + 2 highest-degree vertices.
  bool top_degree_only = false;
};

/// Searches the realizations of seq for one that contains the target.
/// Throws InvalidInput as enumerate_realizations.
OracleResult is_potentially_subgraph(const DegreeSequence& seq, Target target,
                                     const OracleOptions& options = {});

}  // namespace kgraphic
