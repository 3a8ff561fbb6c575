#include "kgraphic/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "kgraphic/errors.hpp"

namespace kgraphic {

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidInput("graph order " + std::to_string(n) + " outside 0.." +
                       std::to_string(kMaxVertices));
  }
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  rows_[u] |= Row{1} << v;
  rows_[v] |= Row{1} << u;
}

void SimpleGraph::remove_edge(int u, int v) {
  rows_[u] &= ~(Row{1} << v);
  rows_[v] &= ~(Row{1} << u);
}

int SimpleGraph::degree(int v) const { return std::popcount(rows_[v]); }

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
  return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void SimpleGraph::validate() const {
  const Row all = n_ == kMaxVertices ? ~Row{0} : (Row{1} << n_) - 1;
  for (int u = 0; u < n_; ++u) {
    if (has_edge(u, u)) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if ((rows_[u] & ~all) != 0) throw InvalidInput("edge to a vertex outside the graph");
    for (int v = 0; v < n_; ++v) {
      if (has_edge(u, v) != has_edge(v, u)) throw InvalidInput("asymmetric adjacency");
    }
  }
}

bool contains_k2s_within(const SimpleGraph& g, int s, SimpleGraph::Row mask) {
  for (int u = 0; u < g.n(); ++u) {
    if (!((mask >> u) & 1U)) continue;
    for (int v = u + 1; v < g.n(); ++v) {
      if (!((mask >> v) & 1U)) continue;
      // Neither endpoint is in its own row, so the intersection excludes both.
      if (std::popcount(g.neighbors(u) & g.neighbors(v) & mask) >= s) return true;
    }
  }
  return false;
}

bool contains_k2s(const SimpleGraph& g, int s) {
  return contains_k2s_within(g, s, ~SimpleGraph::Row{0});
}

bool contains_k1s(const SimpleGraph& g, int s) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= s) return true;
  }
  return false;
}

const char* to_string(OracleStatus status) {
  switch (status) {
    case OracleStatus::FoundWitness: return "FoundWitness";
    case OracleStatus::ExhaustedNoWitness: return "ExhaustedNoWitness";
    case OracleStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::string Target::name() const {
  return (kind == Kind::K2s ? "K2," : "K1,") + std::to_string(s);
}

// ---------------------------------------------------------------------------
// Backtracking search

namespace {

using Row = SimpleGraph::Row;

struct SearchConfig {
  std::uint64_t budget = kDefaultBudget;
  bool feasibility_pruning = true;  // Erdős–Gallai on residuals at row ends
  const RealizationVisitor* visitor = nullptr;
  // Target-directed pruning; only meaningful with feasibility_pruning.
  const Target* target = nullptr;
  Row mask = ~Row{0};
};

class Search {
 public:
  Search(const DegreeSequence& seq, const SearchConfig& cfg)
      : cfg_(cfg), n_(seq.n()), g_(seq.n()) {
    for (int v = 0; v < n_; ++v) res_[static_cast<std::size_t>(v)] = seq[static_cast<std::size_t>(v)];
  }

  OracleResult run() {
    bool stop = false;
    if (n_ <= 1) {
      stop = (n_ == 1 && res_[0] != 0) ? false : leaf();
    } else {
      switch (boundary(-1)) {
        case Step::Prune: break;
        case Step::Stop: stop = true; break;
        case Step::Continue: stop = place(0, 1); break;
      }
    }
    OracleResult out;
    out.nodes_explored = nodes_;
    out.realizations = realizations_;
    if (exceeded_) {
      out.status = OracleStatus::BudgetExceeded;
    } else if (stop && witness_) {
      out.status = OracleStatus::FoundWitness;
      out.witness = witness_;
    } else {
      out.status = OracleStatus::ExhaustedNoWitness;
    }
    return out;
  }

 private:
  enum class Step { Prune, Continue, Stop };

  int& res(int v) { return res_[static_cast<std::size_t>(v)]; }
  int res(int v) const { return res_[static_cast<std::size_t>(v)]; }

  // Decides pair (r, c); returns true when the whole search must stop.
  bool place(int r, int c) {
    if (++nodes_ > cfg_.budget) {
      exceeded_ = true;
      return true;
    }
    if (c == n_ || res(r) == 0) return row_done(r);
    int avail = 0;
    for (int x = c; x < n_; ++x) avail += res(x) > 0;
    if (avail < res(r)) return false;
    const bool c_open = res(c) > 0;
    if (c_open) {
      g_.add_edge(r, c);
      --res(r);
      --res(c);
      const bool stop = place(r, c + 1);
      ++res(r);
      ++res(c);
      g_.remove_edge(r, c);
      if (stop) return true;
    }
    if (avail - (c_open ? 1 : 0) >= res(r)) return place(r, c + 1);
    return false;
  }

  bool row_done(int r) {
    if (res(r) != 0) return false;
    if (r + 1 >= n_ - 1) {
      if (r + 1 == n_ - 1 && res(n_ - 1) != 0) return false;
      return leaf();
    }
    switch (boundary(r)) {
      case Step::Prune: return false;
      case Step::Stop: return true;
      case Step::Continue: break;
    }
    return place(r + 1, r + 2);
  }

  bool leaf() {
    ++realizations_;
    if (cfg_.visitor != nullptr && (*cfg_.visitor)(g_)) {
      witness_ = g_;
      return true;
    }
    return false;
  }

  // Rows 0..r are final; vertices r+1..n-1 form the undecided block.
  Step boundary(int r) {
    const int first = r + 1;
    const int block = n_ - first;
    int sum = 0;
    for (int x = first; x < n_; ++x) {
      if (res(x) > block - 1) return Step::Prune;
      sum += res(x);
    }
    if (sum % 2 != 0) return Step::Prune;
    if (!cfg_.feasibility_pruning) return Step::Continue;

    std::array<int, SimpleGraph::kMaxVertices> rest{};
    std::copy(res_.begin() + first, res_.begin() + n_, rest.begin());
    std::sort(rest.begin(), rest.begin() + block, std::greater<>());
    if (!erdos_gallai_holds(std::span<const int>(rest.data(), static_cast<std::size_t>(block)))) {
      return Step::Prune;
    }

    if (cfg_.target == nullptr) return Step::Continue;
    if (present(g_)) {
      SimpleGraph done = g_;
      if (complete(first, done)) {
        witness_ = done;
        return Step::Stop;
      }
    }
    return can_still_contain(r) ? Step::Continue : Step::Prune;
  }

  bool present(const SimpleGraph& g) const {
    const Target& t = *cfg_.target;
    if (t.kind == Target::Kind::K1s) {
      for (int v = 0; v < g.n(); ++v) {
        if (((cfg_.mask >> v) & 1U) && g.degree(v) >= t.s) return true;
      }
      return false;
    }
    return contains_k2s_within(g, t.s, cfg_.mask);
  }

  // Upper bound on what any completion can still achieve.
  bool can_still_contain(int r) const {
    const Target& t = *cfg_.target;
    const Row mask = cfg_.mask;
    if (t.kind == Target::Kind::K1s) {
      for (int v = 0; v < n_; ++v) {
        if (((mask >> v) & 1U) && g_.degree(v) + res(v) >= t.s) return true;
      }
      return false;
    }
    Row open = 0;  // undecided vertices that still need edges
    for (int x = r + 1; x < n_; ++x) {
      if (res(x) > 0) open |= Row{1} << x;
    }
    for (int u = 0; u < n_; ++u) {
      if (!((mask >> u) & 1U)) continue;
      const Row pu = g_.neighbors(u);
      const Row qu = ((open >> u) & 1U) ? open & ~(Row{1} << u) : 0;
      for (int v = u + 1; v < n_; ++v) {
        if (!((mask >> v) & 1U)) continue;
        const Row pv = g_.neighbors(v);
        const Row qv = ((open >> v) & 1U) ? open & ~(Row{1} << v) : 0;
        const Row keep = mask & ~(Row{1} << u) & ~(Row{1} << v);
        const int both = std::popcount(pu & pv & keep);
        const int via_v = std::popcount(pu & qv & keep);
        const int via_u = std::popcount(qu & pv & keep);
        const int fresh = std::popcount(qu & qv & keep);
        const int bound = both + std::min(via_v, res(v)) + std::min(via_u, res(u)) +
                          std::min({fresh, res(u), res(v)});
        if (bound >= t.s) return true;
      }
    }
    return false;
  }

  // Havel–Hakimi on the undecided block; only called when it is feasible.
  bool complete(int first, SimpleGraph& g) const {
    std::array<int, SimpleGraph::kMaxVertices> left = res_;
    std::array<int, SimpleGraph::kMaxVertices> order{};
    int m = 0;
    for (int x = first; x < n_; ++x) order[static_cast<std::size_t>(m++)] = x;
    auto by_left = [&](int a, int b) {
      return left[static_cast<std::size_t>(a)] > left[static_cast<std::size_t>(b)];
    };
    for (int step = 0; step < m; ++step) {
      std::sort(order.begin() + step, order.begin() + m, by_left);
      const int x = order[static_cast<std::size_t>(step)];
      int need = left[static_cast<std::size_t>(x)];
      if (need > m - step - 1) return false;
      for (int k = step + 1; need > 0; ++k, --need) {
        const int y = order[static_cast<std::size_t>(k)];
        if (left[static_cast<std::size_t>(y)] <= 0) return false;
        g.add_edge(x, y);
        --left[static_cast<std::size_t>(y)];
      }
      left[static_cast<std::size_t>(x)] = 0;
    }
    return true;
  }

  SearchConfig cfg_;
  int n_;
  SimpleGraph g_;
  std::array<int, SimpleGraph::kMaxVertices> res_{};
  std::uint64_t nodes_ = 0;
  std::uint64_t realizations_ = 0;
  bool exceeded_ = false;
  std::optional<SimpleGraph> witness_;
};

void check_order(const DegreeSequence& seq, int max_vertices) {
  const int cap = std::min(max_vertices, SimpleGraph::kMaxVertices);
  if (seq.n() > cap) {
    throw InvalidInput("oracle limited to n <= " + std::to_string(cap) + ", got n = " +
                       std::to_string(seq.n()));
  }
}

}  // namespace

OracleResult enumerate_realizations(const DegreeSequence& seq, const RealizationVisitor& visit,
                                    std::uint64_t budget, int max_vertices) {
  check_order(seq, max_vertices);
  if (!is_graphic_eg(seq)) throw InvalidInput("sequence " + render(seq) + " is not graphic");
  SearchConfig cfg;
  cfg.budget = budget;
  cfg.visitor = &visit;
  return Search(seq, cfg).run();
}

OracleResult find_realization(const DegreeSequence& seq, std::uint64_t budget, int max_vertices) {
  check_order(seq, max_vertices);
  const RealizationVisitor first = [](const SimpleGraph&) { return true; };
  SearchConfig cfg;
  cfg.budget = budget;
  cfg.feasibility_pruning = false;
  cfg.visitor = &first;
  return Search(seq, cfg).run();
}

OracleResult is_potentially_subgraph(const DegreeSequence& seq, Target target,
                                     const OracleOptions& options) {
  check_order(seq, options.max_vertices);
  if (target.s < 1) throw InvalidInput("target part size must be at least 1");
  if (!is_graphic_eg(seq)) throw InvalidInput("sequence " + render(seq) + " is not graphic");

  Row mask = ~Row{0};
  if (options.top_degree_only) {
    const int size = target.kind == Target::Kind::K2s ? target.s + 2 : 1;
    mask = size >= SimpleGraph::kMaxVertices ? ~Row{0} : (Row{1} << size) - 1;
  }
  const RealizationVisitor contains = [&](const SimpleGraph& g) {
    if (target.kind == Target::Kind::K1s) {
      for (int v = 0; v < g.n(); ++v) {
        if (((mask >> v) & 1U) && g.degree(v) >= target.s) return true;
      }
      return false;
    }
    return contains_k2s_within(g, target.s, mask);
  };

  SearchConfig cfg;
  cfg.budget = options.budget;
  cfg.visitor = &contains;
  cfg.mask = mask;
  if (options.prune) cfg.target = &target;
  return Search(seq, cfg).run();
}

}  // namespace kgraphic
