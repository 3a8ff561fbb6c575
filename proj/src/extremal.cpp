#include "kgraphic/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "kgraphic/decider.hpp"
#include "kgraphic/errors.hpp"

namespace kgraphic {

namespace {

void extend(std::vector<int>& prefix, int n, int max_value, std::int64_t sum, std::int64_t min_sigma,
            std::vector<DegreeSequence>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    if (sum % 2 == 0 && sum >= min_sigma) {
      auto seq = DegreeSequence::normalize(prefix);
      if (is_graphic(seq)) out.push_back(std::move(seq));
    }
    return;
  }
  const int remaining = n - static_cast<int>(prefix.size());
  for (int v = max_value; v >= 1; --v) {
    // Even filling the rest with v cannot reach min_sigma.
    if (sum + static_cast<std::int64_t>(v) * remaining < min_sigma) break;
    prefix.push_back(v);
    extend(prefix, n, v, sum + v, min_sigma, out);
    prefix.pop_back();
  }
}

bool sigma_then_lex_desc(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.sigma() != b.sigma()) return a.sigma() > b.sigma();
  return a > b;
}

}  // namespace

std::vector<DegreeSequence> enumerate_graphic_sequences(int n, std::int64_t min_sigma) {
  if (n < 1) throw InvalidInput("sequence length must be at least 1");
  std::vector<DegreeSequence> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  extend(prefix, n, n - 1, 0, min_sigma, out);
  std::sort(out.begin(), out.end(), sigma_then_lex_desc);
  return out;
}

const char* to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::Decider: return "decider";
    case SweepMode::Oracle: return "oracle";
    case SweepMode::Both: return "both";
  }
  return "?";
}

std::optional<SweepMode> parse_sweep_mode(std::string_view text) {
  if (text == "decider") return SweepMode::Decider;
  if (text == "oracle") return SweepMode::Oracle;
  if (text == "both") return SweepMode::Both;
  return std::nullopt;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

SweepReport sigma_extremal_k25(int n, SweepMode mode, const SweepOptions& options) {
  if (n < 7) throw InvalidInput("sweep needs n >= 7");
  const bool use_decider = mode != SweepMode::Oracle;
  const bool use_oracle = mode != SweepMode::Decider;
  if (use_decider && n > options.decider_ceiling) {
    throw InvalidInput("decider sweep limited to n <= " + std::to_string(options.decider_ceiling));
  }
  if (use_oracle && n > options.oracle_ceiling) {
    throw InvalidInput("oracle sweep limited to n <= " + std::to_string(options.oracle_ceiling));
  }

  const ExceptionCatalog& catalog = options.catalog ? *options.catalog : ExceptionCatalog::builtin();
  const auto seqs = enumerate_graphic_sequences(n);
  std::vector<SweepEntry> entries(seqs.size());
  parallel_for(seqs.size(), options.threads, [&](std::size_t idx) {
    SweepEntry& e = entries[idx];
    e.seq = seqs[idx];
    if (use_decider) {
      const Verdict v = is_potentially_k25(e.seq, catalog);
      e.decider = v.decision;
      e.decider_reason = v.reason_string();
    }
    if (use_oracle) {
      OracleOptions opts;
      opts.budget = options.budget;
      const OracleResult r = is_potentially_subgraph(e.seq, Target::k2s(5), opts);
      e.oracle = r.status;
      e.oracle_nodes = r.nodes_explored;
    }
  });

  SweepReport report;
  report.n = n;
  report.mode = mode;
  report.total = entries.size();
  for (auto& e : entries) {
    if (e.oracle == OracleStatus::BudgetExceeded) {
      report.budget_exceeded.push_back(e);
      continue;
    }
    const bool verdict = use_oracle ? *e.oracle == OracleStatus::FoundWitness : *e.decider;
    if (use_oracle && use_decider && *e.decider != verdict) report.mismatches.push_back(e);
    if (verdict) {
      ++report.potentially;
    } else {
      report.not_potentially.push_back(std::move(e));
    }
  }
  // entries were already in sigma-then-lex order; keep it explicit.
  std::stable_sort(report.not_potentially.begin(), report.not_potentially.end(),
                   [](const SweepEntry& a, const SweepEntry& b) { return sigma_then_lex_desc(a.seq, b.seq); });
  if (!report.not_potentially.empty()) {
    report.sigma_extremal = report.not_potentially.front().seq.sigma() + 2;
  }
  return report;
}

std::int64_t sigma_k25_formula(int n) {
  return n % 2 != 0 ? 5LL * n - 3 : 5LL * n - 2;
}

WitnessReport witness_check(int n) {
  if (n < 7) throw InvalidInput("witness check needs n >= 7");
  WitnessReport w;
  w.n = n;
  std::vector<int> terms{n - 1, 5};
  if (n % 2 != 0) {
    terms.insert(terms.end(), static_cast<std::size_t>(n - 3), 4);
    terms.push_back(3);
    w.expected_sigma = 5LL * n - 5;
  } else {
    terms.insert(terms.end(), static_cast<std::size_t>(n - 2), 4);
    w.expected_sigma = 5LL * n - 4;
  }
  w.seq = DegreeSequence::normalize(terms);
  w.sigma = w.seq.sigma();
  w.graphic = is_graphic(w.seq);
  if (w.graphic) {
    const Verdict v = is_potentially_k25(w.seq);
    w.decider_decision = v.decision;
    w.failed_condition = v.reason == Verdict::Reason::ConditionFailed ? v.failed_condition : 0;
  }
  w.lower_bound = w.sigma + 2;
  w.expected_bound = sigma_k25_formula(n);
  w.ok = w.graphic && w.sigma == w.expected_sigma && !w.decider_decision &&
         w.failed_condition == 2 && w.lower_bound == w.expected_bound;
  return w;
}

namespace {

// Largest sum of a nonincreasing sequence with d_i <= caps[i].
std::int64_t max_sum_under_caps(const std::vector<int>& caps) {
  std::int64_t sum = 0;
  int running = caps.empty() ? 0 : caps.front();
  for (int c : caps) {
    running = std::min(running, c);
    sum += running;
  }
  return sum;
}

std::vector<int> caps_with_prefix(int n, std::vector<int> prefix, int rest) {
  prefix.resize(static_cast<std::size_t>(n), rest);
  return prefix;
}

}  // namespace

FormulaReport sigma_formula_consistency(int n) {
  if (n < 37) throw InvalidInput("formula check needs n >= 37");
  FormulaReport r;
  r.n = n;
  r.threshold = sigma_k25_formula(n);
  auto require_below = [&](std::int64_t value, const std::string& what) {
    if (value >= r.threshold) {
      r.failures.push_back(what + " reaches " + std::to_string(value) + " >= " +
                           std::to_string(r.threshold));
    }
  };

  for (const auto& p : ExceptionCatalog::builtin().k25()) {
    const auto inst = p.instantiate(n);
    if (!inst) continue;
    const std::int64_t s = DegreeSequence::normalize(*inst).sigma();
    if (s > r.max_exception_sigma) {
      r.max_exception_sigma = s;
      r.max_exception_id = p.id;
    }
    require_below(s, "exception " + p.id);
  }

  for (int l = 2; l <= 4; ++l) {
    if (n - l < 5) continue;
    for (int i = 1; i <= 6; ++i) {
      for (int j = 0; i + j <= 6; ++j) {
        for (int k = 0; i + j + k <= 6; ++k) {
          const int t = 6 - i - j - k;
          std::vector<int> terms{n - l};
          terms.insert(terms.end(), static_cast<std::size_t>(i), 5);
          terms.insert(terms.end(), static_cast<std::size_t>(j), 4);
          terms.insert(terms.end(), static_cast<std::size_t>(k), 3);
          terms.insert(terms.end(), static_cast<std::size_t>(t), 2);
          terms.insert(terms.end(), static_cast<std::size_t>(n - 7), 1);
          const std::int64_t s = DegreeSequence::normalize(terms).sigma();
          r.max_condition3_sigma = std::max(r.max_condition3_sigma, s);
          require_below(s, "condition-3 member l=" + std::to_string(l) + " i=" + std::to_string(i) +
                               " j=" + std::to_string(j) + " k=" + std::to_string(k));
        }
      }
    }
  }

  // Closed forms, each cross-checked against the maximal nonincreasing
  // sequence under the corresponding per-position caps where that applies.
  r.bound_small_d2 = 5LL * n - 5;
  // With d_7 = 1 the tail vertices are leaves: the first six carry at most
  // 5 edges each among themselves plus one edge per leaf, counted twice.
  r.bound_small_d7 = 2LL * n + 18;
  r.bound_small_d3 = 5LL * n - 4;
  r.bound_small_d7_star = 3LL * n + 12;
  auto agree = [&](std::int64_t closed, std::int64_t capped, const std::string& what) {
    if (closed != capped) {
      r.failures.push_back(what + ": closed form " + std::to_string(closed) + " != cap maximum " +
                           std::to_string(capped));
    }
  };
  agree(r.bound_small_d2, max_sum_under_caps(caps_with_prefix(n, {n - 1}, 4)), "d_2 <= 4");
  agree(r.bound_small_d3, max_sum_under_caps(caps_with_prefix(n, {n - 1, 5}, 4)), "d_3 <= 4");
  agree(r.bound_small_d7_star,
        max_sum_under_caps(caps_with_prefix(n, {n - 1, 5, 5, 5, 5, 5}, 2)), "d_7 <= 2");

  require_below(r.bound_small_d2, "elimination d_2 <= 4");
  require_below(r.bound_small_d7, "elimination d_7 = 1");
  require_below(r.bound_small_d3, "elimination d_3 <= 4");
  require_below(r.bound_small_d7_star, "elimination d_7 <= 2");
  return r;
}

}  // namespace kgraphic
