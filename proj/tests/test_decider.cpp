#include <doctest.h>

#include <fstream>
#include <sstream>

#include "kgraphic/decider.hpp"
#include "kgraphic/errors.hpp"
#include "kgraphic/extremal.hpp"
#include "kgraphic/oracle.hpp"
#include "kgraphic/rho.hpp"

using namespace kgraphic;

namespace {

DegreeSequence seq(std::initializer_list<int> xs) { return DegreeSequence::normalize(xs); }
std::vector<int> vec(std::initializer_list<int> xs) { return xs; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool oracle_k2s(const DegreeSequence& p, int s) {
  const auto r = is_potentially_subgraph(p, Target::k2s(s));
  REQUIRE(r.status != OracleStatus::BudgetExceeded);
  return r.status == OracleStatus::FoundWitness;
}

}  // namespace

TEST_CASE("pattern parsing and instantiation") {
  const auto p = PatternSequence::parse("x", "n-1,5^3,3^3,1^(n-7)");
  CHECK(p.terms.size() == 4);
  CHECK(p.str() == "n-1,5^3,3^3,1^(n-7)");
  CHECK(p.instantiate(7) == std::optional(vec({6, 5, 5, 5, 3, 3, 3})));
  CHECK(p.instantiate(9) == std::optional(vec({8, 5, 5, 5, 3, 3, 3, 1, 1})));
  CHECK_FALSE(p.instantiate(6).has_value());

  const auto q = PatternSequence::parse("y", "n-1,5^2,3^6,1^(n-9)");
  CHECK_FALSE(q.instantiate(8).has_value());
  CHECK(q.instantiate(9).has_value());

  CHECK_THROWS_AS(PatternSequence::parse("z", "5^"), InvalidInput);
  CHECK_THROWS_AS(PatternSequence::parse("z", "m-1"), InvalidInput);
  CHECK_THROWS_AS(PatternSequence::parse("z", "5,,2"), InvalidInput);
}

TEST_CASE("match_parametric examples") {
  const auto p = seq({6, 5, 5, 5, 3, 3, 3});
  CHECK(match_parametric(p, PatternSequence::parse("a", "n-1,5^3,3^3,1^(n-7)")));
  CHECK_FALSE(match_parametric(p, PatternSequence::parse("b", "n-1,5^4,3^2,1^(n-7)")));
  CHECK_FALSE(match_parametric(seq({7, 5, 5, 3, 3, 3, 3, 3}), PatternSequence::parse("c", "n-1,5^2,3^6,1^(n-9)")));
}

TEST_CASE("builtin catalog contents") {
  const auto& cat = ExceptionCatalog::builtin();
  CHECK(cat.k24().size() == 12);
  int parametric = 0;
  int fixed_by_n[13] = {};
  for (const auto& p : cat.k25()) {
    bool has_n = false;
    for (const auto& t : p.terms) has_n = has_n || t.value.coeff_n != 0 || t.count.coeff_n != 0;
    if (has_n) {
      ++parametric;
    } else {
      int len = 0;
      for (const auto& t : p.terms) len += t.count.offset;
      REQUIRE(len <= 12);
      ++fixed_by_n[len];
    }
  }
  CHECK(parametric == 10);
  CHECK(fixed_by_n[8] == 8);
  CHECK(fixed_by_n[9] == 9);
  CHECK(fixed_by_n[10] == 6);
  CHECK(fixed_by_n[11] == 2);
  CHECK(fixed_by_n[12] == 1);
  REQUIRE(cat.find("k24-02") != nullptr);
  CHECK(cat.find("k24-02")->str() == "4^2,2^5");
}

TEST_CASE("shipped catalog file equals the compiled-in copy") {
  const std::string text = read_file(KGRAPHIC_CATALOG_PATH);
  CHECK(text == ExceptionCatalog::builtin_text());
  CHECK(ExceptionCatalog::load(KGRAPHIC_CATALOG_PATH).checksum() == ExceptionCatalog::builtin().checksum());
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("catalog parse errors and merging") {
  CHECK_THROWS_AS(ExceptionCatalog::parse("k25-a 5^2\nk25-a 4^2\n"), InvalidInput);
  CHECK_THROWS_AS(ExceptionCatalog::parse("k99-a 5^2\n"), InvalidInput);
  CHECK_THROWS_AS(ExceptionCatalog::parse("k25-a\n"), InvalidInput);
  const auto extra = ExceptionCatalog::parse("# note\nk25-x 5^3\n");
  const auto merged = ExceptionCatalog::builtin().merged(extra);
  CHECK(merged.k25().size() == ExceptionCatalog::builtin().k25().size() + 1);
  CHECK(merged.checksum() != ExceptionCatalog::builtin().checksum());
  CHECK_THROWS_AS(merged.merged(extra), InvalidInput);
}

TEST_CASE("K24 decider examples") {
  CHECK(is_potentially_k24(seq({4, 4, 2, 2, 2, 2})).decision);
  const auto v = is_potentially_k24(seq({4, 4, 2, 2, 2, 2, 2}));
  CHECK_FALSE(v.decision);
  CHECK(v.reason == Verdict::Reason::ExceptionMatched);
  CHECK(v.matched_exception == "k24-02");
  // (n-1, 4, 3, ...) with d_3 = 3.
  const auto w = is_potentially_k24(seq({6, 4, 3, 3, 3, 2, 1}));
  CHECK_FALSE(w.decision);
  CHECK(w.failed_condition == 2);
  CHECK_THROWS_AS(is_potentially_k24(seq({4, 4, 2, 2, 2})), OutOfScope);
  CHECK_THROWS_AS(is_potentially_k24(seq({5, 1, 1, 1, 1, 1, 1, 1, 1})), OutOfScope);
}

TEST_CASE("K25 decider examples") {
  CHECK(is_potentially_k25(seq({5, 5, 2, 2, 2, 2, 2})).decision);

  const auto a = is_potentially_k25(seq({5, 5, 2, 2, 2, 2, 2, 2}));
  CHECK_FALSE(a.decision);
  CHECK(a.reason == Verdict::Reason::ExceptionMatched);
  CHECK(a.matched_exception == "k25-n08h");

  const auto b = is_potentially_k25(seq({6, 5, 5, 5, 5, 3, 3}));
  CHECK_FALSE(b.decision);
  CHECK(b.reason == Verdict::Reason::ExceptionMatched);
  CHECK(b.matched_exception == "k25-p01");

  const auto c = seq({8, 5, 5, 5, 5, 3, 2, 1, 1, 1});
  REQUIRE(is_graphic(c));
  const auto cv = is_potentially_k25(c);
  CHECK_FALSE(cv.decision);
  CHECK(cv.failed_condition == 3);
  REQUIRE(cv.condition3.size() == 1);
  CHECK(cv.condition3[0].l == 2);
  CHECK(cv.condition3[0].i == 4);
  CHECK(cv.condition3[0].j == 0);
  CHECK(cv.condition3[0].k == 1);
  CHECK(cv.condition3[0].t == 1);
  CHECK(cv.condition3[0].residual.vector() == vec({3, 3, 3, 1}));
  CHECK_FALSE(cv.condition3[0].residual_graphic);

  CHECK(is_potentially_k25(seq({6, 6, 6, 5, 5, 4, 2, 2})).decision);
  CHECK_THROWS_AS(is_potentially_k25(seq({3, 2, 1})), OutOfScope);
  CHECK_THROWS_AS(is_potentially_k25(seq({5, 5, 2, 2, 2, 2, 1})), OutOfScope);
}

TEST_CASE("zero terms are dropped before deciding") {
  const auto raw = DegreeSequence::sorted({5, 5, 2, 2, 2, 2, 2, 0, 0});
  const auto v = is_potentially_k25(raw);
  CHECK(v.decision);
}

TEST_CASE("condition-3 decompositions") {
  const auto a = condition3_decompositions(seq({5, 5, 2, 2, 2, 2, 2}));
  REQUIRE(a.size() == 1);
  CHECK(a[0].l == 2);
  CHECK(a[0].i == 1);
  CHECK(a[0].t == 5);
  CHECK(a[0].residual.empty());
  CHECK(a[0].residual_graphic);

  const auto b = condition3_decompositions(seq({7, 5, 5, 3, 3, 3, 2, 1, 1}));
  REQUIRE(b.size() == 1);
  CHECK(b[0].l == 2);
  CHECK(b[0].i == 2);
  CHECK(b[0].j == 0);
  CHECK(b[0].k == 3);
  CHECK(b[0].t == 1);
  CHECK(b[0].residual.vector() == vec({3, 1, 1, 1}));
  CHECK(b[0].residual_graphic);

  CHECK(condition3_decompositions(seq({9, 9, 8, 2, 2, 2, 2, 2, 2, 2})).empty());
}

TEST_CASE("necessary residual check examples") {
  const auto p = seq({8, 5, 5, 5, 5, 2, 2, 2, 1, 1});
  CHECK(forced_residual(p, 2).vector() == vec({3, 3, 3, 1}));
  CHECK_FALSE(necessary_residual_check(p, 2));
  CHECK(necessary_residual_check(seq({5, 5, 2, 2, 2, 2, 2}), 2));
  CHECK(forced_residual(seq({7, 5, 5, 3, 3, 3, 2, 1, 1}), 2).vector() == vec({3, 1, 1, 1}));
  CHECK(necessary_residual_check(seq({7, 5, 5, 3, 3, 3, 2, 1, 1}), 2));
  CHECK_THROWS_AS(necessary_residual_check(p, 3), NotApplicable);
  CHECK_THROWS_AS(necessary_residual_check(seq({6, 6, 5, 5, 5, 5, 5, 2, 1}), 3), NotApplicable);
}

TEST_CASE("necessary residual check agrees with every condition-3 decomposition, n = 7..12") {
  for (int n = 7; n <= 12; ++n) {
    for (int l = 2; l <= 4; ++l) {
      for (int i = 1; i <= 6; ++i) {
        for (int j = 0; i + j <= 6; ++j) {
          for (int k = 0; i + j + k <= 6; ++k) {
            std::vector<int> terms{n - l};
            terms.insert(terms.end(), static_cast<std::size_t>(i), 5);
            terms.insert(terms.end(), static_cast<std::size_t>(j), 4);
            terms.insert(terms.end(), static_cast<std::size_t>(k), 3);
            terms.insert(terms.end(), static_cast<std::size_t>(6 - i - j - k), 2);
            terms.insert(terms.end(), static_cast<std::size_t>(n - 7), 1);
            const auto p = DegreeSequence::normalize(terms);
            const auto ms = condition3_decompositions(p);
            if (n - l < 5 || p.d(1) != n - l) {
              continue;
            }
            REQUIRE(ms.size() == 1);
            INFO(render(p));
            CHECK(forced_residual(p, l) == ms[0].residual);
            CHECK(necessary_residual_check(p, l) == ms[0].residual_graphic);
          }
        }
      }
    }
  }
}

TEST_CASE("a failed necessary residual check is confirmed by the oracle, n = 7..9") {
  int refuted = 0;
  for (int n = 7; n <= 9; ++n) {
    for (const auto& p : enumerate_graphic_sequences(n)) {
      for (int l = 1; l <= 4; ++l) {
        bool ok = true;
        try {
          ok = necessary_residual_check(p, l);
        } catch (const NotApplicable&) {
          continue;
        }
        if (!ok) {
          INFO(render(p) << " l=" << l);
          CHECK_FALSE(oracle_k2s(p, 5));
          ++refuted;
        }
      }
    }
  }
  CHECK(refuted > 0);
}

TEST_CASE("trace records every condition and the first failure is the reason") {
  for (int n = 7; n <= 9; ++n) {
    for (const auto& p : enumerate_graphic_sequences(n)) {
      const auto v = is_potentially_k25(p);
      REQUIRE(v.trace.size() >= 4);
      bool all_passed = true;
      for (const auto& t : v.trace) all_passed = all_passed && t.passed;
      CHECK(v.decision == all_passed);
      CHECK(v.decision == (v.reason == Verdict::Reason::Pass));
      if (v.reason == Verdict::Reason::ConditionFailed) CHECK(v.failed_condition >= 1);
      if (v.reason == Verdict::Reason::ExceptionMatched) CHECK(ExceptionCatalog::builtin().find(v.matched_exception));
    }
  }
}

TEST_CASE("condition (2) failures never contain K25, and condition (1) is necessary, n = 7..9") {
  for (int n = 7; n <= 9; ++n) {
    for (const auto& p : enumerate_graphic_sequences(n)) {
      const bool deg_ok = p.d(2) >= 5 && p.d(7) >= 2;
      if (!deg_ok) {
        CHECK_FALSE(oracle_k2s(p, 5));
        continue;
      }
      if (p.d(1) == n - 1 && p.d(2) == 5 && !(p.d(3) == 5 && p.d(7) >= 3)) {
        INFO(render(p));
        CHECK_FALSE(oracle_k2s(p, 5));
      }
    }
  }
}

TEST_CASE("K24 decider agrees with the oracle for n = 6..9") {
  for (int n = 6; n <= 9; ++n) {
    for (const auto& p : enumerate_graphic_sequences(n)) {
      INFO(render(p));
      CHECK(is_potentially_k24(p).decision == oracle_k2s(p, 4));
    }
  }
}

TEST_CASE("every K25 exception instance is graphic and rejected") {
  const auto& cat = ExceptionCatalog::builtin();
  for (const auto& pat : cat.k25()) {
    for (int n = 7; n <= 40; ++n) {
      const auto inst = pat.instantiate(n);
      if (!inst) continue;
      const auto p = DegreeSequence::normalize(*inst);
      INFO(pat.id << " n=" << n);
      REQUIRE(is_graphic(p));
      CHECK_FALSE(is_potentially_k25(p).decision);
    }
  }
}

TEST_CASE("an accepted sequence stays accepted when the last term is laid off back, n = 8..9") {
  for (int n = 8; n <= 9; ++n) {
    for (const auto& p : enumerate_graphic_sequences(n)) {
      const auto r = layoff(p, n).without_zeros();
      if (r.n() < 7) continue;
      if (is_potentially_k25(r).decision) {
        INFO(render(p) << " -> " << render(r));
        CHECK(is_potentially_k25(p).decision);
      }
    }
  }
}

TEST_CASE("rho sufficiency never contradicts the decider outside its known gap, n = 7..9") {
  const auto errata = ExceptionCatalog::builtin().merged(ExceptionCatalog::load(KGRAPHIC_ERRATA_PATH));
  for (int n = 7; n <= 9; ++n) {
    for (const auto& p : enumerate_graphic_sequences(n)) {
      if (rho_sufficient(p, 5) == RhoTest::Sufficient) {
        INFO(render(p));
        CHECK(is_potentially_k25(p, errata).decision);
      }
    }
  }
}

TEST_CASE("the builtin catalog misses (n-2, 5^3, 2^5, 1^(n-9))") {
  const auto errata = ExceptionCatalog::load(KGRAPHIC_ERRATA_PATH);
  const auto merged = ExceptionCatalog::builtin().merged(errata);
  for (int n = 9; n <= 10; ++n) {
    std::vector<int> terms{n - 2, 5, 5, 5, 2, 2, 2, 2, 2};
    terms.insert(terms.end(), static_cast<std::size_t>(n - 9), 1);
    const auto p = DegreeSequence::normalize(terms);
    INFO(render(p));
    REQUIRE(is_graphic(p));
    CHECK(is_potentially_k25(p).decision);
    CHECK_FALSE(oracle_k2s(p, 5));
    const auto v = is_potentially_k25(p, merged);
    CHECK_FALSE(v.decision);
    CHECK(v.matched_exception == "k25-x01");
  }
}
