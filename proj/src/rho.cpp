#include "kgraphic/rho.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "kgraphic/errors.hpp"

namespace kgraphic {

namespace {

void sort_tail(std::vector<int>& v, std::size_t from) {
  std::stable_sort(v.begin() + static_cast<std::ptrdiff_t>(from), v.end(), std::greater<>());
}

}  // namespace

bool RhoInput::applicable(const DegreeSequence& seq, int s) {
  const int n = seq.n();
  return s >= 2 && n >= s + 2 && seq.d(1) <= n - 2 && seq.d(2) >= s;
}

RhoInput RhoInput::make(const DegreeSequence& seq, int s) {
  if (s < 2) throw NotApplicable("s must be at least 2");
  const int n = seq.n();
  if (n < s + 2) {
    throw NotApplicable("need n >= s + 2, got n = " + std::to_string(n));
  }
  if (seq.d(1) > n - 2) throw NotApplicable("need d_1 <= n - 2");
  if (seq.d(2) < s) throw NotApplicable("need d_2 >= s");
  return RhoInput(seq, s);
}

std::vector<int> rho_prime(const RhoInput& in) {
  const auto& seq = in.seq();
  const int s = in.s();
  const int n = seq.n();
  const int d1 = seq.d(1);
  const int d2 = seq.d(2);

  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  // Vertex 1 is adjacent to 2..d1+1 when d2 > s, else to 3..d1+2.
  const bool joins_vertex_two = d2 >= s + 1;
  const int last_hit = joins_vertex_two ? d1 + 1 : d1 + 2;
  out.push_back(joins_vertex_two ? d2 - 1 : d2);
  for (int j = 3; j <= n; ++j) {
    out.push_back(j <= last_hit ? seq.d(j) - 1 : seq.d(j));
  }
  sort_tail(out, static_cast<std::size_t>(s + 1));
  assert(static_cast<int>(out.size()) == n - 1);
  return out;
}

std::vector<int> rho(const RhoInput& in) {
  const auto& seq = in.seq();
  const int s = in.s();
  const int n = seq.n();
  const int d2 = seq.d(2);
  const std::vector<int> first = rho_prime(in);

  // first[j - 2] holds the entry for vertex label j.
  auto at = [&](int label) { return first[static_cast<std::size_t>(label - 2)]; };

  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 2));
  for (int j = 3; j <= s + 2; ++j) out.push_back(seq.d(j) - 2);
  const int last_hit = d2 >= s + 1 ? d2 + 1 : 0;
  for (int j = s + 3; j <= n; ++j) {
    out.push_back(j <= last_hit ? at(j) - 1 : at(j));
  }
  sort_tail(out, static_cast<std::size_t>(s));
  assert(static_cast<int>(out.size()) == n - 2);
  return out;
}

bool positional_is_graphic(const std::vector<int>& terms) {
  if (std::any_of(terms.begin(), terms.end(), [](int x) { return x < 0; })) return false;
  return is_graphic(DegreeSequence::normalize(terms));
}

RhoTest rho_sufficient(const DegreeSequence& seq, int s) {
  if (!RhoInput::applicable(seq, s)) return RhoTest::NotApplicable;
  return positional_is_graphic(rho(RhoInput::make(seq, s))) ? RhoTest::Sufficient
                                                            : RhoTest::Inconclusive;
}

const char* to_string(RhoTest t) {
  switch (t) {
    case RhoTest::NotApplicable: return "not_applicable";
    case RhoTest::Sufficient: return "sufficient";
    case RhoTest::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace kgraphic
