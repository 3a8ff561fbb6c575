#include "kgraphic/seqcore.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "kgraphic/errors.hpp"

namespace kgraphic {

namespace {

constexpr long long kMaxRunLength = 1'000'000;

std::int64_t sum_of(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

void require_nonnegative(std::span<const int> raw) {
  for (int x : raw) {
    if (x < 0) {
      throw InvalidInput("negative degree " + std::to_string(x));
    }
  }
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> sorted_terms, int original_length)
    : terms_(std::move(sorted_terms)), sigma_(sum_of(terms_)), original_length_(original_length) {}

DegreeSequence DegreeSequence::normalize(std::span<const int> raw) {
  require_nonnegative(raw);
  std::vector<int> terms;
  terms.reserve(raw.size());
  std::copy_if(raw.begin(), raw.end(), std::back_inserter(terms), [](int x) { return x > 0; });
  std::sort(terms.begin(), terms.end(), std::greater<>());
  return DegreeSequence(std::move(terms), static_cast<int>(raw.size()));
}

DegreeSequence DegreeSequence::sorted(std::vector<int> raw) {
  require_nonnegative(raw);
  std::sort(raw.begin(), raw.end(), std::greater<>());
  const int len = static_cast<int>(raw.size());
  return DegreeSequence(std::move(raw), len);
}

int DegreeSequence::max_positive() const {
  return terms_.empty() ? 0 : terms_.front();
}

int DegreeSequence::min_positive() const {
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (*it > 0) return *it;
  }
  return 0;
}

int DegreeSequence::count_of(int value) const {
  return static_cast<int>(std::count(terms_.begin(), terms_.end(), value));
}

DegreeSequence DegreeSequence::without_zeros() const {
  return normalize(terms_);
}

DegreeSequence layoff(const DegreeSequence& seq, int k) {
  const int n = seq.n();
  if (k < 1 || k > n) {
    throw InvalidInput("layoff index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  const int dk = seq.d(k);
  if (dk > n - 1) {
    throw InvalidInput("term d_" + std::to_string(k) + " = " + std::to_string(dk) +
                       " exceeds n - 1");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  // Positions are 1-based below; position k itself is skipped.
  const int last_decremented = dk >= k ? dk + 1 : dk;
  for (int pos = 1; pos <= n; ++pos) {
    if (pos == k) continue;
    const int d = seq.d(pos);
    out.push_back(pos <= last_decremented ? d - 1 : d);
  }
  return DegreeSequence::sorted(std::move(out));
}

bool is_graphic(const DegreeSequence& seq) {
  if (seq.sigma() % 2 != 0) return false;
  DegreeSequence cur = seq;
  while (!cur.empty()) {
    const int n = cur.n();
    if (cur.d(1) > n - 1) return false;
    if (cur.d(1) == 0) return true;
    cur = layoff(cur, n);
  }
  return true;
}

bool erdos_gallai_holds(std::span<const int> d) {
  const auto n = static_cast<std::int64_t>(d.size());
  std::int64_t total = 0;
  for (int x : d) total += x;
  if (total % 2 != 0) return false;
  if (n > 0 && d[0] > n - 1) return false;
  std::int64_t lhs = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    lhs += d[static_cast<std::size_t>(k - 1)];
    std::int64_t rhs = k * (k - 1);
    for (std::int64_t i = k; i < n; ++i) {
      rhs += std::min<std::int64_t>(d[static_cast<std::size_t>(i)], k);
    }
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_graphic_eg(const DegreeSequence& seq) {
  return erdos_gallai_holds(seq.terms());
}

std::optional<bool> graphic_if_max_two(const DegreeSequence& seq) {
  const int m = seq.max_positive();
  if (m < 1 || m > 2 || seq.min_positive() != 1 || seq.sigma() % 2 != 0) {
    return std::nullopt;
  }
  return true;
}

std::optional<bool> graphic_if_max_three(const DegreeSequence& seq) {
  if (seq.n() < 4 || seq.has_zero() || seq.sigma() % 2 != 0 || seq.d(1) > 3) {
    return std::nullopt;
  }
  static const DegreeSequence a = DegreeSequence::normalize({3, 3, 3, 1});
  static const DegreeSequence b = DegreeSequence::normalize({3, 3, 1, 1});
  return !(seq == a || seq == b);
}

const std::vector<DegreeSequence>& max_four_exceptions() {
  static const std::vector<DegreeSequence> set = [] {
    const std::vector<std::string_view> texts = {
        "4,3^2,1^2", "4,3,1^3",   "4^2,2,1^2", "4^2,3,2,1",   "4^3,1^2",
        "4^3,2^2",   "4^3,3,1",   "4^4,2",     "4^2,3,1^3",   "4^2,1^4",
        "4^3,2,1^2", "4^4,1^2",   "4^3,1^4"};
    std::vector<DegreeSequence> out;
    for (auto t : texts) out.push_back(parse_sequence(t));
    return out;
  }();
  return set;
}

std::optional<bool> graphic_if_max_four(const DegreeSequence& seq) {
  if (seq.n() < 5 || seq.has_zero() || seq.d(1) != 4 || seq.sigma() % 2 != 0) {
    return std::nullopt;
  }
  const auto& excluded = max_four_exceptions();
  return std::find(excluded.begin(), excluded.end(), seq) == excluded.end();
}

namespace {

long long parse_nonnegative(std::string_view token, std::string_view whole) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw InvalidInput("malformed token '" + std::string(whole) + "'");
  }
  if (value < 0) {
    throw InvalidInput("negative value in token '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> parse_terms(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    const auto caret = token.find('^');
    const long long base = parse_nonnegative(token.substr(0, caret), token);
    long long count = 1;
    if (caret != std::string_view::npos) {
      count = parse_nonnegative(token.substr(caret + 1), token);
    }
    if (base > kMaxRunLength) {
      throw InvalidInput("value too large in token '" + std::string(token) + "'");
    }
    if (count > kMaxRunLength ||
        static_cast<long long>(out.size()) + count > kMaxRunLength) {
      throw InvalidInput("run-length count overflow in token '" + std::string(token) + "'");
    }
    out.insert(out.end(), static_cast<std::size_t>(count), static_cast<int>(base));
  }
  return out;
}

DegreeSequence parse_sequence(std::string_view text) {
  return DegreeSequence::normalize(parse_terms(text));
}

std::string render(std::span<const int> terms) {
  std::string out;
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(terms[i]);
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

}  // namespace kgraphic
