#include "kgraphic/decider.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "kgraphic/errors.hpp"

namespace kgraphic {

extern const char kBuiltinCatalogText[];

// ---------------------------------------------------------------------------
// Patterns

std::string AffineInt::str() const {
  if (coeff_n == 0) return std::to_string(offset);
  std::string out = coeff_n == 1 ? "n" : std::to_string(coeff_n) + "n";
  if (offset > 0) out += "+" + std::to_string(offset);
  if (offset < 0) out += "-" + std::to_string(-offset);
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput("bad integer '" + std::string(s) + "' in pattern term '" +
                       std::string(context) + "'");
  }
  return v;
}

// "7", "n", "n-3", "n+1", optionally wrapped in parentheses.
AffineInt parse_affine(std::string_view s, std::string_view context) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw InvalidInput("empty expression in pattern term '" + std::string(context) + "'");
  if (s.front() != 'n') {
    const int v = parse_int(s, context);
    if (v < 0) throw InvalidInput("negative constant in pattern term '" + std::string(context) + "'");
    return {0, v};
  }
  if (s.size() == 1) return {1, 0};
  const char sign = s[1];
  if (sign != '-' && sign != '+') {
    throw InvalidInput("expected n-<int> in pattern term '" + std::string(context) + "'");
  }
  const int off = parse_int(s.substr(2), context);
  return {1, sign == '-' ? -off : off};
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

PatternSequence PatternSequence::parse(std::string id, std::string_view text) {
  PatternSequence p;
  p.id = std::move(id);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    if (token.empty()) throw InvalidInput("empty term in pattern '" + std::string(text) + "'");
    const auto caret = token.find('^');
    PatternTerm term;
    term.value = parse_affine(token.substr(0, caret), token);
    if (caret != std::string_view::npos) term.count = parse_affine(token.substr(caret + 1), token);
    p.terms.push_back(term);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return p;
}

std::optional<std::vector<int>> PatternSequence::instantiate(int n) const {
  std::vector<int> out;
  for (const auto& term : terms) {
    const int count = term.count.at(n);
    const int value = term.value.at(n);
    if (count < 0) return std::nullopt;
    if (count > 0 && value < 0) return std::nullopt;
    if (static_cast<int>(out.size()) + count > n) return std::nullopt;
    out.insert(out.end(), static_cast<std::size_t>(count), value);
  }
  if (static_cast<int>(out.size()) != n) return std::nullopt;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string PatternSequence::str() const {
  std::string out;
  for (const auto& term : terms) {
    if (!out.empty()) out += ',';
    out += term.value.str();
    if (term.count != AffineInt{0, 1}) {
      out += '^';
      out += term.count.coeff_n != 0 ? "(" + term.count.str() + ")" : term.count.str();
    }
  }
  return out;
}

bool match_parametric(const DegreeSequence& seq, const PatternSequence& pattern) {
  const auto inst = pattern.instantiate(seq.n());
  return inst && *inst == seq.vector();
}

// ---------------------------------------------------------------------------
// Catalog

std::string fnv1a64_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExceptionCatalog ExceptionCatalog::parse(std::string_view text) {
  ExceptionCatalog cat;
  cat.checksum_ = fnv1a64_hex(text);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) {
      throw InvalidInput("catalog line " + std::to_string(line_no) + ": expected '<id> <pattern>'");
    }
    std::string id(line.substr(0, sp));
    auto pattern = PatternSequence::parse(id, trim(line.substr(sp)));
    if (cat.find(id) != nullptr) {
      throw InvalidInput("catalog line " + std::to_string(line_no) + ": duplicate id " + id);
    }
    if (id.rfind("k24-", 0) == 0) {
      cat.k24_.push_back(std::move(pattern));
    } else if (id.rfind("k25-", 0) == 0) {
      cat.k25_.push_back(std::move(pattern));
    } else {
      throw InvalidInput("catalog line " + std::to_string(line_no) + ": unknown id prefix " + id);
    }
  }
  return cat;
}

ExceptionCatalog ExceptionCatalog::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open catalog " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string_view ExceptionCatalog::builtin_text() { return kBuiltinCatalogText; }

const ExceptionCatalog& ExceptionCatalog::builtin() {
  static const ExceptionCatalog cat = parse(builtin_text());
  return cat;
}

const PatternSequence* ExceptionCatalog::find(std::string_view id) const {
  for (const auto* list : {&k24_, &k25_}) {
    for (const auto& p : *list) {
      if (p.id == id) return &p;
    }
  }
  return nullptr;
}

ExceptionCatalog ExceptionCatalog::merged(const ExceptionCatalog& extra) const {
  ExceptionCatalog out = *this;
  for (const auto* list : {&extra.k24_, &extra.k25_}) {
    for (const auto& p : *list) {
      if (out.find(p.id) != nullptr) throw InvalidInput("duplicate catalog id " + p.id);
      (list == &extra.k24_ ? out.k24_ : out.k25_).push_back(p);
    }
  }
  out.checksum_ = fnv1a64_hex(checksum_ + extra.checksum_);
  return out;
}

// ---------------------------------------------------------------------------
// Condition (3) decompositions

std::vector<Condition3Match> condition3_decompositions(const DegreeSequence& seq) {
  std::vector<Condition3Match> out;
  const int n = seq.n();
  if (n < 7) return out;
  for (int l = 2; l <= 4; ++l) {
    if (n - l < 5 || seq.d(1) != n - l) continue;
    int count[6] = {0, 0, 0, 0, 0, 0};
    bool shape_ok = true;
    for (int pos = 2; pos <= n; ++pos) {
      const int d = seq.d(pos);
      if (d < 1 || d > 5) {
        shape_ok = false;
        break;
      }
      ++count[d];
    }
    if (!shape_ok || count[1] != n - 7 || count[5] < 1) continue;
    Condition3Match m;
    m.l = l;
    m.i = count[5];
    m.j = count[4];
    m.k = count[3];
    m.t = count[2];
    std::vector<int> residual;
    residual.insert(residual.end(), static_cast<std::size_t>(m.i - 1), 3);
    residual.insert(residual.end(), static_cast<std::size_t>(m.j), 2);
    residual.insert(residual.end(), static_cast<std::size_t>(m.k + l - 2), 1);
    m.residual = DegreeSequence::normalize(residual);
    m.residual_graphic = is_graphic(m.residual);
    out.push_back(std::move(m));
  }
  return out;
}

DegreeSequence forced_residual(const DegreeSequence& raw, int l) {
  const DegreeSequence seq = raw.has_zero() ? raw.without_zeros() : raw;
  const int n = seq.n();
  const std::string name = "sequence " + render(seq);
  if (n < 7) throw NotApplicable(name + " is shorter than 7");
  if (seq.d(1) != n - l || seq.d(2) != 5) {
    throw NotApplicable(name + " does not start with (n-" + std::to_string(l) + ", 5)");
  }
  std::vector<int> residual;
  for (int pos = 3; pos <= 7; ++pos) {
    if (seq.d(pos) < 2) throw NotApplicable(name + ": d_" + std::to_string(pos) + " < 2");
    residual.push_back(seq.d(pos) - 2);
  }
  const int extra = n - l - 5;
  std::vector<int> pool;
  for (int pos = 8; pos <= n; ++pos) pool.push_back(seq.d(pos));
  const bool fills_pool = extra == static_cast<int>(pool.size());
  const bool uniform = !pool.empty() && pool.front() == pool.back();
  if (extra < 0 || extra > static_cast<int>(pool.size()) || !(fills_pool || uniform)) {
    throw NotApplicable(name + ": edges of vertex 1 outside the K_{2,5} are not forced");
  }
  // pool is nonincreasing, so the first `extra` entries receive vertex 1.
  for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
    residual.push_back(i < extra ? pool[static_cast<std::size_t>(i)] - 1
                                 : pool[static_cast<std::size_t>(i)]);
  }
  return DegreeSequence::normalize(residual);
}

bool necessary_residual_check(const DegreeSequence& seq, int l) {
  return is_graphic(forced_residual(seq, l));
}

// ---------------------------------------------------------------------------
// Verdicts

std::string Verdict::reason_string() const {
  switch (reason) {
    case Reason::Pass: return "Pass";
    case Reason::ConditionFailed: return "ConditionFailed(" + std::to_string(failed_condition) + ")";
    case Reason::ExceptionMatched: return "ExceptionMatched(" + matched_exception + ")";
  }
  return "?";
}

namespace {

DegreeSequence in_scope(const DegreeSequence& raw, int min_n, const char* what) {
  DegreeSequence seq = raw.has_zero() ? raw.without_zeros() : raw;
  if (seq.n() < min_n) {
    throw OutOfScope(std::string(what) + " needs at least " + std::to_string(min_n) +
                     " positive terms, got " + std::to_string(seq.n()));
  }
  if (!is_graphic(seq)) throw OutOfScope("sequence " + render(seq) + " is not graphic");
  return seq;
}

void fail(Verdict& v, int condition) {
  if (v.decision) {
    v.decision = false;
    v.reason = Verdict::Reason::ConditionFailed;
    v.failed_condition = condition;
  }
}

void check_exceptions(Verdict& v, const DegreeSequence& seq,
                      const std::vector<PatternSequence>& patterns, int condition) {
  std::string matched;
  for (const auto& p : patterns) {
    if (match_parametric(seq, p)) {
      matched = p.id;
      break;
    }
  }
  v.trace.push_back({"condition " + std::to_string(condition) + ": not an exception",
                     matched.empty(), matched.empty() ? "" : "matches " + matched});
  if (!matched.empty() && v.decision) {
    v.decision = false;
    v.reason = Verdict::Reason::ExceptionMatched;
    v.matched_exception = matched;
  }
}

// Shared shape of conditions (1) and (2) for K_{2,s}: d_2 >= s, d_{s+2} >= 2,
// and if d_1 = n-1 with d_2 = s then d_3 = s and d_{s+2} >= 3.
void check_degree_conditions(Verdict& v, const DegreeSequence& seq, int s) {
  const int n = seq.n();
  const int d1 = seq.d(1), d2 = seq.d(2), d3 = seq.d(3), last = seq.d(s + 2);
  const std::string last_name = "d_" + std::to_string(s + 2);

  const bool c1 = d2 >= s && last >= 2;
  v.trace.push_back({"condition 1: d_2 >= " + std::to_string(s) + " and " + last_name + " >= 2", c1,
                     "d_2=" + std::to_string(d2) + " " + last_name + "=" + std::to_string(last)});
  if (!c1) fail(v, 1);

  const bool premise = d1 == n - 1 && d2 == s;
  const bool c2 = !premise || (d3 == s && last >= 3);
  v.trace.push_back({"condition 2: d_1 = n-1 and d_2 = " + std::to_string(s) + " imply d_3 = " +
                         std::to_string(s) + " and " + last_name + " >= 3",
                     c2, premise ? "premise holds, d_3=" + std::to_string(d3) : "premise false"});
  if (!c2) fail(v, 2);
}

}  // namespace

Verdict is_potentially_k24(const DegreeSequence& raw, const ExceptionCatalog& catalog) {
  const DegreeSequence seq = in_scope(raw, 6, "K_{2,4} characterization");
  Verdict v;
  v.decision = true;
  check_degree_conditions(v, seq, 4);
  check_exceptions(v, seq, catalog.k24(), 3);
  return v;
}

Verdict is_potentially_k25(const DegreeSequence& raw, const ExceptionCatalog& catalog) {
  const DegreeSequence seq = in_scope(raw, 7, "K_{2,5} characterization");
  Verdict v;
  v.decision = true;
  check_degree_conditions(v, seq, 5);

  v.condition3 = condition3_decompositions(seq);
  bool c3 = true;
  std::string detail;
  for (const auto& m : v.condition3) {
    if (!detail.empty()) detail += "; ";
    detail += "l=" + std::to_string(m.l) + " i=" + std::to_string(m.i) + " j=" + std::to_string(m.j) +
              " k=" + std::to_string(m.k) + " t=" + std::to_string(m.t) + " residual (" +
              render(m.residual) + ") " + (m.residual_graphic ? "graphic" : "not graphic");
    c3 = c3 && m.residual_graphic;
  }
  v.trace.push_back({"condition 3: forced residuals graphic", c3,
                     v.condition3.empty() ? "no decomposition" : detail});
  if (!c3) fail(v, 3);

  check_exceptions(v, seq, catalog.k25(), 4);
  return v;
}

}  // namespace kgraphic
