#include "modcanon/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "modcanon/numbers.hpp"

namespace modcanon {

namespace {

// Multiplicity of every time in [0, n) of A +_n B (n = 0 means no reduction,
// and the vector covers [0, maxA+maxB]).
std::vector<uint32_t> sum_counts(const RhythmicPattern& a,
                                 const RhythmicPattern& b, uint64_t n) {
  const uint64_t size = n > 0
                            ? n
                            : static_cast<uint64_t>(a.max()) + b.max() + 1;
  std::vector<uint32_t> counts(size, 0);
  for (int64_t x : a.onsets()) {
    for (int64_t y : b.onsets()) {
      const uint64_t t = n > 0 ? static_cast<uint64_t>(x + y) % n
                               : static_cast<uint64_t>(x + y);
      ++counts[t];
    }
  }
  return counts;
}

bool counts_are_tiling(const std::vector<uint32_t>& counts, Modulus modulus) {
  if (modulus.is_exact()) {
    return std::all_of(counts.begin(), counts.end(),
                       [](uint32_t c) { return c == 1; });
  }
  const uint32_t p = modulus.p().value();
  return std::all_of(counts.begin(), counts.end(),
                     [&](uint32_t c) { return c % p == 1; });
}

} // namespace

std::string word_to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (uint32_t c : w) {
    if (c <= 9) {
      out.push_back(static_cast<char>('0' + c));
    } else {
      out += "[" + std::to_string(c) + "]";
    }
  }
  return out;
}

Word word_from_string(std::string_view digits) {
  Word out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("word must be digits");
    out.push_back(static_cast<uint32_t>(c - '0'));
  }
  return out;
}

RhythmicPattern::RhythmicPattern(std::vector<int64_t> onsets)
    : onsets_(std::move(onsets)) {
  std::sort(onsets_.begin(), onsets_.end());
  if (onsets_.empty()) throw std::invalid_argument("pattern must be non-empty");
  if (onsets_.front() != 0) throw std::invalid_argument("pattern must contain 0");
  if (std::adjacent_find(onsets_.begin(), onsets_.end()) != onsets_.end()) {
    throw std::invalid_argument("pattern onsets must be distinct");
  }
}

bool RhythmicPattern::contains(int64_t t) const {
  return std::binary_search(onsets_.begin(), onsets_.end(), t);
}

std::string RhythmicPattern::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < onsets_.size(); ++i) {
    if (i) os << ",";
    os << onsets_[i];
  }
  os << "}";
  return os.str();
}

RhythmicPattern parse_pattern(std::string_view text) {
  std::string content(text);
  if (!content.empty() && content.front() == '@') {
    std::ifstream in(content.substr(1));
    if (!in) throw std::invalid_argument("cannot open pattern file " + content.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    content = buf.str();
  }
  std::vector<int64_t> onsets;
  std::string token;
  std::istringstream is(content);
  while (std::getline(is, token, ',')) {
    // Allow surrounding whitespace and newlines inside files.
    const auto first = token.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const auto last = token.find_last_not_of(" \t\r\n");
    int64_t value = 0;
    const char* begin = token.data() + first;
    const char* end = token.data() + last + 1;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || value < 0) {
      throw std::invalid_argument("bad onset '" + token + "'");
    }
    onsets.push_back(value);
  }
  return RhythmicPattern(std::move(onsets));
}

OnsetMultiset OnsetMultiset::from_times(std::vector<int64_t> times) {
  std::sort(times.begin(), times.end());
  OnsetMultiset out;
  for (int64_t t : times) {
    if (!out.counts_.empty() && out.counts_.back().first == t) {
      ++out.counts_.back().second;
    } else {
      out.counts_.emplace_back(t, 1u);
    }
  }
  return out;
}

OnsetMultiset OnsetMultiset::from_counts(
    std::vector<std::pair<int64_t, uint32_t>> counts) {
  std::sort(counts.begin(), counts.end());
  OnsetMultiset out;
  for (const auto& [t, c] : counts) {
    if (c == 0) continue;
    if (!out.counts_.empty() && out.counts_.back().first == t) {
      out.counts_.back().second += c;
    } else {
      out.counts_.emplace_back(t, c);
    }
  }
  return out;
}

uint32_t OnsetMultiset::multiplicity(int64_t t) const {
  const auto it = std::lower_bound(
      counts_.begin(), counts_.end(), t,
      [](const auto& entry, int64_t value) { return entry.first < value; });
  return it != counts_.end() && it->first == t ? it->second : 0u;
}

uint64_t OnsetMultiset::total_size() const {
  uint64_t total = 0;
  for (const auto& [t, c] : counts_) total += c;
  return total;
}

int64_t OnsetMultiset::max_time() const {
  return counts_.empty() ? -1 : counts_.back().first;
}

std::string OnsetMultiset::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [t, c] : counts_) {
    if (!first) os << ",";
    first = false;
    os << t << ":" << c;
  }
  os << "}";
  return os.str();
}

PrimeModulus Modulus::p() const {
  if (!p_) throw std::logic_error("exact modulus has no prime");
  return *p_;
}

std::string Modulus::to_string() const {
  return is_exact() ? "exact" : std::to_string(p_->value());
}

FpPoly pattern_to_poly(const RhythmicPattern& a, PrimeModulus p) {
  std::vector<uint32_t> coeffs(static_cast<size_t>(a.max()) + 1, 0);
  for (int64_t t : a.onsets()) coeffs[static_cast<size_t>(t)] = 1;
  return FpPoly(p, std::move(coeffs));
}

IntPoly pattern_to_int_poly(const RhythmicPattern& a) {
  std::vector<long long> coeffs(static_cast<size_t>(a.max()) + 1, 0);
  for (int64_t t : a.onsets()) coeffs[static_cast<size_t>(t)] = 1;
  return IntPoly(std::move(coeffs));
}

Word pattern_to_word(const RhythmicPattern& a, size_t length) {
  if (length < static_cast<size_t>(a.max()) + 1) {
    throw std::invalid_argument("word length too small for pattern");
  }
  Word out(length, 0);
  for (int64_t t : a.onsets()) out[static_cast<size_t>(t)] = 1;
  return out;
}

OnsetMultiset multiset_sum(const RhythmicPattern& a, const RhythmicPattern& b,
                           std::optional<uint64_t> n) {
  if (n && *n == 0) throw std::invalid_argument("period must be >= 1");
  std::vector<int64_t> times;
  times.reserve(a.size() * b.size());
  for (int64_t x : a.onsets()) {
    for (int64_t y : b.onsets()) {
      const int64_t t = x + y;
      times.push_back(n ? t % static_cast<int64_t>(*n) : t);
    }
  }
  return OnsetMultiset::from_times(std::move(times));
}

Word char_word(const OnsetMultiset& c, PrimeModulus p, size_t length) {
  if (c.max_time() >= 0 && length < static_cast<size_t>(c.max_time()) + 1) {
    throw std::invalid_argument("word length too small for multiset");
  }
  Word out(length, 0);
  for (const auto& [t, count] : c.counts()) {
    out[static_cast<size_t>(t)] = count % p.value();
  }
  return out;
}

bool is_tiling(const RhythmicPattern& a, const RhythmicPattern& b, uint64_t n,
               Modulus modulus) {
  if (n == 0) throw std::invalid_argument("period must be >= 1");
  return counts_are_tiling(sum_counts(a, b, n), modulus);
}

std::optional<uint64_t> is_compact(const RhythmicPattern& a,
                                   const RhythmicPattern& b, Modulus modulus) {
  const auto counts = sum_counts(a, b, 0);
  if (!counts_are_tiling(counts, modulus)) return std::nullopt;
  return static_cast<uint64_t>(a.max()) + b.max() + 1;
}

RhythmicPattern concatenate(const RhythmicPattern& a, uint32_t k, uint64_t n) {
  if (k == 0) throw std::invalid_argument("concatenation count must be >= 1");
  if (n == 0) throw std::invalid_argument("period must be >= 1");
  std::vector<int64_t> onsets;
  onsets.reserve(a.size() * k);
  for (uint32_t i = 0; i < k; ++i) {
    const int64_t shift = static_cast<int64_t>(i) * static_cast<int64_t>(n);
    for (int64_t t : a.onsets()) onsets.push_back(t + shift);
  }
  std::sort(onsets.begin(), onsets.end());
  if (std::adjacent_find(onsets.begin(), onsets.end()) != onsets.end()) {
    throw std::invalid_argument("concatenation collides: " + a.to_string() +
                                " with period " + std::to_string(n));
  }
  return RhythmicPattern(std::move(onsets));
}

bool is_periodic(const RhythmicPattern& a, uint64_t n) {
  if (n == 0) throw std::invalid_argument("period must be >= 1");
  std::vector<int64_t> reduced;
  reduced.reserve(a.size());
  for (int64_t t : a.onsets()) reduced.push_back(t % static_cast<int64_t>(n));
  std::sort(reduced.begin(), reduced.end());
  if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end()) {
    throw std::invalid_argument("pattern collides after reduction mod " +
                                std::to_string(n));
  }

  // A nontrivial stabilizer of a subset of Z_n contains n/q for some prime q;
  // checking those shifts is equivalent to checking every 0 < t < n.
  std::vector<int64_t> shifted(reduced.size());
  for (const auto& [q, e] : factorize(n)) {
    const int64_t shift = static_cast<int64_t>(n / q);
    for (size_t i = 0; i < reduced.size(); ++i) {
      shifted[i] = (reduced[i] + shift) % static_cast<int64_t>(n);
    }
    std::sort(shifted.begin(), shifted.end());
    if (shifted == reduced) return true;
  }
  return false;
}

bool is_vuza(const RhythmicPattern& a, const RhythmicPattern& b, uint64_t n,
             Modulus modulus) {
  if (!is_tiling(a, b, n, modulus)) {
    throw std::invalid_argument("is_vuza requires a tiling canon");
  }
  if (n == 1) return false; // trivial canon
  return !is_periodic(a, n) && !is_periodic(b, n);
}

AdmissibilityReport vuza_admissibility(uint64_t n) {
  AdmissibilityReport report{false, factorize(n), ""};
  std::vector<uint32_t> exponents;
  for (const auto& [p, e] : report.factors) exponents.push_back(e);
  std::sort(exponents.rbegin(), exponents.rend());

  const auto matches = [&](std::vector<uint32_t> shape) {
    return exponents == shape;
  };
  switch (exponents.size()) {
    case 0: // n = 1, the trivial group
      report.matched_form = "p^a (a = 0)";
      break;
    case 1:
      report.matched_form = "p^a";
      break;
    case 2:
      if (exponents[1] == 1) {
        report.matched_form = "p^a q";
      } else if (matches({2, 2})) {
        report.matched_form = "p^2 q^2";
      }
      break;
    case 3:
      if (matches({1, 1, 1})) {
        report.matched_form = "pqr";
      } else if (matches({2, 1, 1})) {
        report.matched_form = "p^2 qr";
      }
      break;
    case 4:
      if (matches({1, 1, 1, 1})) report.matched_form = "pqrs";
      break;
    default:
      break;
  }
  report.admissible = report.matched_form.empty();
  return report;
}

bool vuza_admissible(uint64_t n) { return vuza_admissibility(n).admissible; }

OnsetMultiset donsets(const RhythmicPattern& a, const RhythmicPattern& b,
                      uint64_t n, Modulus modulus) {
  if (n == 0) throw std::invalid_argument("period must be >= 1");
  const auto counts = sum_counts(a, b, n);
  if (!counts_are_tiling(counts, modulus)) {
    throw std::invalid_argument("donsets requires a tiling canon");
  }
  std::vector<std::pair<int64_t, uint32_t>> excess;
  for (uint64_t t = 0; t < n; ++t) {
    if (counts[t] > 1) excess.emplace_back(static_cast<int64_t>(t), counts[t] - 1);
  }
  return OnsetMultiset::from_counts(std::move(excess));
}

CanonReport make_canon_report(const RhythmicPattern& tile,
                              const RhythmicPattern& entries, uint64_t n,
                              Modulus modulus) {
  if (!is_tiling(tile, entries, n, modulus)) {
    throw std::invalid_argument("not a tiling canon: " + tile.to_string() + " with " +
                                entries.to_string() + " over Z_" + std::to_string(n));
  }
  CanonReport report{tile,
                     entries,
                     n,
                     modulus,
                     is_compact(tile, entries, modulus) == std::optional<uint64_t>{n},
                     donsets(tile, entries, n, modulus),
                     is_vuza(tile, entries, n, modulus)};
  return report;
}

} // namespace modcanon
