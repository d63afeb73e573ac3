#pragma once

// Token accuracy, exact match, edit similarity and mean reciprocal rank.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tyco/error.hpp"

namespace tyco::metrics {

// UTF-8 code points; a stray byte counts as one unit.
inline std::vector<char32_t> code_points(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    int n = c < 0x80 ? 1 : (c >> 5) == 6 ? 2 : (c >> 4) == 14 ? 3 : (c >> 3) == 30 ? 4 : 0;
    if (n == 0 || i + static_cast<std::size_t>(n) > s.size()) {
      out.push_back(0x110000u + c);
      ++i;
      continue;
    }
    char32_t cp = n == 1 ? c : c & (0x7F >> n);
    bool ok = true;
    for (int k = 1; k < n; ++k) {
      const auto d = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
      if ((d >> 6) != 2) ok = false;
      cp = (cp << 6) | (d & 0x3F);
    }
    if (!ok) {
      out.push_back(0x110000u + c);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(n);
  }
  return out;
}

template <class Seq>
std::size_t levenshtein_seq(const Seq& a, const Seq& b) {
  const std::size_t n = a.size(), m = b.size();
  std::size_t small[2][64];
  std::vector<std::size_t> big;
  std::size_t *prev = small[0], *cur = small[1];
  if (m + 1 > 64) {
    big.resize(2 * (m + 1));
    prev = big.data();
    cur = big.data() + m + 1;
  }
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[m];
}

inline bool is_ascii(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

// Character-level unit-cost edit distance.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (is_ascii(a) && is_ascii(b)) return levenshtein_seq(a, b);
  return levenshtein_seq(code_points(a), code_points(b));
}

// 100 * (1 - distance / max length), max length floored at 1.
inline double edit_similarity(std::string_view pred, std::string_view gold) {
  const auto d = levenshtein(pred, gold);
  const bool ascii = is_ascii(pred) && is_ascii(gold);
  const auto la = ascii ? pred.size() : code_points(pred).size();
  const auto lb = ascii ? gold.size() : code_points(gold).size();
  const auto len = std::max<std::size_t>({la, lb, 1});
  return 100.0 * (1.0 - static_cast<double>(d) / static_cast<double>(len));
}

inline std::string_view rtrim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool exact_match(std::string_view pred, std::string_view gold) { return rtrim(pred) == rtrim(gold); }

inline constexpr std::size_t kMrrRank = 5;

// Reciprocal rank of gold in the first R candidates, 0 when absent.
template <class T>
double reciprocal_rank(std::span<const T> candidates, const T& gold, std::size_t R = kMrrRank) {
  const auto n = std::min(R, candidates.size());
  for (std::size_t i = 0; i < n; ++i)
    if (candidates[i] == gold) return 1.0 / static_cast<double>(i + 1);
  return 0.0;
}

template <class T>
struct RankItem {
  std::vector<T> candidates;
  T gold;
};

template <class T>
double mrr(std::span<const RankItem<T>> items, std::size_t R = kMrrRank) {
  if (items.empty()) return 0.0;
  double s = 0;
  for (const auto& it : items) s += reciprocal_rank<T>(it.candidates, it.gold, R);
  return s / static_cast<double>(items.size());
}

// Percent of matching positions, skipping positions whose gold is excluded.
template <class T, class Excluded>
double token_accuracy(std::span<const T> pred, std::span<const T> gold, Excluded&& excluded) {
  if (pred.size() != gold.size())
    throw ContractError("token_accuracy over sequences of different length: " + std::to_string(pred.size()) +
                        " vs " + std::to_string(gold.size()));
  std::size_t n = 0, ok = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (excluded(gold[i])) continue;
    ++n;
    ok += pred[i] == gold[i];
  }
  return n == 0 ? 0.0 : 100.0 * static_cast<double>(ok) / static_cast<double>(n);
}

template <class T>
double token_accuracy(std::span<const T> pred, std::span<const T> gold) {
  return token_accuracy(pred, gold, [](const T&) { return false; });
}

// ---------------------------------------------------------------------------
// Running tallies and the report.

struct Ratio {
  std::size_t hit = 0, total = 0;
  void add(bool ok) {
    ++total;
    hit += ok;
  }
  double percent() const { return total == 0 ? 0.0 : 100.0 * static_cast<double>(hit) / static_cast<double>(total); }
};

struct TokenTally {
  Ratio all;
  Ratio no_literals;
  std::map<std::string, Ratio> per_type;
  double rr_sum = 0;  // reciprocal ranks over the same positions

  void add(bool ok, const std::string& type, bool literal, double rr) {
    all.add(ok);
    if (!literal) no_literals.add(ok);
    per_type[type].add(ok);
    rr_sum += rr;
  }
  double mrr() const { return all.total == 0 ? 0.0 : rr_sum / static_cast<double>(all.total); }
};

struct LineTally {
  std::size_t n = 0, exact = 0;
  double es_sum = 0;

  void add(std::string_view pred, std::string_view gold) {
    ++n;
    exact += exact_match(pred, gold);
    es_sum += edit_similarity(rtrim(pred), rtrim(gold));
  }
  double em() const { return n == 0 ? 0.0 : 100.0 * static_cast<double>(exact) / static_cast<double>(n); }
  double es() const { return n == 0 ? 0.0 : es_sum / static_cast<double>(n); }
};

struct EvalReport {
  double token_accuracy = 0;
  double token_accuracy_no_literals = 0;
  double em = 0;
  double es = 0;
  double mrr = 0;
  std::map<std::string, double> per_type_accuracy;
  std::map<std::string, std::size_t> per_type_positions;
  std::size_t token_positions = 0;
  std::size_t literal_positions = 0;
  std::size_t line_samples = 0;

  static EvalReport from(const TokenTally& t, const LineTally& l) {
    EvalReport r;
    r.token_accuracy = t.all.percent();
    r.token_accuracy_no_literals = t.no_literals.percent();
    r.mrr = t.mrr();
    for (const auto& [k, v] : t.per_type) {
      r.per_type_accuracy[k] = v.percent();
      r.per_type_positions[k] = v.total;
    }
    r.token_positions = t.all.total;
    r.literal_positions = t.all.total - t.no_literals.total;
    r.em = l.em();
    r.es = l.es();
    r.line_samples = l.n;
    return r;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["token_accuracy"] = token_accuracy;
    j["token_accuracy_no_literals"] = token_accuracy_no_literals;
    j["em"] = em;
    j["es"] = es;
    j["mrr"] = mrr;
    j["per_type_accuracy"] = per_type_accuracy;
    j["counts"] = {{"token_positions", token_positions},
                   {"literal_positions", literal_positions},
                   {"line_samples", line_samples},
                   {"per_type_positions", per_type_positions}};
    return j;
  }
};

// Mean and sample standard deviation over repeated runs.
struct SeedStats {
  double mean = 0, stddev = 0;
  std::size_t n = 0;
};

inline SeedStats summarize(std::span<const double> xs) {
  SeedStats s;
  s.n = xs.size();
  if (xs.empty()) return s;
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double v = 0;
    for (double x : xs) v += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(v / static_cast<double>(xs.size() - 1));
  }
  return s;
}

}  // namespace tyco::metrics
