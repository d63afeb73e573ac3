#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <set>

#include <json.hpp>

#include "tyco/metrics.hpp"
#include "tyco/rng.hpp"

using namespace tyco;
using namespace tyco::metrics;
using Catch::Approx;

namespace {

// Textbook exponential recursion.
std::size_t lev_naive(std::string_view a, std::string_view b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  const auto a1 = a.substr(1), b1 = b.substr(1);
  if (a[0] == b[0]) return lev_naive(a1, b1);
  return 1 + std::min({lev_naive(a1, b), lev_naive(a, b1), lev_naive(a1, b1)});
}

std::string random_string(Rng& rng, std::size_t max_len, const char* alphabet, std::size_t k) {
  std::string s;
  const auto n = rng.below(max_len + 1);
  for (std::uint64_t i = 0; i < n; ++i) s += alphabet[rng.below(k)];
  return s;
}

}  // namespace

TEST_CASE("levenshtein examples") {
  CHECK(levenshtein("abc", "abc") == 0);
  CHECK(levenshtein("", "abc") == 3);
  CHECK(levenshtein("abc", "") == 3);
  CHECK(levenshtein("kitten", "sitting") == 3);
  CHECK(levenshtein("flaw", "lawn") == 2);
  // Characters, not bytes.
  CHECK(levenshtein("caf\xC3\xA9", "cafe") == 1);
  CHECK(levenshtein("\xE2\x96\x81x", "x") == 1);
  std::string long_a(200, 'a'), long_b(190, 'a');
  CHECK(levenshtein(long_a, long_b) == 10);
}

TEST_CASE("levenshtein equals the recursive definition on every pair up to length 8 over {a,b,c}") {
  // Node i of the complete ternary trie is a string; its parent is
  // (i - 1) / 3 and its last letter (i - 1) % 3. Filling the table in index
  // order applies the recurrence to every prefix pair exactly once.
  constexpr std::size_t N = 9841;  // (3^9 - 1) / 2 strings of length <= 8
  std::vector<std::string> str(N);
  std::vector<std::uint8_t> len(N, 0);
  for (std::size_t i = 1; i < N; ++i) {
    str[i] = str[(i - 1) / 3] + static_cast<char>('a' + (i - 1) % 3);
    len[i] = static_cast<std::uint8_t>(str[i].size());
  }
  REQUIRE(str[N - 1] == "cccccccc");
  std::vector<std::uint8_t> D(N * N);
  for (std::size_t i = 0; i < N; ++i) {
    const std::size_t pi = i ? (i - 1) / 3 : 0, ci = i ? (i - 1) % 3 : 0;
    for (std::size_t j = 0; j < N; ++j) {
      std::uint8_t v;
      if (i == 0) v = len[j];
      else if (j == 0) v = len[i];
      else {
        const std::size_t pj = (j - 1) / 3, cj = (j - 1) % 3;
        v = static_cast<std::uint8_t>(std::min({D[pi * N + j] + 1, D[i * N + pj] + 1,
                                               D[pi * N + pj] + (ci == cj ? 0 : 1)}));
      }
      D[i * N + j] = v;
    }
  }
  std::size_t mismatches = 0, checked = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      ++checked;
      mismatches += levenshtein(str[i], str[j]) != D[i * N + j];
    }
  CHECK(checked == N * N);
  CHECK(mismatches == 0);
  // The table itself against the plain recursion on a sample.
  Rng rng(4);
  for (int t = 0; t < 300; ++t) {
    const auto i = rng.below(N), j = rng.below(N);
    REQUIRE(lev_naive(str[i], str[j]) == D[i * N + j]);
  }
}

TEST_CASE("levenshtein is a metric") {
  Rng rng(21);
  for (int t = 0; t < 3000; ++t) {
    const auto a = random_string(rng, 10, "abcd", 4);
    const auto b = random_string(rng, 10, "abcd", 4);
    const auto c = random_string(rng, 10, "abcd", 4);
    const auto ab = levenshtein(a, b);
    CHECK(ab == levenshtein(b, a));
    CHECK((ab == 0) == (a == b));
    CHECK(levenshtein(a, c) <= ab + levenshtein(b, c));
    CHECK(ab <= std::max(a.size(), b.size()));
    CHECK(ab >= (a.size() > b.size() ? a.size() - b.size() : b.size() - a.size()));
  }
}

TEST_CASE("edit similarity") {
  CHECK(edit_similarity("abc", "abc") == 100.0);
  CHECK(edit_similarity("", "") == 100.0);
  CHECK(edit_similarity("abc", "xyz") == 0.0);
  CHECK(edit_similarity("ab", "ax") == Approx(50.0));
  CHECK(edit_similarity("", "abcd") == 0.0);
  Rng rng(8);
  for (int t = 0; t < 3000; ++t) {
    const auto n = rng.below(8);
    std::string a, b;
    for (std::uint64_t i = 0; i < n; ++i) {
      a += "abc"[rng.below(3)];
      b += "abc"[rng.below(3)];
    }
    const auto s = random_string(rng, 6, "abc", 3);
    const double es = edit_similarity(a, b);
    CHECK(es >= 0.0);
    CHECK(es <= 100.0);
    CHECK(edit_similarity(a + s, b + s) >= es - 1e-12);
  }
}

TEST_CASE("exact match trims trailing whitespace only") {
  CHECK(exact_match("x = 1", "x = 1"));
  CHECK(exact_match("x = 1  ", "x = 1"));
  CHECK_FALSE(exact_match("x = 1", "x = 2"));
  CHECK_FALSE(exact_match(" x = 1", "x = 1"));
}

TEST_CASE("MRR on the hand-computed fixture") {
  std::ifstream in(std::string(TYCO_TEST_DATA_DIR) + "/mrr_cases.json");
  REQUIRE(in);
  const auto j = nlohmann::json::parse(in);
  REQUIRE(j.size() == 20);
  std::vector<RankItem<std::string>> items;
  for (const auto& c : j) {
    RankItem<std::string> it{c["candidates"].get<std::vector<std::string>>(), c["gold"].get<std::string>()};
    CAPTURE(c.dump());
    CHECK(reciprocal_rank<std::string>(it.candidates, it.gold) == Approx(c["rr"].get<double>()).margin(1e-15));
    items.push_back(std::move(it));
  }
  CHECK(mrr<std::string>(items) == Approx(7.216666666666667 / 20).margin(1e-12));
  CHECK(mrr<std::string>(std::span<const RankItem<std::string>>{}) == 0.0);
  std::vector<RankItem<int>> ones(7, RankItem<int>{{4, 5, 6}, 4});
  CHECK(mrr<int>(ones) == 1.0);
  std::vector<RankItem<int>> third{{{1, 2, 3}, 3}};
  CHECK(mrr<int>(third) == Approx(1.0 / 3));
}

TEST_CASE("MRR ignores candidates below the gold rank") {
  Rng rng(2);
  for (int t = 0; t < 500; ++t) {
    std::vector<int> c(5);
    for (auto& x : c) x = static_cast<int>(rng.below(8));
    const int gold = static_cast<int>(rng.below(8));
    const double rr = reciprocal_rank<int>(c, gold);
    auto pos = std::find(c.begin(), c.end(), gold);
    if (pos == c.end()) continue;
    for (auto it = pos + 1; it != c.end(); ++it) *it = static_cast<int>(rng.below(8));
    CHECK(reciprocal_rank<int>(c, gold) == rr);
  }
}

TEST_CASE("token accuracy") {
  const std::vector<int> g{1, 2, 3, 4};
  CHECK(token_accuracy<int>(g, g) == 100.0);
  const std::vector<int> d{5, 6, 7, 8};
  CHECK(token_accuracy<int>(d, g) == 0.0);
  const std::vector<int> half{1, 0, 3, 0};
  CHECK(token_accuracy<int>(half, g) == 50.0);
  // Positions whose gold is a sentinel or padding do not count.
  const std::vector<int> gs{0, 1, 2, 9};
  const std::vector<int> ps{7, 1, 5, 7};
  auto sentinel = [](int x) { return x == 0 || x == 9; };
  CHECK(token_accuracy<int>(ps, gs, sentinel) == 50.0);
  const std::vector<int> shorter{1, 2};
  CHECK_THROWS_AS(token_accuracy<int>(shorter, g), ContractError);
}

TEST_CASE("tallies and report") {
  TokenTally t;
  t.add(true, "<NAME>", false, 1.0);
  t.add(false, "<NAME>", false, 0.5);
  t.add(true, "<STRING>", true, 1.0);
  t.add(false, "<OP>", false, 0.0);
  LineTally l;
  l.add("x = 1", "x = 1");
  l.add("ab", "ax");
  auto r = EvalReport::from(t, l);
  CHECK(r.token_accuracy == 50.0);
  CHECK(r.token_accuracy_no_literals == Approx(100.0 / 3));
  CHECK(r.mrr == Approx(2.5 / 4));
  CHECK(r.per_type_accuracy["<NAME>"] == 50.0);
  CHECK(r.per_type_accuracy["<OP>"] == 0.0);
  CHECK(r.em == 50.0);
  CHECK(r.es == Approx(75.0));
  CHECK(r.literal_positions == 1);
  auto j = r.to_json();
  for (const char* k : {"token_accuracy", "em", "es", "mrr", "per_type_accuracy", "counts"}) CHECK(j.contains(k));
  for (double v : {r.token_accuracy, r.em, r.es}) {
    CHECK(v >= 0);
    CHECK(v <= 100);
  }

  const std::vector<double> xs{1, 2, 3, 4};
  auto s = summarize(xs);
  CHECK(s.mean == 2.5);
  CHECK(s.stddev == Approx(std::sqrt(5.0 / 3)));
}
