#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "support.hpp"
#include "tyco/align.hpp"

using namespace tyco;
using namespace tyco::align;

TEST_CASE("a split word repeats its type once per subword") {
  std::map<std::string, std::size_t> counts{
      {"logging", 10}, {"logger", 4}, {"log", 4}, {"logg", 4}, {"sing", 6}, {"ring", 6}, {"king", 6}};
  auto specials = vocab_specials({});
  auto v = bpe::train_bpe(counts, 23 + specials.size(), specials);
  corpus::Sample s{{"<s>", "logging", "(", "</s>"}, {"<s>", "<NAME>", "<LPAR>", "</s>"}};
  auto a = align::align(s, v);
  CHECK(check(a).empty());
  REQUIRE(a.boundaries.size() == 4);
  CHECK(a.boundaries[1].second - a.boundaries[1].first == 2);
  CHECK(a.type_ids[1] == v.id("<NAME>"));
  CHECK(a.type_ids[2] == v.id("<NAME>"));
  CHECK(a.boundaries[2].second - a.boundaries[2].first == 1);
  CHECK(a.type_ids[3] == v.id("<LPAR>"));
  CHECK(project_types(a, v) == s.types);
}

TEST_CASE("non-special type word is rejected") {
  auto v = bpe::train_bpe({{"x", 1}}, 8 + vocab_specials({}).size(), vocab_specials({}));
  corpus::Sample s{{"<s>", "x", "</s>"}, {"<s>", "NAME", "</s>"}};
  CHECK_THROWS_AS(align::align(s, v), AlignmentError);
}

TEST_CASE("chunking keeps the invariants") {
  auto p = testing::build_mini_pipeline(1024);
  for (const auto& s : p.corpus.train.samples) {
    auto a = align::align(s, p.vocab);
    std::size_t total = 0;
    for (const auto& c : chunk(a, 64)) {
      CHECK(c.code_ids.size() <= 64);
      CHECK(check(c).empty());
      total += c.code_ids.size();
    }
    CHECK(total == a.code_ids.size());
  }
  CHECK_THROWS_AS(chunk(AlignedSample{}, 1), ConfigError);
}

TEST_CASE("dataset binary round-trip and vocab hash check") {
  auto p = testing::build_mini_pipeline(1024);
  std::vector<AlignedSample> recs;
  for (const auto& s : p.corpus.valid.samples) {
    auto a = align::align(s, p.vocab);
    a.boundaries.clear();
    recs.push_back(std::move(a));
  }
  const auto path = std::filesystem::temp_directory_path() / "tyco_align_test.bin";
  write_dataset(path, recs, p.vocab.hash());
  CHECK(read_dataset(path, p.vocab.hash()) == recs);
  CHECK_THROWS_AS(read_dataset(path, p.vocab.hash() + 1), VocabError);
  std::filesystem::remove(path);
}

TEST_CASE("alignment invariants on the corpus and on fuzzed snippets") {
  auto p = testing::build_mini_pipeline(1024);
  for (const auto* sp : {&p.corpus.train, &p.corpus.valid, &p.corpus.test}) {
    for (const auto& s : sp->samples) {
      auto a = align::align(s, p.vocab);
      CHECK(check(a).empty());
      CHECK(project_types(a, p.vocab) == s.types);
    }
  }
  Rng rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const auto src = testing::fuzz_snippet(rng);
    auto s = corpus::make_sample(lexer::tokenize(src, lexer::LexMode::Prefix), p.corpus.tables);
    auto a = align::align(s, p.vocab);
    INFO(src);
    CHECK(a.code_ids.size() == a.type_ids.size());
    CHECK(check(a).empty());
    CHECK(project_types(a, p.vocab) == s.types);
  }
}
