#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "support.hpp"
#include "tyco/corpus.hpp"

using namespace tyco;
using namespace tyco::corpus;
namespace fs = std::filesystem;

namespace {

std::vector<TypedToken> strings_of(std::vector<std::pair<std::string, int>> spec) {
  std::vector<TypedToken> out;
  for (auto& [text, n] : spec)
    for (int i = 0; i < n; ++i) out.push_back({text, TokenType::STRING, 1, 0});
  return out;
}

}  // namespace

TEST_CASE("most frequent string heads the table") {
  std::vector<std::vector<TypedToken>> files{strings_of({{"'utf-8'", 50}, {"'ascii'", 3}}),
                                             strings_of({{"\"latin-1\"", 7}})};
  auto t = build_literal_tables(files);
  REQUIRE(t.top_strings.size() == 3);
  CHECK(t.top_strings[0] == "utf-8");
  CHECK(t.top_strings[1] == "latin-1");
  CHECK(t.string_counts.at("utf-8") == 50);
}

TEST_CASE("frequency ties break lexicographically") {
  std::vector<std::vector<TypedToken>> files{strings_of({{"'b'", 2}, {"'a'", 2}, {"'c'", 1}})};
  auto t = build_literal_tables(files);
  CHECK(t.top_strings == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("tables truncate at 200 strings and 30 numbers") {
  std::vector<TypedToken> toks;
  for (int i = 0; i < 300; ++i) {
    toks.push_back({"'s" + std::to_string(i) + "'", TokenType::STRING, 1, 0});
    toks.push_back({std::to_string(i), TokenType::NUMBER, 1, 0});
  }
  std::vector<std::vector<TypedToken>> files{toks};
  auto t = build_literal_tables(files);
  CHECK(t.top_strings.size() == 200);
  CHECK(t.top_numbers.size() == 30);
  CHECK(build_literal_tables(std::span<const std::vector<TypedToken>>{}).top_strings.empty());
}

TEST_CASE("masking examples") {
  LiteralTables t;
  t.top_strings = {"utf-8", "a b"};
  t.top_numbers = {"1"};
  CHECK(mask_token({"'utf-8'", TokenType::STRING, 1, 0}, t) == "<STR_LIT:utf-8>");
  CHECK(mask_token({"'x9q!'", TokenType::STRING, 1, 0}, t) == "<STR_LIT>");
  CHECK(mask_token({"1", TokenType::NUMBER, 1, 0}, t) == "<NUM_LIT:1>");
  CHECK(mask_token({"2", TokenType::NUMBER, 1, 0}, t) == "<NUM_LIT>");
  CHECK(mask_token({"\"a b\"", TokenType::STRING, 1, 0}, t) == "<STR_LIT:a%20b>");
  CHECK(mask_token({"", TokenType::EOL, 1, 0}, t) == "<EOL>");
  CHECK(mask_token({"", TokenType::INDENT, 1, 0}, t) == "<INDENT>");
  CHECK(mask_token({"", TokenType::DEDENT, 1, 0}, t) == "<DEDENT>");
  CHECK(mask_token({"foo", TokenType::NAME, 1, 0}, t) == "foo");
}

TEST_CASE("literal values lose prefixes and quotes") {
  auto v = [](std::string s) { return literal_value({s, TokenType::STRING, 1, 0}); };
  CHECK(v("'abc'") == "abc");
  CHECK(v("\"\"\"doc\"\"\"") == "doc");
  CHECK(v("rb'\\d'") == "\\d");
  CHECK(v("f\"{x}\"") == "{x}");
  CHECK(v("''") == "");
  CHECK(v("''''''") == "");
}

TEST_CASE("percent encoding round-trips and leaves no separators") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    const auto n = rng.below(12);
    for (std::uint64_t k = 0; k < n; ++k) s += static_cast<char>(rng.below(128));
    const auto e = percent_encode(s);
    CHECK(e.find_first_of(" <>\n\t\r") == std::string::npos);
    CHECK(percent_decode(e) == s);
  }
}

TEST_CASE("sample serialization") {
  Sample s{{"<s>", "x", "</s>"}, {"<s>", "<NAME>", "</s>"}};
  auto [c, t] = serialize_sample(s);
  CHECK(c == "<s> x </s>");
  CHECK(t == "<s> <NAME> </s>");
  CHECK(parse_sample(c, t) == s);
  CHECK_THROWS_AS(parse_sample("<s> x y </s>", "<s> <NAME> </s>"), CorpusFormatError);
  CHECK_THROWS_AS(parse_sample("x", "<NAME>"), CorpusFormatError);
}

TEST_CASE("nested blocks carry one INDENT per block, not per line") {
  const std::string src =
      "def f(a):\n"
      "    if a:\n"
      "        x = 1\n"
      "        y = 2\n"
      "        z = 3\n"
      "    return a\n";
  auto s = make_sample(lexer::tokenize(src), LiteralTables{});
  CHECK(std::count(s.code.begin(), s.code.end(), "<INDENT>") == 2);
  CHECK(std::count(s.code.begin(), s.code.end(), "<DEDENT>") == 2);
}

TEST_CASE("bundled corpus build") {
  const auto sources = collect_sources(testing::data_dir() / "corpus");
  REQUIRE(sources.size() >= 200);
  CorpusConfig cfg;
  cfg.seed = 11;
  const auto c = build_corpus(sources, cfg);
  const auto n = c.train.samples.size() + c.valid.samples.size() + c.test.samples.size();
  CHECK(n + c.excluded.size() == sources.size());
  CHECK(c.train.samples.size() == static_cast<std::size_t>(0.8 * static_cast<double>(n) + 0.5));
  CHECK(c.tables.top_strings.size() <= 200);
  CHECK(c.tables.top_numbers.size() <= 30);

  SECTION("split is seeded and covers each file once") {
    auto again = build_corpus(sources, cfg);
    CHECK(again.train.files == c.train.files);
    CHECK(again.test_lines.size() == c.test_lines.size());
    cfg.seed = 12;
    CHECK(build_corpus(sources, cfg).train.files != c.train.files);
    std::set<std::string> seen;
    for (const auto* sp : {&c.train, &c.valid, &c.test})
      for (const auto& f : sp->files) CHECK(seen.insert(f).second);
  }

  SECTION("type words equal the lexer types of the source file") {
    std::map<std::string, const SourceFile*> by_path;
    for (const auto& s : sources) by_path[s.path] = &s;
    for (const auto* sp : {&c.train, &c.valid, &c.test}) {
      for (std::size_t i = 0; i < sp->samples.size(); ++i) {
        const auto& s = sp->samples[i];
        auto toks = lexer::tokenize(by_path.at(sp->files[i])->text);
        std::vector<std::string> expect;
        for (const auto& t : toks) expect.push_back(type_token(t.ttype));
        CHECK(std::vector<std::string>(s.types.begin() + 1, s.types.end() - 1) == expect);
      }
    }
  }

  SECTION("no raw literal survives masking") {
    for (const auto& s : c.train.samples) {
      for (std::size_t i = 0; i < s.code.size(); ++i) {
        if (s.types[i] == "<STRING>") {
          CHECK(s.code[i].starts_with("<STR_LIT"));
          CHECK(s.code[i].ends_with(">"));
        }
        if (s.types[i] == "<NUMBER>") CHECK(s.code[i].starts_with("<NUM_LIT"));
        CHECK(s.code[i].find(' ') == std::string::npos);
      }
    }
  }

  SECTION("serialization round-trips every sample") {
    for (const auto* sp : {&c.train, &c.valid, &c.test}) {
      for (const auto& s : sp->samples) {
        auto [code, type] = serialize_sample(s);
        CHECK(parse_sample(code, type) == s);
      }
    }
  }

  SECTION("line samples cut after the first ten words and stop at EOL") {
    REQUIRE(!c.test_lines.empty());
    for (const auto& l : c.test_lines) {
      CHECK(l.context.size() >= 10);
      REQUIRE(!l.gold.empty());
      for (const auto& w : l.gold) CHECK_FALSE(is_marker(w));
    }
  }

  SECTION("disk round-trip") {
    const auto dir = fs::temp_directory_path() / "tyco_corpus_test";
    fs::remove_all(dir);
    write_corpus(dir, c);
    CHECK(read_split(dir, "train") == c.train.samples);
    CHECK(read_split(dir, "test") == c.test.samples);
    auto lines = read_line_samples(dir / "test_line.jsonl");
    REQUIRE(lines.size() == c.test_lines.size());
    CHECK(lines[0].gold == c.test_lines[0].gold);
    CHECK(read_literals(dir).top_strings == c.tables.top_strings);
    fs::remove_all(dir);
  }
}

TEST_CASE("files with ERRORTOKEN are excluded") {
  std::vector<SourceFile> src{{"good.py", "x = 1\n"}, {"bad.py", "x = $\n"}, {"ok.py", "y = 2\n"}};
  auto c = build_corpus(src, {});
  CHECK(c.excluded == std::vector<std::string>{"bad.py"});
  CHECK(c.train.samples.size() + c.valid.samples.size() + c.test.samples.size() == 2);
}
