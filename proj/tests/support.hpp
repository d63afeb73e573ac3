#pragma once

// Helpers shared by the unit tests and the acceptance runner.

#include <filesystem>
#include <string>
#include <vector>

#include "tyco/align.hpp"
#include "tyco/corpus.hpp"
#include "tyco/rng.hpp"

namespace tyco::testing {

inline std::filesystem::path data_dir() { return TYCO_DATA_DIR; }

// Random Python-looking snippet: nested blocks, calls, literals and the odd
// broken construct, so some snippets lex with ERRORTOKEN.
inline std::string fuzz_snippet(Rng& rng) {
  static const char* names[] = {"x", "foo", "bar_1", "logging", "self", "getLogger", "i", "data"};
  static const char* ops[] = {"+", "-", "*", "/", "//", "%", "**", "==", "!=", "<=", ">=",
                              "<", ">", "&", "|", "^", "<<", ">>", "@", "->", "."};
  static const char* assign[] = {"=", "+=", "-=", "*=", "//=", "**=", "|=", ">>="};
  static const char* heads[] = {"if", "while", "for", "def", "class", "with", "try"};
  static const char* strings[] = {"'utf-8'", "\"a b\"", "b'\\x00'", "r'\\d+'", "f'{x}'",
                                  "'''doc\nline'''", "''", "'<tag>'"};
  static const char* numbers[] = {"0", "1", "42", "3.14", "1e-5", "0x1F", "2j", "1_000"};
  static const char* junk[] = {"$", "?", "'open", "\"\"\"never", "!", "`"};

  auto pick = [&](const auto& arr) {
    return std::string(arr[rng.below(std::size(arr))]);
  };
  auto atom = [&]() -> std::string {
    switch (rng.below(4)) {
      case 0: return pick(strings);
      case 1: return pick(numbers);
      default: return pick(names);
    }
  };
  auto expr = [&]() {
    std::string e = atom();
    const auto n = rng.below(4);
    for (std::uint64_t i = 0; i < n; ++i) e += " " + pick(ops) + " " + atom();
    if (rng.below(3) == 0) e = pick(names) + "(" + e + ", " + atom() + ")";
    if (rng.below(5) == 0) e = "[" + e + "]";
    return e;
  };

  std::string out;
  int depth = 0;
  const auto lines = 1 + rng.below(12);
  for (std::uint64_t l = 0; l < lines; ++l) {
    std::string ind(static_cast<std::size_t>(4 * depth), ' ');
    const auto kind = rng.below(10);
    if (kind < 2 && depth < 4) {
      auto h = pick(heads);
      if (h == "def") out += ind + "def " + pick(names) + "(" + pick(names) + "):\n";
      else if (h == "class") out += ind + "class " + pick(names) + ":\n";
      else if (h == "for") out += ind + "for " + pick(names) + " in " + expr() + ":\n";
      else if (h == "try") out += ind + "try:\n";
      else out += ind + h + " " + expr() + ":\n";
      ++depth;
      out += std::string(static_cast<std::size_t>(4 * depth), ' ') + "pass\n";
    } else if (kind < 4 && depth > 0) {
      --depth;
      out += std::string(static_cast<std::size_t>(4 * depth), ' ') + pick(names) + " " +
             pick(assign) + " " + expr() + "\n";
    } else if (kind == 4) {
      out += ind + "# " + pick(names) + "\n";
    } else if (kind == 5 && rng.below(4) == 0) {
      out += ind + expr() + " " + pick(junk) + "\n";
    } else {
      out += ind + pick(names) + " " + pick(assign) + " " + expr() + "\n";
    }
  }
  if (rng.below(3) == 0 && !out.empty()) out.resize(rng.below(out.size()) + 1);
  return out;
}

// Small end-to-end fixture: bundled corpus, split, vocab.
struct MiniPipeline {
  corpus::Corpus corpus;
  bpe::Vocab vocab;
};

inline MiniPipeline build_mini_pipeline(std::size_t vocab_size = 1024, std::uint64_t seed = 0) {
  MiniPipeline p;
  corpus::CorpusConfig cfg;
  cfg.seed = seed;
  p.corpus = corpus::build_corpus(corpus::collect_sources(data_dir() / "corpus"), cfg);
  p.vocab = align::build_vocab(p.corpus.train.samples, p.corpus.tables, vocab_size);
  return p;
}

}  // namespace tyco::testing
