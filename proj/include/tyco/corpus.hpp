#pragma once

// Corpus construction: literal masking, marker insertion, parallel
// code/type sample files and the train/valid/test split.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tyco/error.hpp"
#include "tyco/fixtures.hpp"
#include "tyco/lexer.hpp"
#include "tyco/rng.hpp"

namespace tyco::corpus {

using lexer::TokenType;
using lexer::TypedToken;

inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";
inline constexpr std::string_view kPad = "<pad>";
inline constexpr std::string_view kEol = "<EOL>";
inline constexpr std::string_view kIndent = "<INDENT>";
inline constexpr std::string_view kDedent = "<DEDENT>";
inline constexpr std::string_view kStrLit = "<STR_LIT>";
inline constexpr std::string_view kNumLit = "<NUM_LIT>";

inline std::string type_token(TokenType t) {
  return "<" + std::string(lexer::name(t)) + ">";
}

inline std::optional<TokenType> type_of_token(std::string_view tok) {
  if (tok.size() < 3 || tok.front() != '<' || tok.back() != '>') return std::nullopt;
  return lexer::type_from_name(tok.substr(1, tok.size() - 2));
}

inline bool is_sentinel(std::string_view w) { return w == kBos || w == kEos || w == kPad; }

// Words that carry layout rather than code text.
inline bool is_marker(std::string_view w) {
  return w == kEol || w == kIndent || w == kDedent || is_sentinel(w);
}

inline bool is_literal_placeholder(std::string_view w) {
  return w.starts_with("<STR_LIT") || w.starts_with("<NUM_LIT");
}

// Space, angle brackets, '%' and control bytes are escaped so a placeholder
// stays a single space-free word.
inline std::string percent_encode(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if (c == ' ' || c == '<' || c == '>' || c == '%' || c < 0x20 || c == 0x7f) {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", c);
      out += buf;
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

inline std::string percent_decode(std::string_view s) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size() && hex(s[i + 1]) >= 0 && hex(s[i + 2]) >= 0) {
      out += static_cast<char>(hex(s[i + 1]) * 16 + hex(s[i + 2]));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

// Literal text with prefix and quotes removed; numbers are kept verbatim.
inline std::string literal_value(const TypedToken& tok) {
  if (tok.ttype != TokenType::STRING) return tok.text;
  std::string_view t = tok.text;
  const auto q = t.find_first_of("'\"");
  if (q == std::string_view::npos) return std::string(t);
  t.remove_prefix(q);
  std::size_t ql = 1;
  if (t.size() >= 6 && (t.starts_with("'''") || t.starts_with("\"\"\""))) ql = 3;
  if (t.size() < 2 * ql) return {};
  return std::string(t.substr(ql, t.size() - 2 * ql));
}

struct LiteralTables {
  std::vector<std::string> top_strings;
  std::vector<std::string> top_numbers;
  std::map<std::string, std::size_t> string_counts;
  std::map<std::string, std::size_t> number_counts;

  bool has_string(std::string_view v) const {
    return std::find(top_strings.begin(), top_strings.end(), v) != top_strings.end();
  }
  bool has_number(std::string_view v) const {
    return std::find(top_numbers.begin(), top_numbers.end(), v) != top_numbers.end();
  }
};

namespace detail {

inline std::vector<std::string> rank(const std::map<std::string, std::size_t>& counts,
                                     std::size_t limit) {
  std::vector<std::pair<std::string, std::size_t>> items(counts.begin(), counts.end());
  // std::map iteration is already lexicographic, so a stable sort on count
  // alone gives the declared tie-break.
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) out.push_back(items[i].first);
  return out;
}

}  // namespace detail

inline LiteralTables build_literal_tables(std::span<const std::vector<TypedToken>> files,
                                          std::size_t max_strings = 200,
                                          std::size_t max_numbers = 30) {
  LiteralTables t;
  for (const auto& toks : files) {
    for (const auto& tok : toks) {
      if (tok.ttype == TokenType::STRING) ++t.string_counts[literal_value(tok)];
      else if (tok.ttype == TokenType::NUMBER) ++t.number_counts[tok.text];
    }
  }
  t.top_strings = detail::rank(t.string_counts, max_strings);
  t.top_numbers = detail::rank(t.number_counts, max_numbers);
  return t;
}

inline std::string mask_token(const TypedToken& tok, const LiteralTables& tables) {
  switch (tok.ttype) {
    case TokenType::STRING: {
      const auto v = literal_value(tok);
      if (tables.has_string(v)) return "<STR_LIT:" + percent_encode(v) + ">";
      return std::string(kStrLit);
    }
    case TokenType::NUMBER:
      if (tables.has_number(tok.text)) return "<NUM_LIT:" + percent_encode(tok.text) + ">";
      return std::string(kNumLit);
    case TokenType::EOL: return std::string(kEol);
    case TokenType::INDENT: return std::string(kIndent);
    case TokenType::DEDENT: return std::string(kDedent);
    default: return tok.text;
  }
}

inline std::vector<std::string> mask_literals(std::span<const TypedToken> tokens,
                                              const LiteralTables& tables) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(mask_token(t, tables));
  return out;
}

// Placeholder strings for every tabled literal, in rank order.
inline std::vector<std::string> literal_placeholders(const LiteralTables& tables) {
  std::vector<std::string> out;
  for (const auto& s : tables.top_strings) out.push_back("<STR_LIT:" + percent_encode(s) + ">");
  for (const auto& n : tables.top_numbers) out.push_back("<NUM_LIT:" + percent_encode(n) + ">");
  return out;
}

struct Sample {
  std::vector<std::string> code;
  std::vector<std::string> types;
  bool operator==(const Sample&) const = default;
};

inline Sample make_sample(std::span<const TypedToken> tokens, const LiteralTables& tables) {
  Sample s;
  s.code.reserve(tokens.size() + 2);
  s.types.reserve(tokens.size() + 2);
  s.code.emplace_back(kBos);
  s.types.emplace_back(kBos);
  for (const auto& t : tokens) {
    s.code.push_back(mask_token(t, tables));
    s.types.push_back(type_token(t.ttype));
  }
  s.code.emplace_back(kEos);
  s.types.emplace_back(kEos);
  return s;
}

inline void check_sample(const Sample& s) {
  if (s.code.size() != s.types.size())
    throw CorpusFormatError("code/type length mismatch: " + std::to_string(s.code.size()) +
                            " vs " + std::to_string(s.types.size()));
  if (s.code.size() < 2 || s.code.front() != kBos || s.code.back() != kEos ||
      s.types.front() != kBos || s.types.back() != kEos)
    throw CorpusFormatError("sample is not wrapped in <s> ... </s>");
}

namespace detail {

inline std::string join(std::span<const std::string> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i];
  }
  return out;
}

inline std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const auto j = line.find(' ', i);
    if (j == std::string_view::npos) {
      out.emplace_back(line.substr(i));
      break;
    }
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

}  // namespace detail

inline std::pair<std::string, std::string> serialize_sample(const Sample& s) {
  check_sample(s);
  return {detail::join(s.code), detail::join(s.types)};
}

inline Sample parse_sample(std::string_view code_line, std::string_view type_line) {
  Sample s{detail::split(code_line), detail::split(type_line)};
  check_sample(s);
  return s;
}

// A cut through a test sample: the model sees `context` and must produce
// `gold`, the remaining words of that line (the terminating <EOL> is the stop
// signal and is not part of the gold text).
struct LineSample {
  std::string file;
  std::vector<std::string> context;
  std::vector<std::string> gold;

  std::string gold_text() const { return detail::join(gold); }
};

inline std::vector<LineSample> make_line_samples(const Sample& s, const std::string& file,
                                                 Rng& rng, std::size_t per_file,
                                                 std::size_t min_prefix = 10) {
  std::vector<std::size_t> cuts;
  for (std::size_t i = std::max<std::size_t>(min_prefix, 1); i + 1 < s.code.size(); ++i) {
    if (!is_marker(s.code[i])) cuts.push_back(i);
  }
  rng.shuffle(std::span(cuts));
  cuts.resize(std::min(cuts.size(), per_file));
  std::sort(cuts.begin(), cuts.end());
  std::vector<LineSample> out;
  for (auto i : cuts) {
    LineSample ls;
    ls.file = file;
    ls.context.assign(s.code.begin(), s.code.begin() + static_cast<std::ptrdiff_t>(i));
    for (std::size_t j = i; j < s.code.size() && s.code[j] != kEol && s.code[j] != kEos; ++j)
      ls.gold.push_back(s.code[j]);
    out.push_back(std::move(ls));
  }
  return out;
}

struct SourceFile {
  std::string path;  // relative to the corpus root
  std::string text;
};

inline std::vector<SourceFile> collect_sources(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw IoError("not a directory: " + root.string());
  std::vector<SourceFile> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file() || e.path().extension() != ".py") continue;
    out.push_back({fs::relative(e.path(), root).generic_string(), read_file(e.path())});
  }
  std::sort(out.begin(), out.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
  return out;
}

struct CorpusConfig {
  std::uint64_t seed = 0;
  double train_frac = 0.8;
  double valid_frac = 0.1;
  std::size_t max_strings = 200;
  std::size_t max_numbers = 30;
  std::size_t line_samples_per_file = 5;
  std::size_t line_min_prefix = 10;
};

struct Split {
  std::vector<std::string> files;
  std::vector<Sample> samples;
};

struct Corpus {
  Split train, valid, test;
  std::vector<LineSample> test_lines;
  LiteralTables tables;
  std::vector<std::string> excluded;  // files whose stream holds ERRORTOKEN
};

inline Corpus build_corpus(std::vector<SourceFile> sources, const CorpusConfig& cfg) {
  if (cfg.train_frac <= 0 || cfg.valid_frac < 0 || cfg.train_frac + cfg.valid_frac > 1.0)
    throw ConfigError("split fractions must satisfy 0 < train, 0 <= valid, train + valid <= 1");
  std::sort(sources.begin(), sources.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });

  Corpus c;
  struct Lexed {
    std::string path;
    std::vector<TypedToken> tokens;
  };
  std::vector<Lexed> kept;
  for (auto& src : sources) {
    auto toks = lexer::tokenize(src.text);
    if (lexer::has_error(toks)) {
      c.excluded.push_back(src.path);
      continue;
    }
    kept.push_back({src.path, std::move(toks)});
  }

  Rng rng(cfg.seed);
  rng.shuffle(std::span(kept));
  const auto n = kept.size();
  const auto n_train = static_cast<std::size_t>(cfg.train_frac * static_cast<double>(n) + 0.5);
  const auto n_valid = std::min(n - std::min(n, n_train),
                                static_cast<std::size_t>(cfg.valid_frac * static_cast<double>(n) + 0.5));

  std::vector<std::vector<TypedToken>> train_streams;
  for (std::size_t i = 0; i < n_train && i < n; ++i) train_streams.push_back(kept[i].tokens);
  c.tables = build_literal_tables(train_streams, cfg.max_strings, cfg.max_numbers);

  for (std::size_t i = 0; i < n; ++i) {
    Split& dst = i < n_train ? c.train : i < n_train + n_valid ? c.valid : c.test;
    dst.files.push_back(kept[i].path);
    dst.samples.push_back(make_sample(kept[i].tokens, c.tables));
  }

  Rng line_rng(cfg.seed ^ 0x6c696e65ULL);
  for (std::size_t i = 0; i < c.test.samples.size(); ++i) {
    auto lines = make_line_samples(c.test.samples[i], c.test.files[i], line_rng,
                                   cfg.line_samples_per_file, cfg.line_min_prefix);
    for (auto& l : lines) c.test_lines.push_back(std::move(l));
  }
  return c;
}

// ---------------------------------------------------------------------------
// On-disk layout

inline void write_split(const std::filesystem::path& dir, const std::string& name,
                        const Split& split) {
  std::ofstream code(dir / (name + ".code"), std::ios::binary);
  std::ofstream type(dir / (name + ".type"), std::ios::binary);
  if (!code || !type) throw IoError("cannot write split " + name + " in " + dir.string());
  for (const auto& s : split.samples) {
    auto [c, t] = serialize_sample(s);
    code << c << '\n';
    type << t << '\n';
  }
}

inline std::vector<Sample> read_split(const std::filesystem::path& dir, const std::string& name) {
  std::ifstream code(dir / (name + ".code"), std::ios::binary);
  std::ifstream type(dir / (name + ".type"), std::ios::binary);
  if (!code || !type) throw IoError("missing split " + name + " in " + dir.string());
  std::vector<Sample> out;
  std::string c, t;
  while (true) {
    const bool got_c = static_cast<bool>(std::getline(code, c));
    const bool got_t = static_cast<bool>(std::getline(type, t));
    if (!got_c && !got_t) break;
    if (got_c != got_t)
      throw CorpusFormatError(name + ".code and " + name + ".type differ in line count");
    out.push_back(parse_sample(c, t));
  }
  return out;
}

inline nlohmann::json literals_to_json(const LiteralTables& t) {
  return {{"strings", t.top_strings},
          {"numbers", t.top_numbers},
          {"string_counts", t.string_counts},
          {"number_counts", t.number_counts}};
}

inline LiteralTables literals_from_json(const nlohmann::json& j) {
  LiteralTables t;
  t.top_strings = j.at("strings").get<std::vector<std::string>>();
  t.top_numbers = j.at("numbers").get<std::vector<std::string>>();
  if (j.contains("string_counts"))
    t.string_counts = j["string_counts"].get<std::map<std::string, std::size_t>>();
  if (j.contains("number_counts"))
    t.number_counts = j["number_counts"].get<std::map<std::string, std::size_t>>();
  return t;
}

inline void write_line_samples(const std::filesystem::path& file,
                               std::span<const LineSample> lines) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot write " + file.string());
  for (const auto& l : lines) {
    nlohmann::ordered_json j;
    j["file"] = l.file;
    j["context"] = detail::join(l.context);
    j["gold"] = detail::join(l.gold);
    out << j.dump() << '\n';
  }
}

inline std::vector<LineSample> read_line_samples(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::vector<LineSample> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      out.push_back({j.at("file").get<std::string>(),
                     detail::split(j.at("context").get<std::string>()),
                     detail::split(j.at("gold").get<std::string>())});
    } catch (const nlohmann::json::exception& e) {
      throw CorpusFormatError("bad line sample in " + file.string() + ": " + e.what());
    }
  }
  return out;
}

inline void write_corpus(const std::filesystem::path& dir, const Corpus& c) {
  std::filesystem::create_directories(dir);
  write_split(dir, "train", c.train);
  write_split(dir, "valid", c.valid);
  write_split(dir, "test", c.test);
  write_line_samples(dir / "test_line.jsonl", c.test_lines);
  {
    std::ofstream out(dir / "literals.json");
    if (!out) throw IoError("cannot write literals.json");
    out << literals_to_json(c.tables).dump(1) << '\n';
  }
  nlohmann::ordered_json files;
  files["train"] = c.train.files;
  files["valid"] = c.valid.files;
  files["test"] = c.test.files;
  files["excluded"] = c.excluded;
  std::ofstream out(dir / "files.json");
  if (!out) throw IoError("cannot write files.json");
  out << files.dump(1) << '\n';
}

inline LiteralTables read_literals(const std::filesystem::path& dir) {
  std::ifstream in(dir / "literals.json");
  if (!in) throw IoError("missing literals.json in " + dir.string());
  try {
    return literals_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw CorpusFormatError(std::string("bad literals.json: ") + e.what());
  }
}

}  // namespace tyco::corpus
