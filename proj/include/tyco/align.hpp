#pragma once

// Code/type alignment: every word is BPE-encoded and its type token is
// repeated once per subword, giving two id sequences of equal length.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tyco/bpe.hpp"
#include "tyco/corpus.hpp"
#include "tyco/error.hpp"

namespace tyco::align {

using bpe::Id;

struct AlignedSample {
  std::vector<Id> code_ids;
  std::vector<Id> type_ids;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> boundaries;  // [start, end) per word
  bool operator==(const AlignedSample&) const = default;
};

inline AlignedSample align(const corpus::Sample& sample, const bpe::Vocab& vocab) {
  if (sample.code.size() != sample.types.size())
    throw AlignmentError("sample has " + std::to_string(sample.code.size()) + " code words but " +
                         std::to_string(sample.types.size()) + " type words");
  AlignedSample out;
  out.code_ids.reserve(sample.code.size() * 2);
  out.type_ids.reserve(sample.code.size() * 2);
  out.boundaries.reserve(sample.code.size());
  for (std::size_t i = 0; i < sample.code.size(); ++i) {
    const auto& ty = sample.types[i];
    if (!vocab.is_special(ty)) throw AlignmentError("type token is not a vocabulary special: " + ty);
    const Id tid = vocab.id(ty);
    const auto start = static_cast<std::uint32_t>(out.code_ids.size());
    for (Id c : vocab.encode(sample.code[i])) {
      out.code_ids.push_back(c);
      out.type_ids.push_back(tid);
    }
    out.boundaries.emplace_back(start, static_cast<std::uint32_t>(out.code_ids.size()));
  }
  return out;
}

// Specials registered before BPE training: sentinels, every type token
// (which covers the <EOL>/<INDENT>/<DEDENT> markers) and literal
// placeholders.
inline std::vector<std::string> vocab_specials(const corpus::LiteralTables& tables) {
  std::vector<std::string> s{std::string(corpus::kPad), std::string(corpus::kBos),
                             std::string(corpus::kEos)};
  for (std::size_t i = 0; i < lexer::kTokenTypeCount; ++i)
    s.push_back(corpus::type_token(static_cast<lexer::TokenType>(i)));
  s.emplace_back(corpus::kStrLit);
  s.emplace_back(corpus::kNumLit);
  for (auto& p : corpus::literal_placeholders(tables)) s.push_back(std::move(p));
  return s;
}

inline bpe::Vocab build_vocab(std::span<const corpus::Sample> train,
                              const corpus::LiteralTables& tables, std::size_t target_size) {
  std::map<std::string, std::size_t> counts;
  for (const auto& s : train)
    for (const auto& w : s.code) ++counts[w];
  auto specials = vocab_specials(tables);
  std::size_t alphabet = 0;
  {
    std::set<std::string> chars;
    const std::set<std::string> sp(specials.begin(), specials.end());
    for (const auto& [w, c] : counts)
      if (!sp.contains(w))
        for (auto& ch : bpe::detail::initial_symbols(w))
          chars.insert(ch.starts_with(bpe::kWordStart) ? ch.substr(bpe::kWordStart.size()) : ch);
    alphabet = 2 * chars.size();
  }
  // A requested size below the floor is raised to it rather than rejected,
  // so tiny toy corpora still build.
  return bpe::train_bpe(counts, std::max(target_size, alphabet + specials.size()),
                        std::move(specials));
}

// Collapses each boundary span of type ids back to one type token.
inline std::vector<std::string> project_types(const AlignedSample& a, const bpe::Vocab& vocab) {
  std::vector<std::string> out;
  out.reserve(a.boundaries.size());
  for (auto [s, e] : a.boundaries) {
    if (s >= e || e > a.type_ids.size()) throw AlignmentError("empty or out-of-range boundary span");
    out.push_back(vocab.token(a.type_ids[s]));
  }
  return out;
}

// Checks the structural invariants; returns an empty string when they hold.
inline std::string check(const AlignedSample& a) {
  if (a.code_ids.size() != a.type_ids.size()) return "code/type length mismatch";
  std::uint32_t pos = 0;
  for (auto [s, e] : a.boundaries) {
    if (s != pos || e <= s) return "boundaries do not partition the sequence";
    for (auto i = s + 1; i < e; ++i)
      if (a.type_ids[i] != a.type_ids[s]) return "type ids differ inside one word";
    pos = e;
  }
  if (pos != a.code_ids.size()) return "boundaries do not cover the sequence";
  return {};
}

// Consecutive non-overlapping windows of at most `block` ids. Windows are
// not re-wrapped with sentinels; word spans crossing a cut are clipped.
inline std::vector<AlignedSample> chunk(const AlignedSample& a, std::size_t block) {
  if (block < 2) throw ConfigError("block size must be at least 2");
  std::vector<AlignedSample> out;
  std::size_t w = 0;
  for (std::size_t start = 0; start < a.code_ids.size(); start += block) {
    const auto end = std::min(a.code_ids.size(), start + block);
    AlignedSample c;
    c.code_ids.assign(a.code_ids.begin() + static_cast<std::ptrdiff_t>(start),
                      a.code_ids.begin() + static_cast<std::ptrdiff_t>(end));
    c.type_ids.assign(a.type_ids.begin() + static_cast<std::ptrdiff_t>(start),
                      a.type_ids.begin() + static_cast<std::ptrdiff_t>(end));
    while (w < a.boundaries.size() && a.boundaries[w].second <= start) ++w;
    for (std::size_t k = w; k < a.boundaries.size() && a.boundaries[k].first < end; ++k) {
      const auto s = std::max<std::size_t>(a.boundaries[k].first, start);
      const auto e = std::min<std::size_t>(a.boundaries[k].second, end);
      c.boundaries.emplace_back(static_cast<std::uint32_t>(s - start),
                                static_cast<std::uint32_t>(e - start));
    }
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Binary dataset: "TYCOALN1", u64 vocab hash, u32 record count, then per
// record u32 n, n code ids, n type ids. Little-endian throughout. Word
// boundaries are not stored.

inline constexpr char kMagic[8] = {'T', 'Y', 'C', 'O', 'A', 'L', 'N', '1'};

namespace detail {

template <class T>
void put(std::ostream& out, T v) {
  static_assert(std::is_integral_v<T>);
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T)))
    throw CorpusFormatError("truncated aligned dataset");
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
  return v;
}

}  // namespace detail

inline void write_dataset(const std::filesystem::path& path, std::span<const AlignedSample> recs,
                          std::uint64_t vocab_hash) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(kMagic, sizeof kMagic);
  detail::put<std::uint64_t>(out, vocab_hash);
  detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(recs.size()));
  for (const auto& r : recs) {
    if (r.code_ids.size() != r.type_ids.size())
      throw AlignmentError("refusing to write a record with unequal lengths");
    detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(r.code_ids.size()));
    for (Id id : r.code_ids) detail::put<std::uint32_t>(out, id);
    for (Id id : r.type_ids) detail::put<std::uint32_t>(out, id);
  }
  if (!out) throw IoError("write failed for " + path.string());
}

inline std::vector<AlignedSample> read_dataset(const std::filesystem::path& path,
                                               std::uint64_t expected_hash) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  char magic[8];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0)
    throw CorpusFormatError(path.string() + " is not an aligned dataset");
  const auto hash = detail::get<std::uint64_t>(in);
  if (hash != expected_hash)
    throw VocabError("dataset " + path.string() + " was built with a different vocabulary");
  const auto n = detail::get<std::uint32_t>(in);
  std::vector<AlignedSample> out(n);
  for (auto& r : out) {
    const auto len = detail::get<std::uint32_t>(in);
    r.code_ids.resize(len);
    r.type_ids.resize(len);
    for (auto& id : r.code_ids) id = detail::get<std::uint32_t>(in);
    for (auto& id : r.type_ids) id = detail::get<std::uint32_t>(in);
  }
  return out;
}

}  // namespace tyco::align
