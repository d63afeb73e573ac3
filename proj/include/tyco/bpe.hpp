#pragma once

// Word-internal byte-pair encoding over a character alphabet.
//
// The first character of every ordinary word carries a word-start mark
// (U+2581), so a stream of generated subwords can be cut back into words.
// Special tokens are atomic and never marked.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tyco/error.hpp"
#include "tyco/rng.hpp"

namespace tyco::bpe {

using Id = std::uint32_t;

inline constexpr std::string_view kWordStart = "\xE2\x96\x81";  // U+2581
inline constexpr std::string_view kUnk = "<unk>";

namespace detail {

inline std::size_t utf8_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;  // stray continuation byte: treat as its own character
}

// Splits a word into characters, marking the first one.
inline std::vector<std::string> initial_symbols(std::string_view word) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < word.size()) {
    const auto n = std::min(utf8_len(static_cast<unsigned char>(word[i])), word.size() - i);
    out.emplace_back(word.substr(i, n));
    i += n;
  }
  if (!out.empty()) out.front().insert(0, kWordStart);
  return out;
}

struct PairHash {
  std::size_t operator()(const std::pair<std::string, std::string>& p) const {
    return static_cast<std::size_t>(fnv1a(p.second, fnv1a(p.first) ^ 0xff));
  }
};

}  // namespace detail

class Vocab {
 public:
  Vocab() = default;

  // Token order: specials, <unk>, then alphabet and merge products in
  // creation order. Ids are array indices.
  Vocab(std::vector<std::string> tokens, std::vector<std::pair<std::string, std::string>> merges,
        std::vector<std::string> specials)
      : tokens_(std::move(tokens)), merges_(std::move(merges)), specials_(std::move(specials)) {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (!id_of_.emplace(tokens_[i], static_cast<Id>(i)).second)
        throw VocabError("duplicate token in vocabulary: " + tokens_[i]);
    }
    auto unk = id_of_.find(std::string(kUnk));
    if (unk == id_of_.end()) throw VocabError("vocabulary has no <unk> entry");
    unk_ = unk->second;
    for (const auto& s : specials_) {
      if (!id_of_.contains(s)) throw VocabError("special token without id: " + s);
      special_set_.insert(s);
    }
    special_set_.insert(std::string(kUnk));
    for (std::size_t r = 0; r < merges_.size(); ++r) {
      const auto& m = merges_[r];
      if (special_set_.contains(m.first) || special_set_.contains(m.second))
        throw VocabError("special token inside merge pair");
      rank_.emplace(m, r);
    }
  }

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<std::pair<std::string, std::string>>& merges() const { return merges_; }
  const std::vector<std::string>& specials() const { return specials_; }
  Id unk_id() const { return unk_; }

  bool is_special(std::string_view s) const { return special_set_.contains(std::string(s)); }
  bool is_special(Id id) const { return id < tokens_.size() && is_special(tokens_[id]); }

  std::optional<Id> find(std::string_view tok) const {
    auto it = id_of_.find(std::string(tok));
    if (it == id_of_.end()) return std::nullopt;
    return it->second;
  }

  Id id(std::string_view tok) const {
    auto f = find(tok);
    if (!f) throw VocabError("token not in vocabulary: " + std::string(tok));
    return *f;
  }

  const std::string& token(Id id) const {
    if (id >= tokens_.size())
      throw VocabError("id " + std::to_string(id) + " out of range for vocabulary of " +
                       std::to_string(tokens_.size()));
    return tokens_[id];
  }

  // True when the id opens a new word in a decoded stream.
  bool starts_word(Id id) const {
    const auto& t = token(id);
    return is_special(t) || t.starts_with(kWordStart);
  }

  std::vector<Id> encode(std::string_view word) const {
    if (auto it = special_set_.find(std::string(word)); it != special_set_.end())
      return {id_of_.at(*it)};
    auto syms = detail::initial_symbols(word);
    while (syms.size() > 1) {
      std::size_t best = SIZE_MAX, at = 0;
      for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
        auto it = rank_.find({syms[i], syms[i + 1]});
        if (it != rank_.end() && it->second < best) {
          best = it->second;
          at = i;
        }
      }
      if (best == SIZE_MAX) break;
      // Merge every occurrence of the winning pair, left to right.
      const auto& pair = merges_[best];
      std::vector<std::string> next;
      next.reserve(syms.size());
      for (std::size_t i = 0; i < syms.size(); ++i) {
        if (i >= at && i + 1 < syms.size() && syms[i] == pair.first && syms[i + 1] == pair.second) {
          next.push_back(syms[i] + syms[i + 1]);
          ++i;
        } else {
          next.push_back(std::move(syms[i]));
        }
      }
      syms = std::move(next);
    }
    std::vector<Id> out;
    out.reserve(syms.size());
    for (const auto& s : syms) {
      auto it = id_of_.find(s);
      out.push_back(it == id_of_.end() ? unk_ : it->second);
    }
    return out;
  }

  // Re-joins subwords into words at word-start marks and special tokens.
  std::vector<std::string> decode_words(std::span<const Id> ids) const {
    std::vector<std::string> words;
    bool open = false;  // last word may absorb continuation pieces
    for (Id id : ids) {
      const auto& t = token(id);
      if (is_special(t)) {
        words.push_back(t);
        open = false;
      } else if (t.starts_with(kWordStart)) {
        words.push_back(t.substr(kWordStart.size()));
        open = true;
      } else if (open) {
        words.back() += t;
      } else {
        words.push_back(t);
        open = true;
      }
    }
    return words;
  }

  std::string decode(std::span<const Id> ids) const {
    std::string out;
    for (const auto& w : decode_words(ids)) {
      if (!out.empty()) out += ' ';
      out += w;
    }
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["merges"] = nlohmann::json::array();
    for (const auto& [l, r] : merges_) j["merges"].push_back({l, r});
    j["specials"] = specials_;
    j["tokens"] = tokens_;
    return j;
  }

  static Vocab from_json(const nlohmann::json& j) {
    try {
      std::vector<std::pair<std::string, std::string>> merges;
      for (const auto& m : j.at("merges"))
        merges.emplace_back(m.at(0).get<std::string>(), m.at(1).get<std::string>());
      return Vocab(j.at("tokens").get<std::vector<std::string>>(), std::move(merges),
                   j.at("specials").get<std::vector<std::string>>());
    } catch (const nlohmann::json::exception& e) {
      throw VocabError(std::string("malformed vocab json: ") + e.what());
    }
  }

  std::uint64_t hash() const { return fnv1a(to_json().dump()); }

  void save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << to_json().dump() << '\n';
  }

  static Vocab load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw VocabError(std::string("malformed vocab json: ") + e.what());
    }
    return from_json(j);
  }

 private:
  std::vector<std::string> tokens_;
  std::vector<std::pair<std::string, std::string>> merges_;
  std::vector<std::string> specials_;
  std::unordered_map<std::string, Id> id_of_;
  std::unordered_set<std::string> special_set_;
  std::unordered_map<std::pair<std::string, std::string>, std::size_t, detail::PairHash> rank_;
  Id unk_ = 0;
};

// Learns merges until the vocabulary (specials + alphabet + merge products)
// holds target_size entries or no pair is left. <unk> is reserved on top of
// target_size.
inline Vocab train_bpe(const std::map<std::string, std::size_t>& word_counts,
                       std::size_t target_size, std::vector<std::string> specials) {
  {
    std::set<std::string> seen;
    std::vector<std::string> uniq;
    for (auto& s : specials) {
      if (s == kUnk) continue;
      if (seen.insert(s).second) uniq.push_back(std::move(s));
    }
    specials = std::move(uniq);
  }
  const std::set<std::string> special_set(specials.begin(), specials.end());

  struct Word {
    std::vector<std::string> syms;
    std::size_t count;
  };
  std::vector<Word> words;
  std::set<std::string> alphabet;
  for (const auto& [w, c] : word_counts) {
    if (w.empty() || c == 0 || special_set.contains(w) || w == kUnk) continue;
    Word word{detail::initial_symbols(w), c};
    // Both the word-start and the continuation form of every character, so
    // a character is never unknown just because of where it sits.
    for (const auto& s : word.syms) {
      const auto bare = s.starts_with(kWordStart) ? s.substr(kWordStart.size()) : s;
      alphabet.insert(bare);
      alphabet.insert(std::string(kWordStart) + bare);
    }
    words.push_back(std::move(word));
  }

  if (target_size < alphabet.size() + specials.size())
    throw ConfigError("BPE target size " + std::to_string(target_size) +
                      " is smaller than alphabet (" + std::to_string(alphabet.size()) +
                      ") plus specials (" + std::to_string(specials.size()) + ")");

  std::vector<std::string> tokens = specials;
  tokens.emplace_back(kUnk);
  std::unordered_set<std::string> present(tokens.begin(), tokens.end());
  for (const auto& a : alphabet) {
    tokens.push_back(a);
    present.insert(a);
  }
  std::size_t budget = target_size - alphabet.size() - specials.size();

  using Pair = std::pair<std::string, std::string>;
  std::unordered_map<Pair, long long, detail::PairHash> pair_counts;
  std::unordered_map<Pair, std::set<std::size_t>, detail::PairHash> where;
  auto add_pairs = [&](std::size_t wi, long long sign) {
    const auto& w = words[wi];
    for (std::size_t i = 0; i + 1 < w.syms.size(); ++i) {
      Pair p{w.syms[i], w.syms[i + 1]};
      pair_counts[p] += sign * static_cast<long long>(w.count);
      if (sign > 0) where[p].insert(wi);
    }
  };
  for (std::size_t wi = 0; wi < words.size(); ++wi) add_pairs(wi, +1);

  std::vector<Pair> merges;
  while (budget > 0) {
    const Pair* best = nullptr;
    long long best_count = 0;
    for (const auto& [p, c] : pair_counts) {
      if (c <= 0) continue;
      if (c > best_count || (c == best_count && p < *best)) {
        best = &p;
        best_count = c;
      }
    }
    if (!best) break;
    const Pair pair = *best;
    const std::string joined = pair.first + pair.second;
    merges.push_back(pair);
    if (present.insert(joined).second) {
      tokens.push_back(joined);
      --budget;
    }

    const auto affected = where[pair];
    for (auto wi : affected) {
      add_pairs(wi, -1);
      auto& syms = words[wi].syms;
      std::vector<std::string> next;
      next.reserve(syms.size());
      for (std::size_t i = 0; i < syms.size(); ++i) {
        if (i + 1 < syms.size() && syms[i] == pair.first && syms[i + 1] == pair.second) {
          next.push_back(joined);
          ++i;
        } else {
          next.push_back(std::move(syms[i]));
        }
      }
      syms = std::move(next);
      add_pairs(wi, +1);
    }
    for (auto it = pair_counts.begin(); it != pair_counts.end();) {
      if (it->second <= 0) {
        where.erase(it->first);
        it = pair_counts.erase(it);
      } else {
        ++it;
      }
    }
  }
  return Vocab(std::move(tokens), std::move(merges), std::move(specials));
}

// Word frequencies over space-separated corpus lines.
template <class Range>
std::map<std::string, std::size_t> count_words(const Range& samples) {
  std::map<std::string, std::size_t> counts;
  for (const auto& words : samples)
    for (const auto& w : words) ++counts[w];
  return counts;
}

}  // namespace tyco::bpe
