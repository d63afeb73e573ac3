#pragma once

// Scores a trained model: next-token accuracy and MRR over block windows,
// line completion EM/ES over line samples.

#include <span>
#include <string>
#include <vector>

#include "tyco/align.hpp"
#include "tyco/decode.hpp"
#include "tyco/metrics.hpp"
#include "tyco/model.hpp"

namespace tyco::eval {

using bpe::Id;

// Zero-based rank of `gold` in a logit row (ties go to the lower id).
inline std::size_t rank_of(std::span<const float> row, Id gold) {
  const float g = row[gold];
  std::size_t r = 0;
  for (Id i = 0; i < row.size(); ++i)
    if (row[i] > g || (row[i] == g && i < gold)) ++r;
  return r;
}

struct TokenOptions {
  int batch = 8;
  std::size_t R = metrics::kMrrRank;
  bool by_type_role = false;  // score type sequences instead of code
};

// Teacher-forced next-token scoring. Positions whose gold id is a sentinel or
// padding are skipped; literal placeholders are counted and also tallied
// separately.
inline void score_tokens(const model::Transformer<float>& m, const bpe::Vocab& vocab,
                         std::span<const align::AlignedSample> data, metrics::TokenTally& tally,
                         const TokenOptions& opt = {}) {
  const auto block = static_cast<std::size_t>(m.config().block_size);
  std::vector<align::AlignedSample> wins;
  for (const auto& a : data)
    for (auto& c : align::chunk(a, block))
      if (c.code_ids.size() >= 2) wins.push_back(std::move(c));
  const auto V = static_cast<std::size_t>(m.config().vocab_size);
  auto& mm = const_cast<model::Transformer<float>&>(m);  // inference graph never writes parameters
  for (std::size_t s = 0; s < wins.size(); s += static_cast<std::size_t>(opt.batch)) {
    const auto e = std::min(wins.size(), s + static_cast<std::size_t>(opt.batch));
    std::vector<std::vector<Id>> seqs;
    for (auto i = s; i < e; ++i) seqs.push_back(opt.by_type_role ? wins[i].type_ids : wins[i].code_ids);
    ad::Graph<float> g(false);
    const auto& L = g.value(model::forward(g, mm, std::span<const std::vector<Id>>(seqs)));
    std::size_t row = 0;
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      const auto& w = wins[s + k];
      const auto& ids = seqs[k];
      for (std::size_t t = 0; t + 1 < ids.size(); ++t, ++row) {
        const Id gold = ids[t + 1];
        const auto& tok = vocab.token(gold);
        if (corpus::is_sentinel(tok)) continue;
        std::span<const float> r(L.data.data() + (row * V), V);
        const auto rank = rank_of(r, gold);
        const double rr = rank < opt.R ? 1.0 / static_cast<double>(rank + 1) : 0.0;
        tally.add(rank == 0, vocab.token(w.type_ids[t + 1]), corpus::is_literal_placeholder(tok), rr);
      }
      ++row;  // last position has no target
    }
  }
}

inline std::vector<Id> encode_words(const bpe::Vocab& vocab, std::span<const std::string> words) {
  std::vector<Id> out;
  for (const auto& w : words)
    for (Id id : vocab.encode(w)) out.push_back(id);
  return out;
}

struct LineResult {
  std::string pred, gold;
  bool finished = false;
};

inline std::vector<LineResult> score_lines(decode::TransformerLM& lm, const bpe::Vocab& vocab,
                                           std::span<const corpus::LineSample> lines,
                                           const decode::DecodeConfig& cfg, metrics::LineTally& tally) {
  std::vector<LineResult> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto ctx = encode_words(vocab, lines[i].context);
    auto c = cfg;
    c.seed = cfg.seed + i;  // each completion owns its generator
    auto comp = decode::complete_line(lm, ctx, c, vocab);
    auto gold = lines[i].gold_text();
    tally.add(comp.text, gold);
    out.push_back({std::move(comp.text), std::move(gold), comp.finished});
  }
  return out;
}

inline metrics::EvalReport evaluate(const model::Transformer<float>& m, const bpe::Vocab& vocab,
                                    std::span<const align::AlignedSample> test,
                                    std::span<const corpus::LineSample> lines, const decode::DecodeConfig& cfg) {
  metrics::TokenTally tt;
  score_tokens(m, vocab, test, tt);
  metrics::LineTally lt;
  decode::TransformerLM lm(m);
  score_lines(lm, vocab, lines, cfg, lt);
  return metrics::EvalReport::from(tt, lt);
}

}  // namespace tyco::eval
