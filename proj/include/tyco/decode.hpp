#pragma once

// Next-token and line-level generation: greedy, beam search, plain
// sampling, temperature, top-k and top-p (nucleus) sampling.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tyco/bpe.hpp"
#include "tyco/corpus.hpp"
#include "tyco/error.hpp"
#include "tyco/model.hpp"
#include "tyco/rng.hpp"

namespace tyco::decode {

using bpe::Id;

enum class Method { Greedy, Beam, Sample, Temperature, TopK, TopP };

inline const char* name(Method m) {
  switch (m) {
    case Method::Greedy: return "greedy";
    case Method::Beam: return "beam";
    case Method::Sample: return "sample";
    case Method::Temperature: return "temperature";
    case Method::TopK: return "top_k";
    case Method::TopP: return "top_p";
  }
  return "?";
}

inline Method method_from_name(const std::string& s) {
  for (auto m : {Method::Greedy, Method::Beam, Method::Sample, Method::Temperature, Method::TopK, Method::TopP})
    if (s == name(m)) return m;
  throw ConfigError("unknown decoding method: " + s);
}

inline constexpr double kMinTemp = 1e-4;

struct DecodeConfig {
  Method method = Method::Greedy;
  int b = 5;
  double temp = 1.0;
  int k = 10;
  double p = 0.9;
  std::uint64_t seed = 0;
  int max_new = 100;

  void validate() const {
    if (max_new < 1) throw ConfigError("max_new must be at least 1");
    switch (method) {
      case Method::Beam:
        if (b < 1) throw ConfigError("beam size must be at least 1");
        break;
      case Method::Temperature:
        if (!(temp > 0 && temp <= 1)) throw ConfigError("temperature must be in (0, 1]");
        break;
      case Method::TopK:
        if (k < 1) throw ConfigError("k must be at least 1");
        break;
      case Method::TopP:
        if (!(p > 0 && p <= 1)) throw ConfigError("p must be in (0, 1]");
        break;
      default: break;
    }
  }

  nlohmann::ordered_json to_json() const {
    return {{"method", name(method)}, {"b", b}, {"temp", temp}, {"k", k}, {"p", p}, {"seed", seed},
            {"max_new", max_new}};
  }
};

struct Candidate {
  std::vector<Id> ids;
  double logprob = 0;
  bool finished = false;
};

// Anything that maps a context to next-token log-probabilities.
template <class M>
concept NextTokenModel = requires(M& m, std::span<const Id> ctx) {
  { m.vocab_size() } -> std::convertible_to<std::size_t>;
  { m.log_probs(ctx) } -> std::same_as<std::vector<double>>;
};

inline std::vector<double> log_softmax(std::span<const float> logits) {
  double mx = -std::numeric_limits<double>::infinity();
  for (float z : logits) mx = std::max(mx, static_cast<double>(z));
  double s = 0;
  for (float z : logits) s += std::exp(static_cast<double>(z) - mx);
  const double lse = mx + std::log(s);
  std::vector<double> out(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) out[i] = static_cast<double>(logits[i]) - lse;
  return out;
}

// Transformer adapter. Keeps a small pool of KV-cache sessions so contexts
// that extend an earlier one (greedy rollouts, sibling beams) only pay for
// the new ids.
class TransformerLM {
 public:
  explicit TransformerLM(const model::Transformer<float>& m, std::size_t pool = 16) : m_(&m) {
    for (std::size_t i = 0; i < std::max<std::size_t>(pool, 2); ++i) slots_.push_back({model::Session<float>(m), {}, 0});
  }

  std::size_t vocab_size() const { return static_cast<std::size_t>(m_->config().vocab_size); }
  int block_size() const { return m_->config().block_size; }

  std::vector<double> log_probs(std::span<const Id> ctx) {
    if (ctx.empty()) throw ContractError("next-token distribution needs a non-empty context");
    if (ctx.size() > static_cast<std::size_t>(block_size())) ctx = ctx.last(static_cast<std::size_t>(block_size()));
    ++clock_;
    Slot* best = nullptr;
    for (auto& s : slots_) {
      const auto& t = s.session.tokens();
      if (t.empty() || t.size() > ctx.size() || !std::equal(t.begin(), t.end(), ctx.begin())) continue;
      if (!best || t.size() > best->session.length()) best = &s;
    }
    if (best && best->session.length() == ctx.size()) {
      best->used = clock_;
      return log_softmax(best->logits);
    }
    Slot* victim = nullptr;
    for (auto& s : slots_)
      if (&s != best && (!victim || s.used < victim->used)) victim = &s;
    if (best) victim->session.copy_from(best->session);
    else victim->session.reset();
    victim->logits = victim->session.feed(ctx.subspan(victim->session.length()));
    victim->used = clock_;
    if (best) best->used = clock_;
    return log_softmax(victim->logits);
  }

 private:
  struct Slot {
    model::Session<float> session;
    std::vector<float> logits;
    std::uint64_t used;
  };
  const model::Transformer<float>* m_;
  std::vector<Slot> slots_;
  std::uint64_t clock_ = 0;
};

template <NextTokenModel M>
std::vector<double> next_distribution(M& m, std::span<const Id> ctx) {
  auto lp = m.log_probs(ctx);
  for (auto& x : lp) x = std::exp(x);
  return lp;
}

// Ids by descending probability, lower id first on ties.
inline std::vector<Id> rank_order(std::span<const double> dist) {
  std::vector<Id> ids(dist.size());
  std::iota(ids.begin(), ids.end(), Id{0});
  std::stable_sort(ids.begin(), ids.end(), [&](Id a, Id b) { return dist[a] > dist[b]; });
  return ids;
}

inline Id argmax(std::span<const double> dist) {
  if (dist.empty()) throw ContractError("argmax of an empty distribution");
  Id best = 0;
  for (Id i = 1; i < dist.size(); ++i)
    if (dist[i] > dist[best]) best = i;
  return best;
}

// Smallest probability-sorted prefix whose mass reaches p.
inline std::vector<Id> nucleus(std::span<const double> dist, double p) {
  if (!(p > 0 && p <= 1)) throw ConfigError("p must be in (0, 1]");
  std::vector<Id> out;
  double cum = 0;
  for (Id id : rank_order(dist)) {
    out.push_back(id);
    cum += dist[id];
    if (cum >= p - 1e-12) break;
  }
  return out;
}

// The distribution a sampling method actually draws from.
inline std::vector<double> shaped(std::span<const double> dist, const DecodeConfig& cfg) {
  cfg.validate();
  std::vector<double> q(dist.begin(), dist.end());
  auto keep_only = [&](const std::vector<Id>& keep) {
    std::vector<double> r(q.size(), 0.0);
    double s = 0;
    for (Id id : keep) s += q[id];
    for (Id id : keep) r[id] = q[id] / s;
    q = std::move(r);
  };
  switch (cfg.method) {
    case Method::Sample: break;
    case Method::Temperature: {
      const double t = std::max(cfg.temp, kMinTemp);
      double mx = -std::numeric_limits<double>::infinity();
      for (double x : q)
        if (x > 0) mx = std::max(mx, std::log(x) / t);
      double s = 0;
      for (auto& x : q) {
        x = x > 0 ? std::exp(std::log(x) / t - mx) : 0.0;
        s += x;
      }
      for (auto& x : q) x /= s;
      break;
    }
    case Method::TopK: {
      auto order = rank_order(q);
      order.resize(std::min(order.size(), static_cast<std::size_t>(cfg.k)));
      keep_only(order);
      break;
    }
    case Method::TopP: keep_only(nucleus(q, cfg.p)); break;
    case Method::Greedy: {
      std::vector<double> r(q.size(), 0.0);
      r[argmax(q)] = 1.0;
      q = std::move(r);
      break;
    }
    case Method::Beam: throw ContractError("beam search is not a per-token picking method");
  }
  return q;
}

inline Id sample_from(std::span<const double> q, Rng& rng) {
  const double u = rng.uniform();
  double cum = 0;
  Id last = 0;
  for (Id i = 0; i < q.size(); ++i) {
    if (q[i] <= 0) continue;
    cum += q[i];
    last = i;
    if (u < cum) return i;
  }
  return last;  // rounding left u above the final cumulative sum
}

inline Id pick(std::span<const double> dist, const DecodeConfig& cfg, Rng& rng) {
  if (cfg.method == Method::Greedy) return argmax(dist);
  return sample_from(shaped(dist, cfg), rng);
}

// ---------------------------------------------------------------------------
// Beam search: top-b expansions by raw cumulative log-probability; beams that
// emit a stop id leave for the finished pool. The best finished candidate
// wins, else the best live one. Ties go to the lexicographically smaller ids.

inline bool better(const Candidate& a, const Candidate& b) {
  if (a.logprob != b.logprob) return a.logprob > b.logprob;
  return a.ids < b.ids;
}

template <NextTokenModel M>
Candidate beam_search(M& m, std::span<const Id> ctx, const DecodeConfig& cfg, std::span<const Id> stop) {
  cfg.validate();
  if (cfg.method != Method::Beam) throw ConfigError("beam_search needs method=beam");
  std::vector<Candidate> live{Candidate{}}, finished;
  std::vector<Id> buf(ctx.begin(), ctx.end());
  for (int step = 0; step < cfg.max_new && !live.empty(); ++step) {
    struct Ext {
      double lp;
      std::size_t beam;
      Id id;
    };
    std::vector<Ext> ext;
    for (std::size_t bi = 0; bi < live.size(); ++bi) {
      buf.resize(ctx.size());
      buf.insert(buf.end(), live[bi].ids.begin(), live[bi].ids.end());
      const auto lp = m.log_probs(buf);
      for (Id v = 0; v < lp.size(); ++v)
        if (std::isfinite(lp[v])) ext.push_back({live[bi].logprob + lp[v], bi, v});
    }
    // live is kept sorted by `better`, so (beam index, id) order is the
    // lexicographic order of the extended sequences among equal scores.
    const auto keep = std::min(ext.size(), static_cast<std::size_t>(cfg.b));
    std::partial_sort(ext.begin(), ext.begin() + static_cast<std::ptrdiff_t>(keep), ext.end(),
                      [&](const Ext& a, const Ext& b) {
                        if (a.lp != b.lp) return a.lp > b.lp;
                        if (live[a.beam].ids != live[b.beam].ids) return live[a.beam].ids < live[b.beam].ids;
                        return a.id < b.id;
                      });
    std::vector<Candidate> next;
    for (std::size_t i = 0; i < keep; ++i) {
      Candidate c{live[ext[i].beam].ids, ext[i].lp, false};
      c.ids.push_back(ext[i].id);
      if (std::find(stop.begin(), stop.end(), ext[i].id) != stop.end()) {
        c.finished = true;
        finished.push_back(std::move(c));
      } else {
        next.push_back(std::move(c));
      }
    }
    live = std::move(next);
  }
  auto& pool = finished.empty() ? live : finished;
  if (pool.empty()) return {};
  return *std::min_element(pool.begin(), pool.end(), better);
}

// Rolls out one candidate with a per-token method.
template <NextTokenModel M>
Candidate rollout(M& m, std::span<const Id> ctx, const DecodeConfig& cfg, std::span<const Id> stop) {
  cfg.validate();
  Rng rng(cfg.seed);
  Candidate c;
  std::vector<Id> buf(ctx.begin(), ctx.end());
  for (int step = 0; step < cfg.max_new; ++step) {
    const auto lp = m.log_probs(buf);
    std::vector<double> dist(lp.size());
    for (std::size_t i = 0; i < lp.size(); ++i) dist[i] = std::exp(lp[i]);
    // Greedy reads the log-probabilities so it agrees with a one-wide beam.
    const Id id = cfg.method == Method::Greedy ? argmax(lp) : pick(dist, cfg, rng);
    c.ids.push_back(id);
    c.logprob += lp[id];
    buf.push_back(id);
    if (std::find(stop.begin(), stop.end(), id) != stop.end()) {
      c.finished = true;
      break;
    }
  }
  return c;
}

template <NextTokenModel M>
Candidate generate(M& m, std::span<const Id> ctx, const DecodeConfig& cfg, std::span<const Id> stop) {
  return cfg.method == Method::Beam ? beam_search(m, ctx, cfg, stop) : rollout(m, ctx, cfg, stop);
}

struct Completion {
  std::vector<Id> ids;  // generated ids, stop id excluded
  std::string text;
  bool finished = false;
};

// Line completion: keeps the trailing block_size - max_new context ids, then
// generates until <EOL> (or </s>) or max_new ids.
template <NextTokenModel M>
Completion complete_line(M& m, std::span<const Id> ctx, const DecodeConfig& cfg, const bpe::Vocab& vocab) {
  if (ctx.empty()) throw ContractError("line completion needs a non-empty context");
  cfg.validate();
  if constexpr (requires { m.block_size(); }) {
    const auto keep = static_cast<std::size_t>(std::max(1, m.block_size() - cfg.max_new));
    if (ctx.size() > keep) ctx = ctx.last(keep);
  }
  std::vector<Id> stop;
  for (auto s : {corpus::kEol, corpus::kEos})
    if (auto id = vocab.find(std::string(s))) stop.push_back(*id);
  auto c = generate(m, ctx, cfg, stop);
  Completion out;
  out.finished = c.finished;
  out.ids = std::move(c.ids);
  if (out.finished) out.ids.pop_back();
  out.text = vocab.decode(out.ids);
  return out;
}

template <NextTokenModel M>
std::vector<Id> topk_ranks(M& m, std::span<const Id> ctx, std::size_t R = 5) {
  if (R < 1) throw ConfigError("R must be at least 1");
  auto order = rank_order(next_distribution(m, ctx));
  order.resize(std::min(R, order.size()));
  return order;
}

}  // namespace tyco::decode
