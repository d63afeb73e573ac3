#pragma once

// Training loops: single-task LM, hard sharing (one model, weighted sum of
// code and type losses), soft sharing (two models tied by a parameter
// distance term) and intermediate fine-tuning (type task, then code task).

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tyco/align.hpp"
#include "tyco/autodiff.hpp"
#include "tyco/error.hpp"
#include "tyco/model.hpp"
#include "tyco/rng.hpp"

namespace tyco::train {

using ad::Graph;
using ad::Parameter;
using ad::Var;
using bpe::Id;
using model::Transformer;

struct TaskWeights {
  double alpha_type = 1.0;
  double alpha_code = 1.0;

  void validate() const {
    if (alpha_type < 0 || alpha_code < 0) throw ConfigError("task weights must be non-negative");
    if (alpha_type == 0 && alpha_code == 0) throw ConfigError("task weights cannot both be zero");
  }
  // a:b as type:code.
  static TaskWeights ratio(double a, double b) {
    if (a < 0 || b < 0 || a + b <= 0) throw ConfigError("invalid weight ratio");
    return {a / (a + b), b / (a + b)};
  }
  static TaskWeights none() { return {1.0, 1.0}; }
};

struct TrainConfig {
  double learning_rate = 1e-3;
  double weight_decay = 0.01;
  int batch_size = 8;
  int grad_accum_steps = 1;
  int max_steps = 1000;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(learning_rate > 0) || weight_decay < 0 || batch_size < 1 || grad_accum_steps < 1 || max_steps < 1)
      throw ConfigError("training config values must be positive");
  }
};

// ---------------------------------------------------------------------------
// AdamW with bias correction and decoupled weight decay.

struct AdamState {
  std::vector<std::vector<float>> m, v;
  std::uint64_t t = 0;
};

inline constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kAdamEps = 1e-8;

template <class T>
void adam_step(std::span<Parameter<T>* const> params, AdamState& st, double lr, double wd) {
  if (st.m.size() != params.size()) {
    st.m.assign(params.size(), {});
    st.v.assign(params.size(), {});
    for (std::size_t i = 0; i < params.size(); ++i) {
      st.m[i].assign(params[i]->value.size(), 0.f);
      st.v[i].assign(params[i]->value.size(), 0.f);
    }
  }
  ++st.t;
  const double bc1 = 1.0 - std::pow(kBeta1, static_cast<double>(st.t));
  const double bc2 = 1.0 - std::pow(kBeta2, static_cast<double>(st.t));
  const float b1 = static_cast<float>(kBeta1), b2 = static_cast<float>(kBeta2);
  const float step = static_cast<float>(lr / bc1);
  const float rbc2 = static_cast<float>(1.0 / std::sqrt(bc2));
  const float decay = static_cast<float>(1.0 - lr * wd);
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto& p = *params[i];
    if (st.m[i].size() != p.value.size()) throw ContractError("Adam state does not match " + p.name);
    float* m = st.m[i].data();
    float* v = st.v[i].data();
    for (std::size_t k = 0; k < p.value.size(); ++k) {
      const float g = static_cast<float>(p.grad[k]);
      m[k] = b1 * m[k] + (1.f - b1) * g;
      v[k] = b2 * v[k] + (1.f - b2) * g * g;
      const float upd = step * m[k] / (std::sqrt(v[k]) * rbc2 + static_cast<float>(kAdamEps));
      p.value.data[k] = static_cast<T>(static_cast<float>(p.value.data[k]) * decay - upd);
    }
  }
}

// ---------------------------------------------------------------------------
// Data streams.

enum class Role { Code, Type };

// Endless, epoch-shuffled sequence source with its own generator.
class Stream {
 public:
  Stream() = default;
  Stream(std::vector<std::vector<Id>> seqs, std::uint64_t seed) : seqs_(std::move(seqs)), rng_(seed) {
    std::erase_if(seqs_, [](const auto& s) { return s.size() < 2; });
    order_.resize(seqs_.size());
    reshuffle();
  }

  bool empty() const { return seqs_.empty(); }
  std::size_t size() const { return seqs_.size(); }
  const std::vector<std::vector<Id>>& sequences() const { return seqs_; }

  std::vector<std::vector<Id>> next(int n) {
    if (seqs_.empty()) throw ConfigError("training stream is empty");
    std::vector<std::vector<Id>> out;
    for (int i = 0; i < n; ++i) {
      if (pos_ == order_.size()) reshuffle();
      out.push_back(seqs_[order_[pos_++]]);
    }
    return out;
  }

 private:
  void reshuffle() {
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    rng_.shuffle(std::span(order_));
    pos_ = 0;
  }

  std::vector<std::vector<Id>> seqs_;
  std::vector<std::size_t> order_;
  std::size_t pos_ = 0;
  Rng rng_;
};

// Block-sized windows of one role from aligned samples.
inline std::vector<std::vector<Id>> windows(std::span<const align::AlignedSample> data, Role role,
                                            int block_size) {
  std::vector<std::vector<Id>> out;
  for (const auto& a : data) {
    for (auto& c : align::chunk(a, static_cast<std::size_t>(block_size))) {
      auto& ids = role == Role::Code ? c.code_ids : c.type_ids;
      if (ids.size() >= 2) out.push_back(std::move(ids));
    }
  }
  return out;
}

// Seeds for the independent generators of one run.
struct Seeds {
  std::uint64_t base;
  std::uint64_t code_data() const { return base * 4 + 1; }
  std::uint64_t type_data() const { return base * 4 + 2; }
  std::uint64_t code_drop() const { return base * 4 + 3; }
  std::uint64_t type_drop() const { return base * 4 + 4; }
};

// ---------------------------------------------------------------------------
// History.

struct StepRecord {
  int step = 0;
  std::optional<double> l_code, l_type, l_sharing;
  std::string phase;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["step"] = step;
    j["l_code"] = l_code ? nlohmann::json(*l_code) : nlohmann::json(nullptr);
    j["l_type"] = l_type ? nlohmann::json(*l_type) : nlohmann::json(nullptr);
    if (l_sharing) j["l_sharing"] = *l_sharing;
    if (!phase.empty()) j["phase"] = phase;
    return j;
  }
  bool operator==(const StepRecord&) const = default;
};

using History = std::vector<StepRecord>;
// Returning false stops training after the current step.
using StepHook = std::function<bool(const StepRecord&)>;

inline void write_history(const std::filesystem::path& path, const History& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& r : h) out << r.to_json().dump() << '\n';
}

// ---------------------------------------------------------------------------
// Parameter distance.

// sqrt(sum over matched coordinates of (a - b)^2 + 1e-12) as a graph node.
template <class T>
Var sharing_loss(Graph<T>& g, std::span<Parameter<T>* const> a, std::span<Parameter<T>* const> b) {
  if (a.size() != b.size()) throw ContractError("sharing_loss over parameter lists of different length");
  std::vector<Var> ins;
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]->value.shape != b[i]->value.shape)
      throw ContractError("sharing_loss shape mismatch for " + a[i]->name + ": " +
                          ad::Tensor<T>::str(a[i]->value.shape) + " vs " +
                          ad::Tensor<T>::str(b[i]->value.shape));
    for (std::size_t k = 0; k < a[i]->value.size(); ++k) {
      const double d = static_cast<double>(a[i]->value.data[k]) - static_cast<double>(b[i]->value.data[k]);
      s += d * d;
    }
    ins.push_back(g.param(*a[i]));
    ins.push_back(g.param(*b[i]));
  }
  const double dist = std::sqrt(s + 1e-12);
  return g.custom("sharing_loss", ad::Tensor<T>({}, std::vector<T>{static_cast<T>(dist)}), ins,
                  [ins, dist](Graph<T>& gg, const typename Graph<T>::Node& self) {
                    const double scale = static_cast<double>(self.grad[0]) / dist;
                    for (std::size_t i = 0; i + 1 < ins.size(); i += 2) {
                      const auto& A = gg.value(ins[i]);
                      const auto& B = gg.value(ins[i + 1]);
                      T* ga = gg.acc(ins[i]);
                      T* gb = gg.acc(ins[i + 1]);
                      for (std::size_t k = 0; k < A.size(); ++k) {
                        const T d = static_cast<T>(scale * (static_cast<double>(A[k]) - static_cast<double>(B[k])));
                        if (ga) ga[k] += d;
                        if (gb) gb[k] -= d;
                      }
                    }
                  });
}

template <class T>
double parameter_distance(const Transformer<T>& a, const Transformer<T>& b) {
  if (!(a.config() == b.config())) throw ConfigError("models have different configs");
  double s = 0;
  for (std::size_t i = 0; i < a.params().size(); ++i)
    for (std::size_t k = 0; k < a.p(i).value.size(); ++k) {
      const double d = static_cast<double>(a.p(i).value.data[k]) - static_cast<double>(b.p(i).value.data[k]);
      s += d * d;
    }
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Strategies. All run in float.

using Model = Transformer<float>;

namespace detail {

inline Rng* dropout_rng(const Model& m, Rng& r) { return m.config().dropout > 0 ? &r : nullptr; }

inline bool emit(History& h, const StepHook& hook, StepRecord rec) {
  h.push_back(rec);
  return !hook || hook(h.back());
}

}  // namespace detail

// Plain causal LM training on one stream.
inline History train_single(Model& m, Stream& data, const TrainConfig& cfg, Role role = Role::Code,
                            const StepHook& hook = {}, Rng* drop = nullptr,
                            const std::string& phase = {}) {
  cfg.validate();
  if (data.empty()) throw ConfigError("training stream is empty");
  Rng own_drop(role == Role::Code ? Seeds{cfg.seed}.code_drop() : Seeds{cfg.seed}.type_drop());
  Rng& dr = drop ? *drop : own_drop;
  AdamState st;
  auto ps = m.param_ptrs();
  History h;
  for (int step = 0; step < cfg.max_steps; ++step) {
    m.zero_grad();
    double total = 0;
    for (int a = 0; a < cfg.grad_accum_steps; ++a) {
      Graph<float> g;
      const auto batch = data.next(cfg.batch_size);
      auto l = model::lm_loss(g, m, batch, detail::dropout_rng(m, dr));
      total += g.value(l).item();
      auto scaled = g.scale(l, 1.0f / static_cast<float>(cfg.grad_accum_steps));
      g.backward(scaled);
    }
    adam_step<float>(ps, st, cfg.learning_rate, cfg.weight_decay);
    StepRecord r;
    r.step = step;
    r.phase = phase;
    (role == Role::Code ? r.l_code : r.l_type) = total / cfg.grad_accum_steps;
    if (!detail::emit(h, hook, r)) break;
  }
  return h;
}

// One model, L = alpha_code * L_code + alpha_type * L_type per step. Both
// branches are always evaluated; a zero weight zeroes its gradient.
inline History train_hard(Model& m, Stream& code, Stream& type, const TaskWeights& w,
                          const TrainConfig& cfg, const StepHook& hook = {}) {
  cfg.validate();
  w.validate();
  if (code.empty() || type.empty()) throw ConfigError("hard sharing needs non-empty code and type streams");
  const Seeds seeds{cfg.seed};
  Rng code_drop(seeds.code_drop()), type_drop(seeds.type_drop());
  AdamState st;
  auto ps = m.param_ptrs();
  History h;
  const float inv = 1.0f / static_cast<float>(cfg.grad_accum_steps);
  for (int step = 0; step < cfg.max_steps; ++step) {
    m.zero_grad();
    double lc = 0, lt = 0;
    for (int a = 0; a < cfg.grad_accum_steps; ++a) {
      Graph<float> g;
      const auto cb = code.next(cfg.batch_size);
      const auto tb = type.next(cfg.batch_size);
      auto l_code = model::lm_loss(g, m, cb, detail::dropout_rng(m, code_drop));
      auto l_type = model::lm_loss(g, m, tb, detail::dropout_rng(m, type_drop));
      lc += g.value(l_code).item();
      lt += g.value(l_type).item();
      auto total = g.add(g.scale(l_code, static_cast<float>(w.alpha_code)),
                         g.scale(l_type, static_cast<float>(w.alpha_type)));
      g.backward(g.scale(total, inv));
    }
    adam_step<float>(ps, st, cfg.learning_rate, cfg.weight_decay);
    StepRecord r;
    r.step = step;
    r.l_code = lc / cfg.grad_accum_steps;
    r.l_type = lt / cfg.grad_accum_steps;
    if (!detail::emit(h, hook, r)) break;
  }
  return h;
}

struct SoftOptions {
  bool sharing = true;     // false drops the distance term (ablation)
  double sharing_weight = 1.0;
};

// Two models: model_type sees the type stream, model_code the code stream,
// and the distance between their parameters is added to the loss.
inline History train_soft(Model& model_code, Model& model_type, Stream& code, Stream& type,
                          const TaskWeights& w, const TrainConfig& cfg, const StepHook& hook = {},
                          const SoftOptions& opt = {}) {
  cfg.validate();
  w.validate();
  if (!(model_code.config() == model_type.config()))
    throw ConfigError("soft sharing needs two models with the same config");
  if (code.empty() || type.empty()) throw ConfigError("soft sharing needs non-empty code and type streams");
  const Seeds seeds{cfg.seed};
  Rng code_drop(seeds.code_drop()), type_drop(seeds.type_drop());
  AdamState st_code, st_type;
  auto pc = model_code.param_ptrs();
  auto pt = model_type.param_ptrs();
  History h;
  const float inv = 1.0f / static_cast<float>(cfg.grad_accum_steps);
  for (int step = 0; step < cfg.max_steps; ++step) {
    model_code.zero_grad();
    model_type.zero_grad();
    double lc = 0, lt = 0, ls = 0;
    for (int a = 0; a < cfg.grad_accum_steps; ++a) {
      Graph<float> g;
      const auto cb = code.next(cfg.batch_size);
      const auto tb = type.next(cfg.batch_size);
      auto l_code = model::lm_loss(g, model_code, cb, detail::dropout_rng(model_code, code_drop));
      auto l_type = model::lm_loss(g, model_type, tb, detail::dropout_rng(model_type, type_drop));
      lc += g.value(l_code).item();
      lt += g.value(l_type).item();
      auto total = g.add(g.scale(l_code, static_cast<float>(w.alpha_code)),
                         g.scale(l_type, static_cast<float>(w.alpha_type)));
      if (opt.sharing) {
        auto l_share = sharing_loss<float>(g, pt, pc);
        ls += g.value(l_share).item();
        total = g.add(total, g.scale(l_share, static_cast<float>(opt.sharing_weight)));
      }
      g.backward(g.scale(total, inv));
    }
    adam_step<float>(pc, st_code, cfg.learning_rate, cfg.weight_decay);
    adam_step<float>(pt, st_type, cfg.learning_rate, cfg.weight_decay);
    StepRecord r;
    r.step = step;
    r.l_code = lc / cfg.grad_accum_steps;
    r.l_type = lt / cfg.grad_accum_steps;
    if (opt.sharing) r.l_sharing = ls / cfg.grad_accum_steps;
    if (!detail::emit(h, hook, r)) break;
  }
  return h;
}

// Phase 2 of intermediate fine-tuning on its own, so a run resumed from the
// phase-boundary checkpoint is identical to an uninterrupted one.
inline History train_ift_phase2(Model& m, const std::vector<std::vector<Id>>& code_seqs,
                                const TrainConfig& cfg, int step_offset, const StepHook& hook = {}) {
  TrainConfig c2 = cfg;
  c2.max_steps = cfg.max_steps - cfg.max_steps / 2;
  Stream code(code_seqs, Seeds{cfg.seed}.code_data());
  auto h = train_single(m, code, c2, Role::Code,
                        [&](const StepRecord& r) {
                          return !hook || hook(StepRecord{r.step + step_offset, r.l_code, r.l_type,
                                                          r.l_sharing, r.phase});
                        },
                        nullptr, "code");
  for (auto& r : h) r.step += step_offset;
  return h;
}

// Type task for max_steps / 2, checkpoint, then code task for the rest with
// fresh optimizer state.
inline History train_ift(Model& m, const std::vector<std::vector<Id>>& type_seqs,
                         const std::vector<std::vector<Id>>& code_seqs, const TrainConfig& cfg,
                         const std::filesystem::path& boundary_ckpt, std::uint64_t vocab_hash,
                         const StepHook& hook = {}) {
  cfg.validate();
  if (type_seqs.empty() || code_seqs.empty()) throw ConfigError("IFT needs non-empty code and type streams");
  TrainConfig c1 = cfg;
  c1.max_steps = std::max(1, cfg.max_steps / 2);
  Stream type(type_seqs, Seeds{cfg.seed}.type_data());
  auto h = train_single(m, type, c1, Role::Type, hook, nullptr, "type");
  if (!boundary_ckpt.empty()) {
    model::CheckpointInfo info{vocab_hash, static_cast<std::uint64_t>(c1.max_steps), cfg.seed,
                               {{"strategy", "ift"}, {"phase", 1}}};
    model::save_checkpoint(boundary_ckpt, m, info);
  }
  if (cfg.max_steps - cfg.max_steps / 2 > 0) {
    auto h2 = train_ift_phase2(m, code_seqs, cfg, static_cast<int>(h.size()), hook);
    h.insert(h.end(), h2.begin(), h2.end());
  }
  return h;
}

}  // namespace tyco::train
