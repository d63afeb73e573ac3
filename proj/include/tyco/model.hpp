#pragma once

// Decoder-only transformer: token + position embeddings, pre-norm blocks of
// causal multi-head attention and a 4x GELU feed-forward, final layer norm,
// output head tied to the token embedding.

#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tyco/autodiff.hpp"
#include "tyco/bpe.hpp"
#include "tyco/error.hpp"
#include "tyco/rng.hpp"

namespace tyco::model {

using ad::Graph;
using ad::Parameter;
using ad::Tensor;
using ad::Var;
using bpe::Id;

struct ModelConfig {
  int n_layer = 4;
  int n_head = 4;
  int n_embd = 128;
  int block_size = 256;
  int vocab_size = 0;
  double dropout = 0.1;

  void validate() const {
    if (n_layer < 1 || n_head < 1 || n_embd < 1 || vocab_size < 1)
      throw ConfigError("model dimensions must be positive");
    if (n_embd % n_head != 0)
      throw ConfigError("n_embd " + std::to_string(n_embd) + " is not divisible by n_head " +
                        std::to_string(n_head));
    if (block_size < 2) throw ConfigError("block_size must be at least 2");
    if (dropout < 0 || dropout >= 1) throw ConfigError("dropout must lie in [0, 1)");
  }
  int head_dim() const { return n_embd / n_head; }
  bool operator==(const ModelConfig&) const = default;
};

inline nlohmann::ordered_json to_json(const ModelConfig& c) {
  return {{"n_layer", c.n_layer}, {"n_head", c.n_head},         {"n_embd", c.n_embd},
          {"block_size", c.block_size}, {"vocab_size", c.vocab_size}, {"dropout", c.dropout}};
}

inline ModelConfig config_from_json(const nlohmann::json& j) {
  ModelConfig c;
  c.n_layer = j.at("n_layer").get<int>();
  c.n_head = j.at("n_head").get<int>();
  c.n_embd = j.at("n_embd").get<int>();
  c.block_size = j.at("block_size").get<int>();
  c.vocab_size = j.at("vocab_size").get<int>();
  c.dropout = j.at("dropout").get<double>();
  return c;
}

// Closed-form parameter count: per layer 12E^2 + 13E, plus VE + BE + 2E.
inline std::size_t parameter_count(const ModelConfig& c) {
  const std::size_t E = static_cast<std::size_t>(c.n_embd);
  return static_cast<std::size_t>(c.n_layer) * (12 * E * E + 13 * E) +
         static_cast<std::size_t>(c.vocab_size) * E + static_cast<std::size_t>(c.block_size) * E +
         2 * E;
}

template <class T>
class Transformer {
 public:
  struct Head {
    std::size_t wq, bq, wk, bk, wv, bv, wo;
  };
  struct Layer {
    std::size_t ln1_g, ln1_b;
    std::vector<Head> heads;
    std::size_t bo;
    std::size_t ln2_g, ln2_b, fc_w, fc_b, proj_w, proj_b;
  };

  Transformer() = default;

  // Weights ~ Normal(0, 0.02) drawn in parameter order, biases 0,
  // layer-norm scale 1 and shift 0.
  Transformer(const ModelConfig& cfg, std::uint64_t seed) : cfg_(cfg) {
    cfg.validate();
    layout();
    Rng rng(seed);
    for (auto& p : params_) {
      const auto& n = p.name;
      const bool is_weight = n == "wte" || n == "wpe" || n.ends_with(".w");
      const bool is_scale = n.ends_with(".g");
      for (auto& x : p.value.data)
        x = is_weight ? static_cast<T>(rng.normal(0.0, 0.02)) : is_scale ? T(1) : T(0);
    }
  }

  template <class U>
  Transformer<U> cast() const {
    Transformer<U> out;
    out.cfg_ = cfg_;
    out.layout();
    for (std::size_t i = 0; i < params_.size(); ++i)
      for (std::size_t k = 0; k < params_[i].value.size(); ++k)
        out.params_[i].value.data[k] = static_cast<U>(params_[i].value.data[k]);
    return out;
  }

  const ModelConfig& config() const { return cfg_; }
  std::vector<Parameter<T>>& params() { return params_; }
  const std::vector<Parameter<T>>& params() const { return params_; }
  const std::vector<Layer>& layers() const { return layers_; }
  Parameter<T>& p(std::size_t i) { return params_[i]; }
  const Parameter<T>& p(std::size_t i) const { return params_[i]; }
  static constexpr std::size_t kWte = 0, kWpe = 1;
  std::size_t ln_f_g() const { return params_.size() - 2; }
  std::size_t ln_f_b() const { return params_.size() - 1; }

  std::size_t num_parameters() const {
    std::size_t n = 0;
    for (const auto& q : params_) n += q.value.size();
    return n;
  }

  void zero_grad() {
    for (auto& q : params_) q.zero_grad();
  }

  std::vector<Parameter<T>*> param_ptrs() {
    std::vector<Parameter<T>*> out;
    for (auto& q : params_) out.push_back(&q);
    return out;
  }

 private:
  template <class U>
  friend class Transformer;

  std::size_t add(std::string name, std::vector<int> shape) {
    params_.emplace_back(std::move(name), Tensor<T>(std::move(shape)));
    return params_.size() - 1;
  }

  void layout() {
    const int E = cfg_.n_embd, d = cfg_.head_dim();
    params_.clear();
    layers_.clear();
    params_.reserve(static_cast<std::size_t>(2 + cfg_.n_layer * (9 + 7 * cfg_.n_head) + 2));
    add("wte", {cfg_.vocab_size, E});
    add("wpe", {cfg_.block_size, E});
    for (int l = 0; l < cfg_.n_layer; ++l) {
      const std::string pre = "h" + std::to_string(l) + ".";
      Layer L;
      L.ln1_g = add(pre + "ln1.g", {E});
      L.ln1_b = add(pre + "ln1.b", {E});
      for (int h = 0; h < cfg_.n_head; ++h) {
        const std::string hp = pre + "attn." + std::to_string(h) + ".";
        Head H;
        H.wq = add(hp + "q.w", {E, d});
        H.bq = add(hp + "q.b", {d});
        H.wk = add(hp + "k.w", {E, d});
        H.bk = add(hp + "k.b", {d});
        H.wv = add(hp + "v.w", {E, d});
        H.bv = add(hp + "v.b", {d});
        H.wo = add(hp + "o.w", {d, E});
        L.heads.push_back(H);
      }
      L.bo = add(pre + "attn.o.b", {E});
      L.ln2_g = add(pre + "ln2.g", {E});
      L.ln2_b = add(pre + "ln2.b", {E});
      L.fc_w = add(pre + "mlp.fc.w", {E, 4 * E});
      L.fc_b = add(pre + "mlp.fc.b", {4 * E});
      L.proj_w = add(pre + "mlp.proj.w", {4 * E, E});
      L.proj_b = add(pre + "mlp.proj.b", {E});
      layers_.push_back(std::move(L));
    }
    add("ln_f.g", {E});
    add("ln_f.b", {E});
  }

  ModelConfig cfg_;
  std::vector<Parameter<T>> params_;
  std::vector<Layer> layers_;
};

namespace detail {

inline const std::vector<std::uint8_t>& causal_mask(int t) {
  thread_local std::map<int, std::vector<std::uint8_t>> cache;
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  std::vector<std::uint8_t> m(static_cast<std::size_t>(t) * t, 0);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) m[static_cast<std::size_t>(i) * t + j] = 1;
  return cache.emplace(t, std::move(m)).first->second;
}

}  // namespace detail

// Logits [sum of lengths, vocab] for a batch of sequences laid out row after
// row. `drop` supplies dropout masks; nullptr disables dropout.
template <class T>
Var forward(Graph<T>& g, Transformer<T>& m, std::span<const std::vector<Id>> seqs, Rng* drop = nullptr) {
  const auto& cfg = m.config();
  const int d = cfg.head_dim();
  const T p = drop ? static_cast<T>(cfg.dropout) : T(0);
  std::vector<std::uint32_t> ids, pos;
  std::vector<int> offs, lens;
  for (const auto& s : seqs) {
    if (s.empty()) throw ContractError("empty sequence passed to forward");
    if (static_cast<int>(s.size()) > cfg.block_size)
      throw ContractError("sequence of " + std::to_string(s.size()) + " ids exceeds block_size " +
                          std::to_string(cfg.block_size));
    offs.push_back(static_cast<int>(ids.size()));
    lens.push_back(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= static_cast<Id>(cfg.vocab_size))
        throw ContractError("token id " + std::to_string(s[i]) + " >= vocab_size " +
                            std::to_string(cfg.vocab_size));
      ids.push_back(s[i]);
      pos.push_back(static_cast<std::uint32_t>(i));
    }
  }
  Rng dummy;
  Rng& r = drop ? *drop : dummy;
  auto P = [&](std::size_t i) { return g.param(m.p(i)); };

  const Var wte = P(Transformer<T>::kWte);
  Var x = g.add(g.embedding(wte, ids), g.embedding(P(Transformer<T>::kWpe), pos));
  x = g.dropout(x, p, r);
  const T inv = T(1) / std::sqrt(static_cast<T>(d));
  const bool single = seqs.size() == 1;

  for (const auto& L : m.layers()) {
    const Var h = g.layer_norm(x, P(L.ln1_g), P(L.ln1_b));
    Var attn{};
    bool first = true;
    for (const auto& H : L.heads) {
      const Var q = g.add(g.matmul(h, P(H.wq)), P(H.bq));
      const Var k = g.add(g.matmul(h, P(H.wk)), P(H.bk));
      const Var v = g.add(g.matmul(h, P(H.wv)), P(H.bv));
      std::vector<Var> outs;
      for (std::size_t b = 0; b < seqs.size(); ++b) {
        const int o = offs[b], t = lens[b];
        const Var qb = single ? q : g.slice_rows(q, o, t);
        const Var kb = single ? k : g.slice_rows(k, o, t);
        const Var vb = single ? v : g.slice_rows(v, o, t);
        Var s = g.scale(g.matmul(qb, g.transpose(kb)), inv);
        s = g.masked_fill(s, detail::causal_mask(t), T(-1e9));
        Var a = g.dropout(g.softmax(s), p, r);
        outs.push_back(g.matmul(a, vb));
      }
      const Var ho = single ? outs[0] : g.concat_rows(outs);
      const Var proj = g.matmul(ho, P(H.wo));
      attn = first ? proj : g.add(attn, proj);
      first = false;
    }
    attn = g.add(attn, P(L.bo));
    x = g.add(x, g.dropout(attn, p, r));
    const Var h2 = g.layer_norm(x, P(L.ln2_g), P(L.ln2_b));
    Var f = g.gelu(g.add(g.matmul(h2, P(L.fc_w)), P(L.fc_b)));
    f = g.add(g.matmul(f, P(L.proj_w)), P(L.proj_b));
    x = g.add(x, g.dropout(f, p, r));
  }
  x = g.layer_norm(x, P(m.ln_f_g()), P(m.ln_f_b()));
  return g.matmul(x, g.transpose(wte));
}

// Next-token targets for a batch: position i predicts id i+1; the last
// position of every sequence is ignored.
inline std::vector<int> next_token_targets(std::span<const std::vector<Id>> seqs) {
  std::vector<int> t;
  for (const auto& s : seqs) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) t.push_back(static_cast<int>(s[i + 1]));
    if (!s.empty()) t.push_back(-1);
  }
  return t;
}

// Mean negative log-likelihood of ids[1..] given their prefixes.
template <class T>
Var lm_loss(Graph<T>& g, Transformer<T>& m, std::span<const std::vector<Id>> seqs, Rng* drop = nullptr) {
  for (const auto& s : seqs)
    if (s.size() < 2) throw ContractError("lm_loss needs sequences of at least 2 ids");
  const auto logits = forward(g, m, seqs, drop);
  const auto targets = next_token_targets(seqs);
  return g.cross_entropy(logits, targets);
}

template <class T>
Tensor<T> logits(const Transformer<T>& m, const std::vector<Id>& ids) {
  Graph<T> g(false);
  auto& mm = const_cast<Transformer<T>&>(m);  // a non-recording graph never writes parameters
  const std::vector<Id>* one = &ids;
  return g.value(forward(g, mm, std::span<const std::vector<Id>>(one, 1)));
}

// ---------------------------------------------------------------------------
// Incremental inference with a key/value cache.

template <class T>
class Session {
 public:
  explicit Session(const Transformer<T>& m) : m_(&m) {
    const auto& c = m.config();
    const auto per = static_cast<std::size_t>(c.block_size) * static_cast<std::size_t>(c.head_dim());
    keys_.assign(static_cast<std::size_t>(c.n_layer * c.n_head), std::vector<T>(per));
    vals_ = keys_;
  }

  std::size_t length() const { return len_; }
  const std::vector<Id>& tokens() const { return tokens_; }
  void reset() {
    len_ = 0;
    tokens_.clear();
  }

  // Copies the filled part of another session's cache.
  void copy_from(const Session& o) {
    if (o.m_ != m_) throw ContractError("sessions belong to different models");
    const auto n = o.len_ * static_cast<std::size_t>(m_->config().head_dim());
    for (std::size_t s = 0; s < keys_.size(); ++s) {
      std::copy_n(o.keys_[s].begin(), n, keys_[s].begin());
      std::copy_n(o.vals_[s].begin(), n, vals_[s].begin());
    }
    len_ = o.len_;
    tokens_ = o.tokens_;
  }

  // Feeds one id and returns the logits for the next position.
  std::vector<T> step(Id id) {
    const auto& c = m_->config();
    if (static_cast<int>(len_) >= c.block_size)
      throw ContractError("session is full at block_size " + std::to_string(c.block_size));
    if (id >= static_cast<Id>(c.vocab_size))
      throw ContractError("token id " + std::to_string(id) + " >= vocab_size");
    const int E = c.n_embd, d = c.head_dim();
    using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
    using CMap = Eigen::Map<const Vec>;
    auto W = [&](std::size_t i, int r, int cc) {
      return ad::CMapMat<T>(m_->p(i).value.data.data(), r, cc);
    };
    auto V = [&](std::size_t i, int n) { return CMap(m_->p(i).value.data.data(), n); };

    Vec x = V(0, c.vocab_size * E).segment(static_cast<Eigen::Index>(id) * E, E) +
            V(1, c.block_size * E).segment(static_cast<Eigen::Index>(len_) * E, E);
    const T inv = T(1) / std::sqrt(static_cast<T>(d));
    const int t = static_cast<int>(len_) + 1;
    std::vector<T> sc(static_cast<std::size_t>(t));
    std::size_t slot = 0;
    for (const auto& L : m_->layers()) {
      Vec h = ln(x, L.ln1_g, L.ln1_b);
      Vec attn = V(L.bo, E);
      for (const auto& H : L.heads) {
        Vec q = W(H.wq, E, d).transpose() * h + V(H.bq, d);
        auto& K = keys_[slot];
        auto& Vv = vals_[slot];
        ++slot;
        Eigen::Map<Vec>(&K[len_ * static_cast<std::size_t>(d)], d) = W(H.wk, E, d).transpose() * h + V(H.bk, d);
        Eigen::Map<Vec>(&Vv[len_ * static_cast<std::size_t>(d)], d) = W(H.wv, E, d).transpose() * h + V(H.bv, d);
        ad::CMapMat<T> Km(K.data(), t, d), Vm(Vv.data(), t, d);
        Eigen::Map<Vec> s(sc.data(), t);
        s = (Km * q) * inv;
        Graph<T>::softmax_row(sc.data(), sc.data(), t);
        Vec o = Vm.transpose() * s;
        attn += W(H.wo, d, E).transpose() * o;
      }
      x += attn;
      Vec h2 = ln(x, L.ln2_g, L.ln2_b);
      Vec f = W(L.fc_w, E, 4 * E).transpose() * h2 + V(L.fc_b, 4 * E);
      for (auto& z : f) {
        const T u = T(0.7978845608028654) * (z + T(0.044715) * z * z * z);
        z = T(0.5) * z * (T(1) + std::tanh(u));
      }
      x += W(L.proj_w, 4 * E, E).transpose() * f + V(L.proj_b, E);
    }
    Vec hf = ln(x, m_->ln_f_g(), m_->ln_f_b());
    std::vector<T> out(static_cast<std::size_t>(c.vocab_size));
    Eigen::Map<Vec>(out.data(), c.vocab_size) = W(0, c.vocab_size, E) * hf;
    ++len_;
    tokens_.push_back(id);
    return out;
  }

  // Feeds a run of ids; returns the logits after the last one.
  std::vector<T> feed(std::span<const Id> ids) {
    std::vector<T> out;
    for (Id id : ids) out = step(id);
    return out;
  }

 private:
  Eigen::Matrix<T, Eigen::Dynamic, 1> ln(const Eigen::Matrix<T, Eigen::Dynamic, 1>& x, std::size_t g,
                                         std::size_t b) const {
    const auto n = x.size();
    const T mu = x.mean();
    Eigen::Matrix<T, Eigen::Dynamic, 1> c = x.array() - mu;
    const T var = c.squaredNorm() / static_cast<T>(n);
    const T rs = T(1) / std::sqrt(var + Graph<T>::kLayerNormEps);
    Eigen::Map<const Eigen::Matrix<T, Eigen::Dynamic, 1>> G(m_->p(g).value.data.data(), n),
        B(m_->p(b).value.data.data(), n);
    return (c * rs).cwiseProduct(G) + B;
  }

  const Transformer<T>* m_;
  std::vector<std::vector<T>> keys_, vals_;
  std::size_t len_ = 0;
  std::vector<Id> tokens_;
};

// ---------------------------------------------------------------------------
// Checkpoints: "SAOTF1", u32 header length, JSON header, then float32
// little-endian payloads in header name order.

inline constexpr char kCheckpointMagic[6] = {'S', 'A', 'O', 'T', 'F', '1'};

struct CheckpointInfo {
  std::uint64_t vocab_hash = 0;
  std::uint64_t step = 0;
  std::uint64_t seed = 0;
  nlohmann::json extra = nlohmann::json::object();
};

template <class T>
void save_checkpoint(const std::filesystem::path& path, const Transformer<T>& m,
                     const CheckpointInfo& info) {
  nlohmann::ordered_json h;
  h["format"] = "SAOTF1";
  h["config"] = to_json(m.config());
  h["vocab_hash"] = info.vocab_hash;
  h["step"] = info.step;
  h["seed"] = info.seed;
  h["extra"] = info.extra;
  h["tensors"] = nlohmann::json::array();
  for (const auto& p : m.params()) h["tensors"].push_back({{"name", p.name}, {"shape", p.value.shape}});
  const auto header = h.dump();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write checkpoint " + path.string());
  out.write(kCheckpointMagic, sizeof kCheckpointMagic);
  const auto n = static_cast<std::uint32_t>(header.size());
  for (int i = 0; i < 4; ++i) out.put(static_cast<char>((n >> (8 * i)) & 0xff));
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  for (const auto& p : m.params()) {
    for (T v : p.value.data) {
      const float f = static_cast<float>(v);
      std::uint32_t u;
      std::memcpy(&u, &f, 4);
      for (int i = 0; i < 4; ++i) out.put(static_cast<char>((u >> (8 * i)) & 0xff));
    }
  }
  if (!out) throw IoError("write failed for " + path.string());
}

template <class T>
Transformer<T> load_checkpoint(const std::filesystem::path& path, CheckpointInfo* info = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint " + path.string());
  char magic[6];
  if (!in.read(magic, 6) || std::memcmp(magic, kCheckpointMagic, 6) != 0)
    throw ContractError(path.string() + " is not a SAOTF1 checkpoint");
  unsigned char nb[4];
  if (!in.read(reinterpret_cast<char*>(nb), 4)) throw ContractError("truncated checkpoint header");
  const std::uint32_t n = nb[0] | (nb[1] << 8) | (nb[2] << 16) | (static_cast<std::uint32_t>(nb[3]) << 24);
  std::string header(n, '\0');
  if (!in.read(header.data(), n)) throw ContractError("truncated checkpoint header");
  const auto h = nlohmann::json::parse(header, nullptr, false);
  if (h.is_discarded()) throw ContractError("checkpoint header is not JSON");
  Transformer<T> m(config_from_json(h.at("config")), 0);
  const auto& tensors = h.at("tensors");
  if (tensors.size() != m.params().size()) throw ContractError("checkpoint tensor count mismatch");
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    auto& p = m.params()[i];
    if (tensors[i].at("name").get<std::string>() != p.name ||
        tensors[i].at("shape").get<std::vector<int>>() != p.value.shape)
      throw ContractError("checkpoint tensor " + tensors[i].at("name").get<std::string>() +
                          " does not match the model layout");
    for (auto& v : p.value.data) {
      unsigned char b[4];
      if (!in.read(reinterpret_cast<char*>(b), 4)) throw ContractError("truncated checkpoint payload");
      const std::uint32_t u = b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
      float f;
      std::memcpy(&f, &u, 4);
      v = static_cast<T>(f);
    }
  }
  if (info) {
    info->vocab_hash = h.at("vocab_hash").get<std::uint64_t>();
    info->step = h.at("step").get<std::uint64_t>();
    info->seed = h.at("seed").get<std::uint64_t>();
    info->extra = h.value("extra", nlohmann::json::object());
  }
  return m;
}

}  // namespace tyco::model
