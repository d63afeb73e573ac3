#pragma once

// Command implementations behind the `tyco` tool: flat key=value run
// configuration, preprocess / train / complete / eval / probe / sweep.

#include <glob.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tyco/decode.hpp"
#include "tyco/eval.hpp"
#include "tyco/fixtures.hpp"
#include "tyco/metrics.hpp"
#include "tyco/pipeline.hpp"
#include "tyco/probe.hpp"
#include "tyco/trainer.hpp"

namespace tyco::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

inline std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// ---------------------------------------------------------------------------
// Run configuration.

class RunConfig {
 public:
  RunConfig() {
    values_ = {
        {"seed", "0"},
        {"corpus.train_frac", "0.8"},
        {"corpus.valid_frac", "0.1"},
        {"corpus.max_strings", "200"},
        {"corpus.max_numbers", "30"},
        {"corpus.line_samples", "5"},
        {"corpus.line_min_prefix", "10"},
        {"vocab_size", "4096"},
        {"model.n_layer", "4"},
        {"model.n_head", "4"},
        {"model.n_embd", "128"},
        {"model.block_size", "256"},
        {"model.dropout", "0.1"},
        {"train.lr", "1e-3"},
        {"train.weight_decay", "0.01"},
        {"train.batch_size", "8"},
        {"train.grad_accum", "1"},
        {"train.max_steps", "1000"},
        {"weights", "none"},
        {"decode.method", "greedy"},
        {"decode.b", "5"},
        {"decode.temp", "1.0"},
        {"decode.k", "10"},
        {"decode.p", "0.9"},
        {"decode.max_new", "100"},
        {"eval.max_lines", "0"},
        {"sweep.seeds", "5"},
    };
  }

  void set(const std::string& key, const std::string& value) {
    if (!values_.contains(key)) throw ConfigError("unknown config key: " + key);
    values_[key] = value;
  }

  // "key=value"
  void set(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value, got: " + assignment);
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
  }

  void load_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path.string());
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      ++n;
      const auto t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      try {
        set(t);
      } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ":" + std::to_string(n) + ": " + e.what());
      }
    }
  }

  const std::string& get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("unknown config key: " + key);
    return it->second;
  }

  double real(const std::string& key) const {
    const auto& s = get(key);
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError(key + " is not a number: " + s);
    return v;
  }

  std::int64_t integer(const std::string& key) const {
    const auto& s = get(key);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError(key + " is not an integer: " + s);
    return v;
  }

  std::uint64_t seed() const {
    const auto v = integer("seed");
    if (v < 0) throw ConfigError("seed must be non-negative");
    return static_cast<std::uint64_t>(v);
  }

  std::string dump() const {
    std::string out;
    for (const auto& [k, v] : values_) out += k + "=" + v + "\n";
    return out;
  }
  std::uint64_t hash() const { return fnv1a(dump()); }

  void write(const fs::path& dir) const {
    std::ofstream out(dir / "config.resolved");
    if (!out) throw IoError("cannot write " + (dir / "config.resolved").string());
    out << "# resolved run configuration\n" << dump();
  }

  json provenance() const {
    return {{"tool", "tyco"}, {"version", kVersion}, {"config_hash", hex(hash())}, {"seed", seed()}};
  }

  corpus::CorpusConfig corpus() const {
    corpus::CorpusConfig c;
    c.seed = seed();
    c.train_frac = real("corpus.train_frac");
    c.valid_frac = real("corpus.valid_frac");
    c.max_strings = positive("corpus.max_strings", true);
    c.max_numbers = positive("corpus.max_numbers", true);
    c.line_samples_per_file = positive("corpus.line_samples", true);
    c.line_min_prefix = positive("corpus.line_min_prefix", true);
    if (c.train_frac <= 0 || c.valid_frac < 0 || c.train_frac + c.valid_frac > 1)
      throw ConfigError("corpus split fractions must satisfy 0 < train, 0 <= valid, train + valid <= 1");
    return c;
  }

  model::ModelConfig model(int vocab_size) const {
    model::ModelConfig m;
    m.n_layer = static_cast<int>(integer("model.n_layer"));
    m.n_head = static_cast<int>(integer("model.n_head"));
    m.n_embd = static_cast<int>(integer("model.n_embd"));
    m.block_size = static_cast<int>(integer("model.block_size"));
    m.dropout = real("model.dropout");
    m.vocab_size = vocab_size;
    m.validate();
    return m;
  }

  train::TrainConfig training() const {
    train::TrainConfig t;
    t.learning_rate = real("train.lr");
    t.weight_decay = real("train.weight_decay");
    t.batch_size = static_cast<int>(integer("train.batch_size"));
    t.grad_accum_steps = static_cast<int>(integer("train.grad_accum"));
    t.max_steps = static_cast<int>(integer("train.max_steps"));
    t.seed = seed();
    t.validate();
    return t;
  }

  train::TaskWeights weights() const { return parse_weights(get("weights")); }

  decode::DecodeConfig decoding() const {
    decode::DecodeConfig d;
    d.method = decode::method_from_name(get("decode.method"));
    d.b = static_cast<int>(integer("decode.b"));
    d.temp = real("decode.temp");
    d.k = static_cast<int>(integer("decode.k"));
    d.p = real("decode.p");
    d.max_new = static_cast<int>(integer("decode.max_new"));
    d.seed = seed();
    d.validate();
    return d;
  }

  // "none" -> (1, 1); "a:b" -> type:code ratio normalized to sum 1.
  static train::TaskWeights parse_weights(const std::string& s) {
    if (s == "none") return train::TaskWeights::none();
    const auto c = s.find(':');
    if (c == std::string::npos) throw ConfigError("weights must be 'none' or 'type:code', got " + s);
    auto num = [&](std::string_view t) {
      double v = 0;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || p != t.data() + t.size()) throw ConfigError("bad weight ratio: " + s);
      return v;
    };
    return train::TaskWeights::ratio(num(std::string_view(s).substr(0, c)), num(std::string_view(s).substr(c + 1)));
  }

 private:
  static std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }
  std::size_t positive(const std::string& key, bool allow_zero) const {
    const auto v = integer(key);
    if (v < 0 || (!allow_zero && v == 0)) throw ConfigError(key + " must be positive");
    return static_cast<std::size_t>(v);
  }

  std::map<std::string, std::string> values_;
};

inline void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

inline std::uint64_t file_hash(const fs::path& path) { return fnv1a(read_file(path)); }

// ---------------------------------------------------------------------------
// preprocess

inline json run_preprocess(const fs::path& src_dir, const fs::path& out_dir, const RunConfig& cfg) {
  if (!fs::is_directory(src_dir)) throw IoError("source directory not found: " + src_dir.string());
  const auto vocab_size = cfg.integer("vocab_size");
  if (vocab_size < 1) throw ConfigError("vocab_size must be positive");
  auto prep = pipeline::prepare(corpus::collect_sources(src_dir), cfg.corpus(),
                                static_cast<std::size_t>(vocab_size));
  fs::create_directories(out_dir);
  pipeline::save(out_dir, prep);
  cfg.write(out_dir);
  json j;
  j["provenance"] = cfg.provenance();
  j["files"] = {{"train", prep.corpus.train.files.size()},
                {"valid", prep.corpus.valid.files.size()},
                {"test", prep.corpus.test.files.size()},
                {"excluded", prep.corpus.excluded.size()}};
  j["test_line_samples"] = prep.corpus.test_lines.size();
  j["vocab_size"] = prep.vocab.size();
  j["vocab_hash"] = hex(prep.vocab.hash());
  write_json(out_dir / "preprocess.json", j);
  return j;
}

// ---------------------------------------------------------------------------
// train

struct TrainOutcome {
  model::Transformer<float> model;  // the code-completion model
  train::History history;
  bpe::Vocab vocab;
};

inline model::CheckpointInfo checkpoint_info(const RunConfig& cfg, const bpe::Vocab& vocab, std::uint64_t step,
                                             const std::string& strategy, const std::string& role) {
  return {vocab.hash(), step, cfg.seed(),
          {{"strategy", strategy}, {"role", role}, {"config_hash", hex(cfg.hash())}, {"tool_version", kVersion}}};
}

// Trains without touching the disk beyond an optional IFT boundary file.
inline TrainOutcome train_strategy(const pipeline::Loaded& data, const std::string& strategy, const RunConfig& cfg,
                                   const fs::path& ift_boundary = {}) {
  const auto mc = cfg.model(static_cast<int>(data.vocab.size()));
  const auto tc = cfg.training();
  const auto code = train::windows(data.train, train::Role::Code, mc.block_size);
  const auto type = train::windows(data.train, train::Role::Type, mc.block_size);
  const train::Seeds seeds{tc.seed};
  TrainOutcome out{model::Transformer<float>(mc, tc.seed), {}, data.vocab};
  if (strategy == "hard") {
    train::Stream cs(code, seeds.code_data()), ts(type, seeds.type_data());
    out.history = train::train_hard(out.model, cs, ts, cfg.weights(), tc);
  } else if (strategy == "single") {
    train::Stream cs(code, seeds.code_data());
    out.history = train::train_single(out.model, cs, tc);
  } else if (strategy == "soft") {
    model::Transformer<float> type_model(mc, tc.seed + 1);
    train::Stream cs(code, seeds.code_data()), ts(type, seeds.type_data());
    out.history = train::train_soft(out.model, type_model, cs, ts, cfg.weights(), tc);
  } else if (strategy == "ift") {
    out.history = train::train_ift(out.model, type, code, tc, ift_boundary, data.vocab.hash());
  } else {
    throw ConfigError("unknown strategy '" + strategy + "' (expected hard, soft, ift or single)");
  }
  return out;
}

inline json run_train(const fs::path& corpus_dir, const std::string& strategy, const RunConfig& cfg,
                      const fs::path& out_dir) {
  if (strategy != "hard" && strategy != "soft" && strategy != "ift" && strategy != "single")
    throw ConfigError("unknown strategy '" + strategy + "' (expected hard, soft, ift or single)");
  const auto data = pipeline::load(corpus_dir);
  fs::create_directories(out_dir);
  cfg.write(out_dir);
  const auto mc = cfg.model(static_cast<int>(data.vocab.size()));
  const auto tc = cfg.training();
  const auto code = train::windows(data.train, train::Role::Code, mc.block_size);
  const auto type = train::windows(data.train, train::Role::Type, mc.block_size);
  const train::Seeds seeds{tc.seed};
  model::Transformer<float> m(mc, tc.seed);
  train::History h;
  if (strategy == "soft") {
    model::Transformer<float> type_model(mc, tc.seed + 1);
    train::Stream cs(code, seeds.code_data()), ts(type, seeds.type_data());
    h = train::train_soft(m, type_model, cs, ts, cfg.weights(), tc);
    model::save_checkpoint(out_dir / "model_type.ckpt", type_model,
                           checkpoint_info(cfg, data.vocab, h.size(), strategy, "type"));
  } else if (strategy == "ift") {
    h = train::train_ift(m, type, code, tc, out_dir / "phase1.ckpt", data.vocab.hash());
  } else if (strategy == "hard") {
    train::Stream cs(code, seeds.code_data()), ts(type, seeds.type_data());
    h = train::train_hard(m, cs, ts, cfg.weights(), tc);
  } else {
    train::Stream cs(code, seeds.code_data());
    h = train::train_single(m, cs, tc);
  }
  model::save_checkpoint(out_dir / "model.ckpt", m, checkpoint_info(cfg, data.vocab, h.size(), strategy, "code"));
  train::write_history(out_dir / "history.jsonl", h);
  json j;
  j["provenance"] = cfg.provenance();
  j["strategy"] = strategy;
  j["steps"] = h.size();
  j["parameters"] = m.num_parameters();
  j["final"] = h.empty() ? json(nullptr) : json(h.back().to_json());
  write_json(out_dir / "train.json", j);
  return j;
}

// ---------------------------------------------------------------------------
// complete / eval

inline model::Transformer<float> load_for_vocab(const fs::path& checkpoint, const bpe::Vocab& vocab) {
  model::CheckpointInfo info;
  auto m = model::load_checkpoint<float>(checkpoint, &info);
  if (info.vocab_hash != vocab.hash())
    throw VocabError("checkpoint " + checkpoint.string() + " was trained with a different vocabulary");
  if (static_cast<std::size_t>(m.config().vocab_size) != vocab.size())
    throw VocabError("checkpoint vocabulary size does not match vocab.json");
  return m;
}

// Source prefix -> model words: <s>, masked tokens, markers.
inline std::vector<std::string> context_words(std::string_view source, const corpus::LiteralTables& tables) {
  const auto toks = lexer::tokenize(source, lexer::LexMode::Prefix);
  std::vector<std::string> words{std::string(corpus::kBos)};
  for (const auto& t : toks) {
    if (t.ttype == lexer::TokenType::ERRORTOKEN) continue;
    words.push_back(corpus::mask_token(t, tables));
  }
  return words;
}

inline decode::Completion run_complete(const fs::path& checkpoint, const fs::path& corpus_dir,
                                       std::string_view context, const RunConfig& cfg) {
  const auto vocab = bpe::Vocab::load(corpus_dir / "vocab.json");
  const auto tables = corpus::read_literals(corpus_dir);
  const auto m = load_for_vocab(checkpoint, vocab);
  const auto words = context_words(context, tables);
  const auto ids = eval::encode_words(vocab, words);
  const auto dc = cfg.decoding();
  decode::TransformerLM lm(m, static_cast<std::size_t>(std::max(16, 2 * dc.b + 2)));
  return decode::complete_line(lm, ids, dc, vocab);
}

inline std::vector<corpus::LineSample> limit_lines(std::vector<corpus::LineSample> lines, const RunConfig& cfg) {
  const auto n = cfg.integer("eval.max_lines");
  if (n < 0) throw ConfigError("eval.max_lines must be >= 0");
  if (n > 0 && lines.size() > static_cast<std::size_t>(n)) lines.resize(static_cast<std::size_t>(n));
  return lines;
}

inline metrics::EvalReport evaluate_model(const model::Transformer<float>& m, const bpe::Vocab& vocab,
                                          std::span<const align::AlignedSample> test,
                                          std::span<const corpus::LineSample> lines,
                                          const decode::DecodeConfig& dc) {
  metrics::TokenTally tt;
  eval::score_tokens(m, vocab, test, tt);
  metrics::LineTally lt;
  decode::TransformerLM lm(m, static_cast<std::size_t>(std::max(16, 2 * dc.b + 2)));
  eval::score_lines(lm, vocab, lines, dc, lt);
  return metrics::EvalReport::from(tt, lt);
}

inline json run_eval(const fs::path& checkpoint, const fs::path& corpus_dir, const RunConfig& cfg,
                     const fs::path& out_dir) {
  const auto data = pipeline::load(corpus_dir);
  const auto m = load_for_vocab(checkpoint, data.vocab);
  const auto dc = cfg.decoding();
  const auto lines = limit_lines(data.test_lines, cfg);
  const auto rep = evaluate_model(m, data.vocab, data.test, lines, dc);
  json j = rep.to_json();
  j["provenance"] = cfg.provenance();
  j["checkpoint_hash"] = hex(file_hash(checkpoint));
  j["decode"] = dc.to_json();
  fs::create_directories(out_dir);
  cfg.write(out_dir);
  write_json(out_dir / "report.json", j);
  return j;
}

// ---------------------------------------------------------------------------
// probe

// A directory means every .py file below it; anything else is a glob(3)
// pattern.
inline std::vector<fs::path> expand_inputs(const std::string& pattern) {
  std::vector<fs::path> out;
  if (fs::is_directory(pattern)) {
    for (const auto& e : fs::recursive_directory_iterator(pattern))
      if (e.is_regular_file() && e.path().extension() == ".py") out.push_back(e.path());
  } else {
    glob_t g{};
    const int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
    if (rc == 0)
      for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
    globfree(&g);
    if (rc != 0 && rc != GLOB_NOMATCH) throw IoError("glob failed for " + pattern);
  }
  std::sort(out.begin(), out.end());
  if (out.empty()) throw IoError("no input files match " + pattern);
  return out;
}

inline json run_probe(const std::string& pattern, probe::Checker checker, const RunConfig& cfg,
                      const fs::path& out_dir) {
  std::vector<probe::ProbeReport> reps;
  for (const auto& p : expand_inputs(pattern)) reps.push_back(probe::scan_file(read_file(p), checker, p.string()));
  const auto agg = probe::aggregate(reps);
  json j;
  j["provenance"] = cfg.provenance();
  j["checker"] = checker == probe::Checker::Token ? "token" : "grammar";
  j["aggregate"] = agg.to_json();
  j["files"] = json::array();
  for (const auto& r : reps) j["files"].push_back(r.to_json());
  fs::create_directories(out_dir);
  cfg.write(out_dir);
  write_json(out_dir / "probe_report.json", j);
  std::ofstream(out_dir / "probe_summary.txt") << agg.table();
  return j;
}

// ---------------------------------------------------------------------------
// sweeps

inline std::vector<std::string> default_weight_grid() {
  return {"none", "1:9", "2:8", "3:7", "4:6", "5:5", "6:4", "7:3", "8:2", "9:1"};
}

inline json metrics_row(const metrics::EvalReport& r) {
  return {{"token_accuracy", r.token_accuracy},
          {"token_accuracy_no_literals", r.token_accuracy_no_literals},
          {"mrr", r.mrr},
          {"em", r.em},
          {"es", r.es}};
}

struct WeightSweep {
  std::vector<json> rows;
  json baseline;
};

// Hard sharing at each weight setting plus a code-only baseline, scored on
// the held-out test split.
inline WeightSweep sweep_weights(const pipeline::Loaded& data, const RunConfig& cfg,
                                 const std::vector<std::string>& grid = default_weight_grid()) {
  const auto dc = cfg.decoding();
  const auto lines = limit_lines(data.test_lines, cfg);
  WeightSweep out;
  for (const auto& label : grid) {
    RunConfig c = cfg;
    c.set("weights", label);
    const auto w = c.weights();
    auto t = train_strategy(data, "hard", c);
    const auto rep = evaluate_model(t.model, data.vocab, data.test, lines, dc);
    json row{{"weights", label}, {"alpha_type", w.alpha_type}, {"alpha_code", w.alpha_code}};
    row.update(metrics_row(rep));
    row["final_l_code"] = *t.history.back().l_code;
    row["final_l_type"] = *t.history.back().l_type;
    out.rows.push_back(std::move(row));
  }
  auto base = train_strategy(data, "single", cfg);
  const auto rep = evaluate_model(base.model, data.vocab, data.test, lines, dc);
  out.baseline = {{"strategy", "code-only"}};
  out.baseline.update(metrics_row(rep));
  out.baseline["final_l_code"] = *base.history.back().l_code;
  return out;
}

struct DecodePoint {
  decode::Method method;
  std::string param;
  double value;
};

inline std::vector<DecodePoint> default_decode_grid() {
  using decode::Method;
  std::vector<DecodePoint> g{{Method::Greedy, "", 0}, {Method::Sample, "", 0}};
  for (double b : {3, 5, 10, 16, 50}) g.push_back({Method::Beam, "b", b});
  for (double t : {0.05, 0.1, 0.3, 0.5, 0.7, 0.9}) g.push_back({Method::Temperature, "temp", t});
  for (double k : {3, 5, 10, 50, 100}) g.push_back({Method::TopK, "k", k});
  for (double p : {0.05, 0.1, 0.3, 0.5, 0.7, 0.9}) g.push_back({Method::TopP, "p", p});
  return g;
}

// Line-level EM/ES per grid point; stochastic methods are repeated over
// `sweep.seeds` seeds and reported as mean and sample standard deviation.
inline std::vector<json> sweep_decode(const model::Transformer<float>& m, const bpe::Vocab& vocab,
                                      std::span<const corpus::LineSample> lines, const RunConfig& cfg,
                                      const std::vector<DecodePoint>& grid = default_decode_grid()) {
  const auto base = cfg.decoding();
  const auto seeds = cfg.integer("sweep.seeds");
  if (seeds < 1) throw ConfigError("sweep.seeds must be at least 1");
  std::vector<json> rows;
  for (const auto& pt : grid) {
    auto dc = base;
    dc.method = pt.method;
    if (pt.param == "b") dc.b = static_cast<int>(pt.value);
    if (pt.param == "temp") dc.temp = pt.value;
    if (pt.param == "k") dc.k = static_cast<int>(pt.value);
    if (pt.param == "p") dc.p = pt.value;
    dc.validate();
    const bool stochastic = pt.method != decode::Method::Greedy && pt.method != decode::Method::Beam;
    const int runs = stochastic ? static_cast<int>(seeds) : 1;
    std::vector<double> em, es;
    for (int s = 0; s < runs; ++s) {
      dc.seed = base.seed + static_cast<std::uint64_t>(s) * 1000003u;
      metrics::LineTally lt;
      decode::TransformerLM lm(m, static_cast<std::size_t>(std::max(16, 2 * dc.b + 2)));
      eval::score_lines(lm, vocab, lines, dc, lt);
      em.push_back(lt.em());
      es.push_back(lt.es());
    }
    const auto se = metrics::summarize(em), ss = metrics::summarize(es);
    json row{{"method", decode::name(pt.method)}};
    row["param"] = pt.param.empty() ? json(nullptr) : json(pt.param);
    row["value"] = pt.param.empty() ? json(nullptr) : json(pt.value);
    row["runs"] = runs;
    row["em_mean"] = se.mean;
    row["em_std"] = se.stddev;
    row["es_mean"] = ss.mean;
    row["es_std"] = ss.stddev;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void write_rows(const fs::path& path, const std::vector<json>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& r : rows) out << r.dump() << '\n';
}

inline json run_sweep(const std::string& axis, const fs::path& corpus_dir, const RunConfig& cfg,
                      const fs::path& out_dir, const fs::path& checkpoint = {}) {
  const auto data = pipeline::load(corpus_dir);
  fs::create_directories(out_dir);
  cfg.write(out_dir);
  json j;
  j["provenance"] = cfg.provenance();
  j["axis"] = axis;
  if (axis == "weights") {
    auto s = sweep_weights(data, cfg);
    write_rows(out_dir / "sweep_weights.jsonl", s.rows);
    j["rows"] = s.rows;
    j["baseline"] = s.baseline;
  } else if (axis == "decode") {
    if (checkpoint.empty()) throw ConfigError("decode sweep needs --checkpoint");
    const auto m = load_for_vocab(checkpoint, data.vocab);
    const auto lines = limit_lines(data.test_lines, cfg);
    auto rows = sweep_decode(m, data.vocab, lines, cfg);
    write_rows(out_dir / "sweep_decode.jsonl", rows);
    j["checkpoint_hash"] = hex(file_hash(checkpoint));
    j["rows"] = rows;
  } else {
    throw ConfigError("unknown sweep axis '" + axis + "' (expected weights or decode)");
  }
  write_json(out_dir / "sweep.json", j);
  return j;
}

}  // namespace tyco::cli
