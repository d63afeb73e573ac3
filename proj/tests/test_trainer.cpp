#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <numeric>

#include "support.hpp"
#include "tyco/trainer.hpp"

using namespace tyco;
using namespace tyco::train;
using Catch::Approx;

namespace {

model::ModelConfig tiny(int vocab, double dropout = 0.0) {
  model::ModelConfig c;
  c.n_layer = 2;
  c.n_head = 2;
  c.n_embd = 32;
  c.block_size = 32;
  c.vocab_size = vocab;
  c.dropout = dropout;
  return c;
}

struct Streams {
  std::vector<std::vector<Id>> code, type;
  int vocab = 0;
};

const Streams& pipeline_streams() {
  static const Streams s = [] {
    auto p = testing::build_mini_pipeline(512);
    std::vector<align::AlignedSample> al;
    for (const auto& smp : p.corpus.train.samples) al.push_back(align::align(smp, p.vocab));
    Streams out;
    out.code = windows(al, Role::Code, 32);
    out.type = windows(al, Role::Type, 32);
    out.vocab = static_cast<int>(p.vocab.size());
    return out;
  }();
  return s;
}

double mean_of(const History& h, std::size_t from, std::size_t to, bool code) {
  double s = 0;
  for (std::size_t i = from; i < to; ++i) s += code ? *h[i].l_code : *h[i].l_type;
  return s / static_cast<double>(to - from);
}

bool params_equal(const Model& a, const Model& b) {
  for (std::size_t i = 0; i < a.params().size(); ++i)
    if (a.p(i).value.data != b.p(i).value.data) return false;
  return true;
}

}  // namespace

TEST_CASE("AdamW matches a hand-rolled reference") {
  Parameter<float> p{"w", ad::Tensor<float>({3}, {0.5f, -1.0f, 2.0f})};
  p.zero_grad();
  std::vector<Parameter<float>*> ps{&p};
  AdamState st;
  const double lr = 0.01, wd = 0.1;
  const std::vector<std::vector<double>> grads{{1.0, -2.0, 0.0}, {0.5, 0.5, 1e-3}, {-3.0, 1.0, 4.0}};

  std::vector<double> x{0.5, -1.0, 2.0}, m(3, 0), v(3, 0);
  for (std::size_t t = 1; t <= grads.size(); ++t) {
    for (int k = 0; k < 3; ++k) p.grad[k] = static_cast<float>(grads[t - 1][k]);
    adam_step<float>(ps, st, lr, wd);
    for (int k = 0; k < 3; ++k) {
      const double g = grads[t - 1][k];
      m[k] = 0.9 * m[k] + 0.1 * g;
      v[k] = 0.999 * v[k] + 0.001 * g * g;
      const double mh = m[k] / (1 - std::pow(0.9, t));
      const double vh = v[k] / (1 - std::pow(0.999, t));
      x[k] = x[k] - lr * wd * x[k] - lr * mh / (std::sqrt(vh) + 1e-8);
    }
    for (int k = 0; k < 3; ++k) CHECK(p.value.data[k] == Approx(x[k]).epsilon(1e-5));
  }
  CHECK(st.t == 3);
}

TEST_CASE("with zero gradient AdamW only decays geometrically") {
  Parameter<float> p{"w", ad::Tensor<float>({2}, {1.0f, -4.0f})};
  p.zero_grad();
  std::vector<Parameter<float>*> ps{&p};
  AdamState st;
  for (int t = 0; t < 50; ++t) adam_step<float>(ps, st, 1e-2, 0.5);
  CHECK(p.value.data[0] == Approx(std::pow(1 - 5e-3, 50)).epsilon(1e-5));
  CHECK(p.value.data[1] == Approx(-4 * std::pow(1 - 5e-3, 50)).epsilon(1e-5));
}

TEST_CASE("AdamW step sizes") {
  Parameter<float> p{"w", ad::Tensor<float>({3}, {0.25f, -1.5f, 3.0f})};
  p.zero_grad();
  std::vector<Parameter<float>*> ps{&p};
  AdamState st;
  adam_step<float>(ps, st, 1e-3, 0.0);
  CHECK(p.value.data == std::vector<float>{0.25f, -1.5f, 3.0f});

  // Bias correction makes every step of a constant gradient about lr long.
  st = AdamState{};
  const std::vector<float> g{2.0f, -0.01f, 50.0f};
  auto before = p.value.data;
  for (int t = 0; t < 10; ++t) {
    for (int k = 0; k < 3; ++k) p.grad[k] = g[k];
    adam_step<float>(ps, st, 1e-3, 0.0);
    for (int k = 0; k < 3; ++k) {
      const double step = before[k] - p.value.data[k];
      CHECK(std::abs(step) == Approx(1e-3).epsilon(1e-3));
      CHECK((step > 0) == (g[k] > 0));
    }
    before = p.value.data;
  }
}

TEST_CASE("task weight ratios") {
  auto w = TaskWeights::ratio(2, 1);
  CHECK(w.alpha_type == Approx(2.0 / 3));
  CHECK(w.alpha_code == Approx(1.0 / 3));
  auto n = TaskWeights::none();
  CHECK(n.alpha_type == 1.0);
  CHECK(n.alpha_code == 1.0);
  CHECK(TaskWeights::ratio(0, 1).alpha_type == 0.0);
  CHECK_THROWS_AS(TaskWeights::ratio(0, 0), ConfigError);
  CHECK_THROWS_AS((TaskWeights{-1, 1}.validate()), ConfigError);
  CHECK_THROWS_AS((TaskWeights{0, 0}.validate()), ConfigError);
}

TEST_CASE("sharing loss value, gradient and shape checks") {
  SECTION("value") {
    Parameter<double> a{"a", ad::Tensor<double>({2}, {1, 2})};
    Parameter<double> b{"b", ad::Tensor<double>({2}, {1, 0})};
    a.zero_grad();
    b.zero_grad();
    std::vector<Parameter<double>*> pa{&a}, pb{&b};
    ad::Graph<double> g;
    auto l = sharing_loss<double>(g, pa, pb);
    CHECK(g.value(l).item() == Approx(2.0).epsilon(1e-12));
    g.backward(l);
    CHECK(a.grad[1] == Approx(1.0));
    CHECK(b.grad[1] == Approx(-1.0));
    CHECK(a.grad[0] == 0.0);
  }
  SECTION("finite differences") {
    Rng rng(5);
    Parameter<double> a{"a", ad::Tensor<double>({3, 2}, std::vector<double>(6))};
    Parameter<double> b{"b", ad::Tensor<double>({3, 2}, std::vector<double>(6))};
    Parameter<double> c{"c", ad::Tensor<double>({4}, std::vector<double>(4))};
    Parameter<double> d{"d", ad::Tensor<double>({4}, std::vector<double>(4))};
    for (auto* p : {&a, &b, &c, &d}) {
      for (auto& x : p->value.data) x = rng.normal();
      p->zero_grad();
    }
    std::vector<Parameter<double>*> all{&a, &b, &c, &d};
    auto res = ad::grad_check(
        [&](ad::Graph<double>& g) {
          std::vector<Parameter<double>*> l{&a, &c}, r{&b, &d};
          return sharing_loss<double>(g, l, r);
        },
        all);
    CHECK(res.max_rel_error < 1e-6);
  }
  SECTION("mismatch") {
    Parameter<double> a{"a", ad::Tensor<double>({2}, {1, 2})};
    Parameter<double> b{"b", ad::Tensor<double>({3}, {1, 0, 0})};
    std::vector<Parameter<double>*> pa{&a}, pb{&b}, none;
    ad::Graph<double> g;
    CHECK_THROWS_AS(sharing_loss<double>(g, pa, pb), ContractError);
    CHECK_THROWS_AS(sharing_loss<double>(g, pa, none), ContractError);
  }
}

TEST_CASE("streams are deterministic and cover each epoch") {
  std::vector<std::vector<Id>> seqs;
  for (Id i = 0; i < 10; ++i) seqs.push_back({i, i + 1});
  seqs.push_back({7});  // too short, dropped
  Stream a(seqs, 3), b(seqs, 3);
  CHECK(a.size() == 10);
  auto ea = a.next(10);
  CHECK(ea == b.next(10));
  std::vector<Id> firsts;
  for (auto& s : ea) firsts.push_back(s[0]);
  std::sort(firsts.begin(), firsts.end());
  std::vector<Id> want(10);
  std::iota(want.begin(), want.end(), 0u);
  CHECK(firsts == want);
  CHECK_THROWS_AS(Stream({}, 0).next(1), ConfigError);
}

TEST_CASE("hard sharing with zero type weight equals single-task training") {
  const auto& s = pipeline_streams();
  TrainConfig cfg;
  cfg.max_steps = 12;
  cfg.batch_size = 4;
  cfg.seed = 9;
  Model a(tiny(s.vocab, 0.1), 1), b(tiny(s.vocab, 0.1), 1);
  Stream c1(s.code, Seeds{cfg.seed}.code_data());
  auto h1 = train_single(a, c1, cfg);
  Stream c2(s.code, Seeds{cfg.seed}.code_data()), t2(s.type, Seeds{cfg.seed}.type_data());
  auto h2 = train_hard(b, c2, t2, TaskWeights{0.0, 1.0}, cfg);
  REQUIRE(h1.size() == h2.size());
  for (std::size_t i = 0; i < h1.size(); ++i) CHECK(*h1[i].l_code == *h2[i].l_code);
  CHECK(params_equal(a, b));
}

TEST_CASE("hard sharing lowers both losses") {
  const auto& s = pipeline_streams();
  TrainConfig cfg;
  cfg.max_steps = 200;
  cfg.batch_size = 8;
  cfg.seed = 2;
  Model m(tiny(s.vocab), 0);
  Stream code(s.code, Seeds{cfg.seed}.code_data()), type(s.type, Seeds{cfg.seed}.type_data());
  auto h = train_hard(m, code, type, TaskWeights::none(), cfg);
  REQUIRE(h.size() == 200);
  for (const auto& r : h) {
    REQUIRE(std::isfinite(*r.l_code));
    REQUIRE(std::isfinite(*r.l_type));
  }
  CHECK(mean_of(h, 180, 200, true) < mean_of(h, 0, 20, true));
  CHECK(mean_of(h, 180, 200, false) < mean_of(h, 0, 20, false));
  CHECK(h.front().l_code.value() == Approx(std::log(s.vocab)).epsilon(0.2));
}

TEST_CASE("gradient accumulation matches one large batch") {
  // Equal-length windows so the per-batch token means agree.
  std::vector<std::vector<Id>> seqs;
  for (const auto& w : pipeline_streams().code)
    if (w.size() == 32) seqs.push_back(w);
  REQUIRE(seqs.size() >= 16);
  const int vocab = pipeline_streams().vocab;
  TrainConfig big;
  big.max_steps = 3;
  big.batch_size = 8;
  TrainConfig small = big;
  small.batch_size = 4;
  small.grad_accum_steps = 2;
  Model a(tiny(vocab), 4), b(tiny(vocab), 4);
  Stream sa(seqs, 1), sb(seqs, 1);
  auto ha = train_single(a, sa, big);
  auto hb = train_single(b, sb, small);
  for (std::size_t i = 0; i < ha.size(); ++i) CHECK(*ha[i].l_code == Approx(*hb[i].l_code).epsilon(1e-4));
  for (std::size_t i = 0; i < a.params().size(); ++i)
    for (std::size_t k = 0; k < a.p(i).value.size(); ++k)
      REQUIRE(a.p(i).value.data[k] == Approx(b.p(i).value.data[k]).margin(5e-4));
}

TEST_CASE("soft sharing pulls the two models together") {
  const auto& s = pipeline_streams();
  TrainConfig cfg;
  cfg.max_steps = 500;
  cfg.batch_size = 4;
  cfg.seed = 3;
  Model mc(tiny(s.vocab), cfg.seed), mt(tiny(s.vocab), cfg.seed + 1);
  const double d0 = parameter_distance(mc, mt);
  Stream code(s.code, Seeds{cfg.seed}.code_data()), type(s.type, Seeds{cfg.seed}.type_data());
  auto h = train_soft(mc, mt, code, type, TaskWeights::none(), cfg);
  REQUIRE(h.size() == 500);
  CHECK(h.front().l_sharing.value() == Approx(d0).epsilon(1e-4));
  for (const auto& r : h) REQUIRE(std::isfinite(*r.l_sharing));
  const double d1 = parameter_distance(mc, mt);
  CHECK(d1 < d0);
  CHECK(mean_of(h, 480, 500, true) < mean_of(h, 0, 20, true));

  Model bad(tiny(s.vocab + 1), 0);
  CHECK_THROWS_AS(train_soft(mc, bad, code, type, TaskWeights::none(), cfg), ConfigError);
}

TEST_CASE("soft sharing ablation: without the distance term the models drift apart") {
  const auto& s = pipeline_streams();
  TrainConfig cfg;
  cfg.max_steps = 150;
  cfg.batch_size = 4;
  cfg.seed = 9;
  auto run = [&](bool sharing) {
    Model mc(tiny(s.vocab), cfg.seed), mt(tiny(s.vocab), cfg.seed + 1);
    Stream code(s.code, Seeds{cfg.seed}.code_data()), type(s.type, Seeds{cfg.seed}.type_data());
    auto h = train_soft(mc, mt, code, type, TaskWeights::none(), cfg, {}, SoftOptions{sharing, 1.0});
    if (!sharing)
      for (const auto& r : h) CHECK_FALSE(r.l_sharing.has_value());
    return parameter_distance(mc, mt);
  };
  const double with = run(true), without = run(false);
  CHECK(with < without);
}

TEST_CASE("soft sharing stays finite over 1000 steps") {
  const auto& s = pipeline_streams();
  auto c = tiny(s.vocab, 0.1);
  c.n_layer = 1;
  c.n_embd = 16;
  TrainConfig cfg;
  cfg.max_steps = 1000;
  cfg.batch_size = 2;
  cfg.seed = 10;
  Model mc(c, cfg.seed), mt(c, cfg.seed + 1);
  Stream code(s.code, Seeds{cfg.seed}.code_data()), type(s.type, Seeds{cfg.seed}.type_data());
  auto h = train_soft(mc, mt, code, type, TaskWeights::ratio(3, 7), cfg);
  REQUIRE(h.size() == 1000);
  for (const auto& r : h) {
    REQUIRE(std::isfinite(*r.l_code));
    REQUIRE(std::isfinite(*r.l_type));
    REQUIRE(std::isfinite(*r.l_sharing));
  }
  for (const auto* m : {&mc, &mt})
    for (const auto& p : m->params())
      for (float v : p.value.data) REQUIRE(std::isfinite(v));
}

TEST_CASE("intermediate fine-tuning resumes from the phase checkpoint") {
  const auto& s = pipeline_streams();
  TrainConfig cfg;
  cfg.max_steps = 20;
  cfg.batch_size = 4;
  cfg.seed = 6;
  const auto ckpt = std::filesystem::temp_directory_path() / "tyco_ift_phase1.bin";
  Model m(tiny(s.vocab), 0);
  auto h = train_ift(m, s.type, s.code, cfg, ckpt, 77);
  REQUIRE(h.size() == 20);
  CHECK(h[9].phase == "type");
  CHECK(h[9].l_type.has_value());
  CHECK(h[10].phase == "code");
  CHECK(h[10].step == 10);
  CHECK(h[10].l_code.has_value());

  model::CheckpointInfo info;
  auto resumed = model::load_checkpoint<float>(ckpt, &info);
  CHECK(info.vocab_hash == 77);
  CHECK(info.step == 10);
  auto h2 = train_ift_phase2(resumed, s.code, cfg, 10);
  REQUIRE(h2.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(h2[i] == h[10 + i]);
  CHECK(params_equal(resumed, m));
  std::filesystem::remove(ckpt);
}

TEST_CASE("hooks can stop training and history serializes") {
  const auto& s = pipeline_streams();
  TrainConfig cfg;
  cfg.max_steps = 50;
  cfg.batch_size = 2;
  Model m(tiny(s.vocab), 0);
  Stream code(s.code, 1);
  auto h = train_single(m, code, cfg, Role::Code, [](const StepRecord& r) { return r.step < 4; });
  CHECK(h.size() == 5);
  const auto path = std::filesystem::temp_directory_path() / "tyco_history.jsonl";
  write_history(path, h);
  std::ifstream in(path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["step"] == n);
    CHECK(j["l_type"].is_null());
    CHECK(j["l_code"].is_number());
    ++n;
  }
  CHECK(n == 5);
  std::filesystem::remove(path);

  TrainConfig badcfg;
  badcfg.batch_size = 0;
  CHECK_THROWS_AS(train_single(m, code, badcfg), ConfigError);
}
