#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "tyco/autodiff.hpp"

using namespace tyco;
using namespace tyco::ad;
using G = Graph<double>;

namespace {

Parameter<double> random_param(std::string name, std::vector<int> shape, Rng& rng, double sd = 1.0) {
  Tensor<double> t(std::move(shape));
  for (auto& x : t.data) x = rng.normal(0, sd);
  return Parameter<double>(std::move(name), std::move(t));
}

Tensor<double> random_tensor(std::vector<int> shape, Rng& rng) {
  Tensor<double> t(std::move(shape));
  for (auto& x : t.data) x = rng.normal();
  return t;
}

// Projects a tensor onto a fixed random direction so that no coordinate of
// the gradient vanishes by symmetry.
Var probe(G& g, Var x, std::uint64_t seed) {
  Rng rng(seed);
  return g.sum(g.mul(x, g.constant(random_tensor(g.value(x).shape, rng))));
}

constexpr double kTol = 1e-4;
constexpr double kStep = 1e-3;

}  // namespace

TEST_CASE("softmax of equal logits is uniform") {
  Graph<double> g(false);
  auto y = g.softmax(g.constant(Tensor<double>({2}, {0.0, 0.0})));
  CHECK(g.value(y)[0] == Catch::Approx(0.5));
  CHECK(g.value(y)[1] == Catch::Approx(0.5));
}

TEST_CASE("cross entropy at uniform logits") {
  Parameter<double> w("w", Tensor<double>({1, 2}, {0.0, 0.0}));
  G g;
  std::vector<int> t{0};
  auto l = g.cross_entropy(g.param(w), t);
  CHECK(g.value(l).item() == Catch::Approx(std::log(2.0)).epsilon(1e-12));
  g.backward(l);
  CHECK(w.grad[0] == Catch::Approx(-0.5));
  CHECK(w.grad[1] == Catch::Approx(0.5));
}

TEST_CASE("layer norm of a constant row is zero") {
  G g(false);
  auto x = g.constant(Tensor<double>({1, 4}, {3.0, 3.0, 3.0, 3.0}));
  auto y = g.layer_norm(x, g.constant(Tensor<double>({4}, 1.0)), g.constant(Tensor<double>({4}, 0.0)));
  for (double v : g.value(y).data) {
    CHECK(std::isfinite(v));
    CHECK(v == 0.0);
  }
}

TEST_CASE("sum gives an all-ones gradient") {
  Rng rng(1);
  auto w = random_param("w", {3, 5}, rng);
  G g;
  g.backward(g.sum(g.param(w)));
  for (double v : w.grad) CHECK(v == 1.0);
}

TEST_CASE("fan-out accumulates per-path gradients") {
  Rng rng(2);
  auto w = random_param("w", {2, 3}, rng);
  // f(w) = sum(w*w) + sum(3w): gradient 2w + 3.
  G g;
  auto a = g.param(w);
  auto l = g.add(g.sum(g.mul(a, a)), g.sum(g.scale(a, 3.0)));
  g.backward(l);
  for (std::size_t i = 0; i < w.value.size(); ++i)
    CHECK(w.grad[i] == Catch::Approx(2 * w.value[i] + 3).epsilon(1e-12));
  Parameter<double>* ps[] = {&w};
  auto r = grad_check([&](G& gg) {
    auto x = gg.param(w);
    return gg.add(gg.sum(gg.mul(x, x)), gg.sum(gg.scale(x, 3.0)));
  }, ps, kStep);
  CHECK(r.max_rel_error < kTol);
}

TEST_CASE("non-scalar loss is a contract error") {
  Rng rng(3);
  auto w = random_param("w", {2, 2}, rng);
  G g;
  auto a = g.param(w);
  CHECK_THROWS_AS(g.backward(a), ContractError);
}

TEST_CASE("shape mismatches name both shapes") {
  Rng rng(4);
  auto a = random_param("a", {2, 3}, rng);
  auto b = random_param("b", {2, 3}, rng);
  G g;
  try {
    g.matmul(g.param(a), g.param(b));
    FAIL("expected ShapeError");
  } catch (const ShapeError& e) {
    CHECK(std::string(e.what()).find("[2,3] x [2,3]") != std::string::npos);
  }
  CHECK_THROWS_AS(g.add(g.param(a), g.constant(Tensor<double>({2}))), ShapeError);
}

TEST_CASE("grad_check is exact on linear functions") {
  Rng rng(5);
  auto w = random_param("w", {4, 4}, rng);
  Parameter<double>* ps[] = {&w};
  auto r = grad_check([&](G& g) { return probe(g, g.scale(g.param(w), 2.5), 9); }, ps, kStep);
  CHECK(r.max_rel_error < 1e-9);
  CHECK(r.coords == 16);
}

TEST_CASE("every op passes the finite-difference check") {
  const int trial = GENERATE(range(0, 6));
  {
    Rng shapes(42 + static_cast<std::uint64_t>(trial));
    const int m = 1 + static_cast<int>(shapes.below(5));
    const int k = 1 + static_cast<int>(shapes.below(6));
    const int n = 1 + static_cast<int>(shapes.below(5));
    INFO("trial " << trial << " m=" << m << " k=" << k << " n=" << n);
    Rng rng(100 + static_cast<std::uint64_t>(trial));
    auto a = random_param("a", {m, k}, rng);
    auto b = random_param("b", {k, n}, rng);
    auto c = random_param("c", {m, k}, rng);
    auto v = random_param("v", {k}, rng);
    auto gamma = random_param("gamma", {k}, rng);
    auto beta = random_param("beta", {k}, rng);
    auto table = random_param("table", {7, k}, rng);

    auto run = [&](std::vector<Parameter<double>*> ps, auto&& f) {
      auto r = grad_check(f, std::span<Parameter<double>* const>(ps), kStep, 200, 7);
      INFO(r.worst);
      CHECK(r.max_rel_error < kTol);
    };

    SECTION("matmul") { run({&a, &b}, [&](G& g) { return probe(g, g.matmul(g.param(a), g.param(b)), 1); }); }
    SECTION("add with broadcast") {
      run({&a, &v}, [&](G& g) { return probe(g, g.add(g.param(a), g.param(v)), 2); });
      run({&a, &c}, [&](G& g) { return probe(g, g.add(g.param(a), g.param(c)), 3); });
    }
    SECTION("mul and sub") {
      run({&a, &c}, [&](G& g) { return probe(g, g.mul(g.param(a), g.param(c)), 4); });
      run({&a, &c}, [&](G& g) { return probe(g, g.sub(g.param(a), g.param(c)), 5); });
    }
    SECTION("gelu") { run({&a}, [&](G& g) { return probe(g, g.gelu(g.param(a)), 6); }); }
    SECTION("softmax") { run({&a}, [&](G& g) { return probe(g, g.softmax(g.param(a)), 7); }); }
    SECTION("layer_norm") {
      run({&a, &gamma, &beta},
          [&](G& g) { return probe(g, g.layer_norm(g.param(a), g.param(gamma), g.param(beta)), 8); });
    }
    SECTION("embedding") {
      std::vector<std::uint32_t> ids;
      for (int i = 0; i < m + 3; ++i) ids.push_back(static_cast<std::uint32_t>(rng.below(7)));
      run({&table}, [&](G& g) { return probe(g, g.embedding(g.param(table), ids), 9); });
    }
    SECTION("cross_entropy") {
      std::vector<int> t;
      for (int i = 0; i < m; ++i) t.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(k))));
      if (m > 1) t[0] = -1;  // ignored row
      run({&a}, [&](G& g) { return g.cross_entropy(g.param(a), t); });
    }
    SECTION("scale, sum, transpose") {
      run({&a}, [&](G& g) { return probe(g, g.transpose(g.scale(g.param(a), -1.7)), 10); });
      run({&a}, [&](G& g) { return g.sum(g.gelu(g.param(a))); });
    }
    SECTION("concat_rows and slice_rows") {
      run({&a, &c}, [&](G& g) {
        Var parts[] = {g.param(a), g.param(c), g.param(a)};
        auto cat = g.concat_rows(parts);
        return probe(g, g.slice_rows(cat, 1, 2 * m - 1), 11);
      });
    }
    SECTION("masked_fill into softmax") {
      std::vector<std::uint8_t> mask(static_cast<std::size_t>(k), 0);
      for (int j = 1; j < k; j += 2) mask[static_cast<std::size_t>(j)] = 1;
      run({&a}, [&](G& g) { return probe(g, g.softmax(g.masked_fill(g.param(a), mask, -1e9)), 12); });
    }
    SECTION("dropout with a fixed mask stream") {
      run({&a}, [&](G& g) {
        Rng drop(77);
        return probe(g, g.dropout(g.param(a), 0.3, drop), 13);
      });
    }
  }
}

TEST_CASE("cross entropy of a linear map matches finite differences") {
  Rng rng(6);
  auto w = random_param("W", {6, 5}, rng);
  auto x = random_tensor({4, 6}, rng);
  std::vector<int> t{0, 3, 4, 1};
  Parameter<double>* ps[] = {&w};
  auto r = grad_check([&](G& g) { return g.cross_entropy(g.matmul(g.constant(x), g.param(w)), t); }, ps,
                      kStep);
  INFO(r.worst);
  CHECK(r.max_rel_error < kTol);
}

TEST_CASE("two-point stencil agrees to its own truncation order") {
  Rng rng(12);
  auto a = random_param("a", {3, 4}, rng, 2.0);
  Parameter<double>* ps[] = {&a};
  auto f = [&](G& g) { return probe(g, g.gelu(g.param(a)), 3); };
  auto two = grad_check(f, ps, kStep, 200, 0, Stencil::TwoPoint);
  auto four = grad_check(f, ps, kStep, 200, 0, Stencil::FourPoint);
  CHECK(two.max_rel_error < 1e-2);
  CHECK(four.max_rel_error < two.max_rel_error);
}

TEST_CASE("forward values are deterministic") {
  auto run = [] {
    Rng rng(8);
    auto w = random_param("w", {8, 8}, rng);
    Graph<float> g(false);
    Tensor<float> wf({8, 8});
    for (std::size_t i = 0; i < 64; ++i) wf[i] = static_cast<float>(w.value[i]);
    auto y = g.softmax(g.gelu(g.matmul(g.constant(wf), g.constant(wf))));
    return g.value(y).data;
  };
  CHECK(run() == run());
}
