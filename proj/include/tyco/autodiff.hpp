#pragma once

// Tape-based reverse-mode differentiation over dense row-major tensors.
//
// A Graph records nodes in creation order; backward() walks them in reverse
// and each node pushes its vector-Jacobian product into its inputs.
// Parameters live outside the graph and receive accumulated gradients.
// T is float for training and double for gradient checking.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "tyco/error.hpp"
#include "tyco/rng.hpp"

namespace tyco::ad {

template <class T>
struct Tensor {
  std::vector<int> shape;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s, T fill = T(0)) : shape(std::move(s)), data(count(shape), fill) {}
  Tensor(std::vector<int> s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {
    if (data.size() != count(shape)) throw ShapeError("data size does not match " + str(shape));
  }

  static std::size_t count(const std::vector<int>& s) {
    std::size_t n = 1;
    for (int d : s) n *= static_cast<std::size_t>(d);
    return n;
  }
  static std::string str(const std::vector<int>& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ']';
    return os.str();
  }

  std::size_t size() const { return data.size(); }
  int rank() const { return static_cast<int>(shape.size()); }
  int cols() const { return shape.empty() ? 1 : shape.back(); }
  int rows() const { return shape.empty() ? 1 : static_cast<int>(size() / static_cast<std::size_t>(cols())); }
  T& operator[](std::size_t i) { return data[i]; }
  const T& operator[](std::size_t i) const { return data[i]; }
  T item() const {
    if (size() != 1) throw ShapeError("item() on tensor of shape " + str(shape));
    return data[0];
  }
};

template <class T>
struct Parameter {
  std::string name;
  Tensor<T> value;
  std::vector<T> grad;

  Parameter() = default;
  Parameter(std::string n, Tensor<T> v)
      : name(std::move(n)), value(std::move(v)), grad(value.size(), T(0)) {}
  void zero_grad() { std::fill(grad.begin(), grad.end(), T(0)); }
};

struct Var {
  int id = -1;
};

template <class T>
using RowMat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class T>
using MapMat = Eigen::Map<RowMat<T>>;
template <class T>
using CMapMat = Eigen::Map<const RowMat<T>>;

template <class T>
class Graph {
 public:
  struct Node;
  using Backward = std::function<void(Graph&, const Node&)>;

  struct Node {
    std::string op;
    Tensor<T> own;                     // value for computed nodes
    const Tensor<T>* ref = nullptr;    // value for parameter leaves
    Parameter<T>* param = nullptr;
    std::vector<Var> inputs;
    std::vector<T> grad;
    Backward backward;
    bool needs_grad = false;

    const Tensor<T>& value() const { return ref ? *ref : own; }
  };

  // With record=false no backward closures are kept (inference).
  explicit Graph(bool record = true) : record_(record) {}

  const Tensor<T>& value(Var v) const { return node(v).value(); }
  const std::vector<T>& grad(Var v) const { return node(v).grad; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(Var v) const { return nodes_.at(static_cast<std::size_t>(v.id)); }
  bool recording() const { return record_; }

  // Gradient buffer of an input, allocated on first use; nullptr when the
  // input does not need a gradient.
  T* acc(Var v) {
    auto& n = nodes_[static_cast<std::size_t>(v.id)];
    if (!n.needs_grad) return nullptr;
    if (n.grad.empty()) n.grad.assign(n.value().size(), T(0));
    return n.grad.data();
  }

  Var param(Parameter<T>& p) {
    Node n;
    n.op = "param";
    n.ref = &p.value;
    n.param = &p;
    n.needs_grad = record_;
    return push(std::move(n));
  }

  Var constant(Tensor<T> t) {
    Node n;
    n.op = "const";
    n.own = std::move(t);
    return push(std::move(n));
  }

  // Registers an op whose value was computed by the caller. `backward` reads
  // self.grad and accumulates into acc(input) for each input.
  Var custom(std::string op, Tensor<T> value, std::vector<Var> inputs, Backward backward) {
    Node n;
    n.op = std::move(op);
    n.own = std::move(value);
    for (auto in : inputs) n.needs_grad = n.needs_grad || node(in).needs_grad;
    n.inputs = std::move(inputs);
    if (n.needs_grad && record_) n.backward = std::move(backward);
    else n.needs_grad = false;
    return push(std::move(n));
  }

  void backward(Var loss) {
    auto& root = nodes_.at(static_cast<std::size_t>(loss.id));
    if (root.value().size() != 1)
      throw ContractError("backward needs a scalar loss, got shape " +
                          Tensor<T>::str(root.value().shape));
    if (!root.needs_grad) return;
    root.grad.assign(1, T(1));
    for (auto i = static_cast<std::ptrdiff_t>(loss.id); i >= 0; --i) {
      auto& n = nodes_[static_cast<std::size_t>(i)];
      if (n.grad.empty()) continue;
      if (n.backward) n.backward(*this, n);
      if (n.param) {
        auto& g = n.param->grad;
        if (g.size() != n.grad.size()) g.assign(n.grad.size(), T(0));
        for (std::size_t k = 0; k < g.size(); ++k) g[k] += n.grad[k];
      }
    }
  }

  // ---- ops -------------------------------------------------------------

  Var matmul(Var a, Var b) {
    const auto& A = value(a);
    const auto& B = value(b);
    if (A.rank() != 2 || B.rank() != 2 || A.shape[1] != B.shape[0])
      throw ShapeError("matmul " + Tensor<T>::str(A.shape) + " x " + Tensor<T>::str(B.shape));
    const int m = A.shape[0], k = A.shape[1], n = B.shape[1];
    Tensor<T> C({m, n});
    MapMat<T>(C.data.data(), m, n).noalias() =
        CMapMat<T>(A.data.data(), m, k) * CMapMat<T>(B.data.data(), k, n);
    return custom("matmul", std::move(C), {a, b}, [a, b, m, k, n](Graph& g, const Node& self) {
      CMapMat<T> dC(self.grad.data(), m, n);
      if (T* ga = g.acc(a))
        MapMat<T>(ga, m, k).noalias() += dC * CMapMat<T>(g.value(b).data.data(), k, n).transpose();
      if (T* gb = g.acc(b))
        MapMat<T>(gb, k, n).noalias() += CMapMat<T>(g.value(a).data.data(), m, k).transpose() * dC;
    });
  }

  // b broadcasts over the leading dimensions of a.
  Var add(Var a, Var b) {
    const auto& A = value(a);
    const auto& B = value(b);
    if (!trailing(A.shape, B.shape))
      throw ShapeError("add " + Tensor<T>::str(A.shape) + " + " + Tensor<T>::str(B.shape));
    Tensor<T> C = A;
    const std::size_t nb = B.size();
    for (std::size_t i = 0; i < C.size(); ++i) C[i] += B[i % nb];
    return custom("add", std::move(C), {a, b}, [a, b, nb](Graph& g, const Node& self) {
      if (T* ga = g.acc(a))
        for (std::size_t i = 0; i < self.grad.size(); ++i) ga[i] += self.grad[i];
      if (T* gb = g.acc(b))
        for (std::size_t i = 0; i < self.grad.size(); ++i) gb[i % nb] += self.grad[i];
    });
  }

  Var sub(Var a, Var b) { return add(a, scale(b, T(-1))); }

  Var mul(Var a, Var b) {
    const auto& A = value(a);
    const auto& B = value(b);
    if (A.shape != B.shape)
      throw ShapeError("mul " + Tensor<T>::str(A.shape) + " * " + Tensor<T>::str(B.shape));
    Tensor<T> C = A;
    for (std::size_t i = 0; i < C.size(); ++i) C[i] *= B[i];
    return custom("mul", std::move(C), {a, b}, [a, b](Graph& g, const Node& self) {
      const auto& A = g.value(a);
      const auto& B = g.value(b);
      if (T* ga = g.acc(a))
        for (std::size_t i = 0; i < self.grad.size(); ++i) ga[i] += self.grad[i] * B[i];
      if (T* gb = g.acc(b))
        for (std::size_t i = 0; i < self.grad.size(); ++i) gb[i] += self.grad[i] * A[i];
    });
  }

  Var scale(Var a, T s) {
    Tensor<T> C = value(a);
    for (auto& x : C.data) x *= s;
    return custom("scale", std::move(C), {a}, [a, s](Graph& g, const Node& self) {
      if (T* ga = g.acc(a))
        for (std::size_t i = 0; i < self.grad.size(); ++i) ga[i] += s * self.grad[i];
    });
  }

  Var sum(Var a) {
    const auto& A = value(a);
    Tensor<T> C({}, std::vector<T>{std::accumulate(A.data.begin(), A.data.end(), T(0))});
    return custom("sum", std::move(C), {a}, [a](Graph& g, const Node& self) {
      if (T* ga = g.acc(a)) {
        const auto n = g.value(a).size();
        for (std::size_t i = 0; i < n; ++i) ga[i] += self.grad[0];
      }
    });
  }

  Var transpose(Var a) {
    const auto& A = value(a);
    if (A.rank() != 2) throw ShapeError("transpose needs rank 2, got " + Tensor<T>::str(A.shape));
    const int r = A.shape[0], c = A.shape[1];
    Tensor<T> C({c, r});
    MapMat<T>(C.data.data(), c, r) = CMapMat<T>(A.data.data(), r, c).transpose();
    return custom("transpose", std::move(C), {a}, [a, r, c](Graph& g, const Node& self) {
      if (T* ga = g.acc(a))
        MapMat<T>(ga, r, c) += CMapMat<T>(self.grad.data(), c, r).transpose();
    });
  }

  Var gelu(Var a) {
    constexpr T k0 = T(0.7978845608028654);  // sqrt(2/pi)
    constexpr T k1 = T(0.044715);
    const auto& A = value(a);
    Tensor<T> C(A.shape);
    std::vector<T> th(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
      const T x = A[i];
      th[i] = std::tanh(k0 * (x + k1 * x * x * x));
      C[i] = T(0.5) * x * (T(1) + th[i]);
    }
    return custom("gelu", std::move(C), {a}, [a, th = std::move(th)](Graph& g, const Node& self) {
      T* ga = g.acc(a);
      if (!ga) return;
      const auto& A = g.value(a);
      for (std::size_t i = 0; i < A.size(); ++i) {
        const T x = A[i];
        const T d = T(0.5) * (T(1) + th[i]) +
                    T(0.5) * x * (T(1) - th[i] * th[i]) * k0 * (T(1) + T(3) * k1 * x * x);
        ga[i] += self.grad[i] * d;
      }
    });
  }

  Var softmax(Var a) {
    const auto& A = value(a);
    const int r = A.rows(), c = A.cols();
    Tensor<T> Y(A.shape);
    for (int i = 0; i < r; ++i) softmax_row(&A.data[static_cast<std::size_t>(i) * c], &Y.data[static_cast<std::size_t>(i) * c], c);
    return custom("softmax", std::move(Y), {a}, [a, r, c](Graph& g, const Node& self) {
      T* ga = g.acc(a);
      if (!ga) return;
      const auto& Y = self.value();
      for (int i = 0; i < r; ++i) {
        const std::size_t o = static_cast<std::size_t>(i) * c;
        T dot = 0;
        for (int j = 0; j < c; ++j) dot += self.grad[o + j] * Y[o + j];
        for (int j = 0; j < c; ++j) ga[o + j] += Y[o + j] * (self.grad[o + j] - dot);
      }
    });
  }

  static constexpr T kLayerNormEps = T(1e-5);

  Var layer_norm(Var x, Var gamma, Var beta) {
    const auto& X = value(x);
    const int r = X.rows(), c = X.cols();
    if (value(gamma).shape != std::vector<int>{c} || value(beta).shape != std::vector<int>{c})
      throw ShapeError("layer_norm " + Tensor<T>::str(X.shape) + " with scale " +
                       Tensor<T>::str(value(gamma).shape) + " and shift " +
                       Tensor<T>::str(value(beta).shape));
    const auto& G = value(gamma);
    const auto& B = value(beta);
    Tensor<T> Y(X.shape);
    std::vector<T> xhat(X.size()), rstd(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      const std::size_t o = static_cast<std::size_t>(i) * c;
      T mu = 0;
      for (int j = 0; j < c; ++j) mu += X[o + j];
      mu /= T(c);
      T var = 0;
      for (int j = 0; j < c; ++j) var += (X[o + j] - mu) * (X[o + j] - mu);
      var /= T(c);
      const T rs = T(1) / std::sqrt(var + kLayerNormEps);
      rstd[static_cast<std::size_t>(i)] = rs;
      for (int j = 0; j < c; ++j) {
        xhat[o + j] = (X[o + j] - mu) * rs;
        Y[o + j] = xhat[o + j] * G[j] + B[j];
      }
    }
    return custom("layer_norm", std::move(Y), {x, gamma, beta},
                  [x, gamma, beta, r, c, xhat = std::move(xhat), rstd = std::move(rstd)](
                      Graph& g, const Node& self) {
                    const auto& G = g.value(gamma);
                    T* gg = g.acc(gamma);
                    T* gb = g.acc(beta);
                    T* gx = g.acc(x);
                    for (int i = 0; i < r; ++i) {
                      const std::size_t o = static_cast<std::size_t>(i) * c;
                      const T* dy = &self.grad[o];
                      if (gg)
                        for (int j = 0; j < c; ++j) gg[j] += dy[j] * xhat[o + j];
                      if (gb)
                        for (int j = 0; j < c; ++j) gb[j] += dy[j];
                      if (!gx) continue;
                      T m1 = 0, m2 = 0;
                      for (int j = 0; j < c; ++j) {
                        const T d = dy[j] * G[j];
                        m1 += d;
                        m2 += d * xhat[o + j];
                      }
                      m1 /= T(c);
                      m2 /= T(c);
                      for (int j = 0; j < c; ++j)
                        gx[o + j] += rstd[static_cast<std::size_t>(i)] *
                                     (dy[j] * G[j] - m1 - xhat[o + j] * m2);
                    }
                  });
  }

  Var embedding(Var table, std::span<const std::uint32_t> ids) {
    const auto& W = value(table);
    if (W.rank() != 2) throw ShapeError("embedding table must be rank 2, got " + Tensor<T>::str(W.shape));
    const int v = W.shape[0], e = W.shape[1];
    const int n = static_cast<int>(ids.size());
    Tensor<T> C({n, e});
    for (int i = 0; i < n; ++i) {
      if (ids[static_cast<std::size_t>(i)] >= static_cast<std::uint32_t>(v))
        throw ShapeError("embedding id " + std::to_string(ids[static_cast<std::size_t>(i)]) +
                         " outside table " + Tensor<T>::str(W.shape));
      std::copy_n(&W.data[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)]) * e], e,
                  &C.data[static_cast<std::size_t>(i) * e]);
    }
    std::vector<std::uint32_t> idv(ids.begin(), ids.end());
    return custom("embedding", std::move(C), {table},
                  [table, e, idv = std::move(idv)](Graph& g, const Node& self) {
                    T* gw = g.acc(table);
                    if (!gw) return;
                    for (std::size_t i = 0; i < idv.size(); ++i)
                      for (int j = 0; j < e; ++j)
                        gw[static_cast<std::size_t>(idv[i]) * e + j] += self.grad[i * e + j];
                  });
  }

  // Mean negative log-likelihood over rows whose target is >= 0.
  Var cross_entropy(Var logits, std::span<const int> targets) {
    const auto& L = value(logits);
    const int r = L.rows(), c = L.cols();
    if (static_cast<int>(targets.size()) != r)
      throw ShapeError("cross_entropy logits " + Tensor<T>::str(L.shape) + " vs " +
                       std::to_string(targets.size()) + " targets");
    std::vector<T> probs(L.size());
    T total = 0;
    int counted = 0;
    for (int i = 0; i < r; ++i) {
      const std::size_t o = static_cast<std::size_t>(i) * c;
      softmax_row(&L.data[o], &probs[o], c);
      const int t = targets[static_cast<std::size_t>(i)];
      if (t < 0) continue;
      if (t >= c) throw ShapeError("cross_entropy target " + std::to_string(t) + " >= " + std::to_string(c));
      T mx = L.data[o];
      for (int j = 1; j < c; ++j) mx = std::max(mx, L.data[o + j]);
      T se = 0;
      for (int j = 0; j < c; ++j) se += std::exp(L.data[o + j] - mx);
      total += std::log(se) + mx - L.data[o + t];
      ++counted;
    }
    const T denom = counted ? T(counted) : T(1);
    std::vector<int> tv(targets.begin(), targets.end());
    return custom("cross_entropy", Tensor<T>({}, std::vector<T>{total / denom}), {logits},
                  [logits, c, denom, probs = std::move(probs), tv = std::move(tv)](
                      Graph& g, const Node& self) {
                    T* gl = g.acc(logits);
                    if (!gl) return;
                    const T s = self.grad[0] / denom;
                    for (std::size_t i = 0; i < tv.size(); ++i) {
                      if (tv[i] < 0) continue;
                      const std::size_t o = i * static_cast<std::size_t>(c);
                      for (int j = 0; j < c; ++j) gl[o + j] += s * probs[o + j];
                      gl[o + static_cast<std::size_t>(tv[i])] -= s;
                    }
                  });
  }

  Var concat_rows(std::span<const Var> parts) {
    if (parts.empty()) throw ShapeError("concat_rows of nothing");
    const int c = value(parts[0]).cols();
    int r = 0;
    for (auto p : parts) {
      if (value(p).cols() != c)
        throw ShapeError("concat_rows " + Tensor<T>::str(value(parts[0]).shape) + " with " +
                         Tensor<T>::str(value(p).shape));
      r += value(p).rows();
    }
    Tensor<T> C({r, c});
    std::size_t off = 0;
    for (auto p : parts) {
      const auto& P = value(p);
      std::copy(P.data.begin(), P.data.end(), C.data.begin() + static_cast<std::ptrdiff_t>(off));
      off += P.size();
    }
    std::vector<Var> ins(parts.begin(), parts.end());
    return custom("concat_rows", std::move(C), ins, [ins](Graph& g, const Node& self) {
      std::size_t off = 0;
      for (auto p : ins) {
        const auto n = g.value(p).size();
        if (T* gp = g.acc(p))
          for (std::size_t i = 0; i < n; ++i) gp[i] += self.grad[off + i];
        off += n;
      }
    });
  }

  Var slice_rows(Var a, int start, int count) {
    const auto& A = value(a);
    const int c = A.cols();
    if (start < 0 || count < 0 || start + count > A.rows())
      throw ShapeError("slice_rows [" + std::to_string(start) + ", " +
                       std::to_string(start + count) + ") of " + Tensor<T>::str(A.shape));
    Tensor<T> C({count, c});
    const std::size_t o = static_cast<std::size_t>(start) * c;
    std::copy_n(A.data.begin() + static_cast<std::ptrdiff_t>(o), C.size(), C.data.begin());
    return custom("slice_rows", std::move(C), {a}, [a, o](Graph& g, const Node& self) {
      if (T* ga = g.acc(a))
        for (std::size_t i = 0; i < self.grad.size(); ++i) ga[o + i] += self.grad[i];
    });
  }

  // mask[i] != 0 replaces element i with `fill`; masked elements pass no
  // gradient. The mask broadcasts over leading dimensions.
  Var masked_fill(Var a, std::span<const std::uint8_t> mask, T fill) {
    const auto& A = value(a);
    if (mask.empty() || A.size() % mask.size() != 0)
      throw ShapeError("masked_fill mask of " + std::to_string(mask.size()) +
                       " elements does not tile " + Tensor<T>::str(A.shape));
    Tensor<T> C = A;
    const std::size_t nm = mask.size();
    for (std::size_t i = 0; i < C.size(); ++i)
      if (mask[i % nm]) C[i] = fill;
    std::vector<std::uint8_t> mv(mask.begin(), mask.end());
    return custom("masked_fill", std::move(C), {a}, [a, mv = std::move(mv)](Graph& g, const Node& self) {
      T* ga = g.acc(a);
      if (!ga) return;
      const std::size_t nm = mv.size();
      for (std::size_t i = 0; i < self.grad.size(); ++i)
        if (!mv[i % nm]) ga[i] += self.grad[i];
    });
  }

  // Inverted dropout; identity when p == 0.
  Var dropout(Var a, T p, Rng& rng) {
    if (p <= T(0)) return a;
    if (p >= T(1)) throw ConfigError("dropout probability must be < 1");
    const auto& A = value(a);
    std::vector<T> keep(A.size());
    const T s = T(1) / (T(1) - p);
    for (auto& k : keep) k = rng.uniform() < static_cast<double>(p) ? T(0) : s;
    Tensor<T> C = A;
    for (std::size_t i = 0; i < C.size(); ++i) C[i] *= keep[i];
    return custom("dropout", std::move(C), {a}, [a, keep = std::move(keep)](Graph& g, const Node& self) {
      if (T* ga = g.acc(a))
        for (std::size_t i = 0; i < self.grad.size(); ++i) ga[i] += self.grad[i] * keep[i];
    });
  }

  static void softmax_row(const T* in, T* out, int c) {
    T mx = in[0];
    for (int j = 1; j < c; ++j) mx = std::max(mx, in[j]);
    T s = 0;
    for (int j = 0; j < c; ++j) {
      out[j] = std::exp(in[j] - mx);
      s += out[j];
    }
    for (int j = 0; j < c; ++j) out[j] /= s;
  }

 private:
  static bool trailing(const std::vector<int>& a, const std::vector<int>& b) {
    if (b.size() > a.size()) return false;
    return std::equal(b.rbegin(), b.rend(), a.rbegin());
  }

  Var push(Node n) {
    nodes_.push_back(std::move(n));
    return Var{static_cast<int>(nodes_.size() - 1)};
  }

  std::deque<Node> nodes_;
  bool record_;
};

// Central-difference check. `loss` builds a fresh graph over the parameters
// and returns the scalar loss node. Returns the maximum relative error
// |a - n| / max(|a|, |n|, 1e-8) over `samples` coordinates drawn across all
// parameters (every coordinate when there are fewer).
//
// stencil = 4 uses the (f(-2h) - 8f(-h) + 8f(h) - f(2h)) / 12h difference,
// whose O(h^4) truncation stays far below 1e-4 at h = 1e-3; the two-point
// form (O(h^2)) does not on strongly curved ops such as GELU tails.
enum class Stencil { TwoPoint = 2, FourPoint = 4 };

struct GradCheckResult {
  double max_rel_error = 0;
  std::size_t coords = 0;
  std::string worst;  // "name[index] analytic vs numeric"
};

template <class LossFn>
GradCheckResult grad_check(LossFn&& loss, std::span<Parameter<double>* const> params,
                           double step = 1e-3, std::size_t samples = 200, std::uint64_t seed = 0,
                           Stencil stencil = Stencil::FourPoint) {
  for (auto* p : params) p->zero_grad();
  {
    Graph<double> g;
    auto l = loss(g);
    g.backward(l);
  }
  auto eval = [&] {
    Graph<double> g(false);
    return g.value(loss(g)).item();
  };

  std::vector<std::pair<std::size_t, std::size_t>> coords;
  std::size_t total = 0;
  for (auto* p : params) total += p->value.size();
  Rng rng(seed);
  if (total <= samples) {
    for (std::size_t pi = 0; pi < params.size(); ++pi)
      for (std::size_t i = 0; i < params[pi]->value.size(); ++i) coords.emplace_back(pi, i);
  } else {
    // Every parameter tensor gets at least one coordinate.
    for (std::size_t pi = 0; pi < params.size() && coords.size() < samples; ++pi)
      coords.emplace_back(pi, rng.below(params[pi]->value.size()));
    while (coords.size() < samples) {
      auto k = rng.below(total);
      std::size_t pi = 0;
      while (k >= params[pi]->value.size()) k -= params[pi++]->value.size();
      coords.emplace_back(pi, k);
    }
  }

  GradCheckResult res;
  res.coords = coords.size();
  for (auto [pi, i] : coords) {
    auto& x = params[pi]->value.data[i];
    const double orig = x;
    auto at = [&](double d) {
      x = orig + d;
      const double f = eval();
      x = orig;
      return f;
    };
    double num;
    if (stencil == Stencil::TwoPoint) {
      num = (at(step) - at(-step)) / (2 * step);
    } else {
      num = (at(-2 * step) - 8 * at(-step) + 8 * at(step) - at(2 * step)) / (12 * step);
    }
    const double ana = params[pi]->grad[i];
    const double err = std::abs(ana - num) / std::max({std::abs(ana), std::abs(num), 1e-8});
    if (err > res.max_rel_error || res.worst.empty()) {
      res.max_rel_error = std::max(err, res.max_rel_error);
      std::ostringstream os;
      os.precision(10);
      os << params[pi]->name << '[' << i << "] " << ana << " vs " << num;
      res.worst = os.str();
    }
  }
  return res;
}

}  // namespace tyco::ad
