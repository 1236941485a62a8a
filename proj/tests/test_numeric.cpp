#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ofamas/optimizer.hpp"
#include "ofamas/params.hpp"
#include "ofamas/rng.hpp"
#include "ofamas/tensor.hpp"
#include "support/gradcheck.hpp"

using namespace ofamas;
using namespace ofamas::numeric;
using testsupport::gradcheck;

namespace {

Tensor random_tensor(const std::vector<int>& shape, Rng& rng, double lo = -1.0, double hi = 1.0) {
  int n = 1;
  for (int e : shape) n *= e;
  std::vector<double> data(static_cast<std::size_t>(n));
  for (double& v : data) v = rng.uniform(lo, hi);
  return Tensor::of(shape, std::move(data));
}

} // namespace

TEST_SUITE_BEGIN("numeric");

TEST_CASE("matmul identity case") {
  Tensor eye = Tensor::of({2, 2}, {1, 0, 0, 1});
  Tensor b = Tensor::of({2, 2}, {3, 4, 5, 6});
  Tensor c = matmul(eye, b);
  CHECK(c.at(0, 0) == 3.0);
  CHECK(c.at(0, 1) == 4.0);
  CHECK(c.at(1, 0) == 5.0);
  CHECK(c.at(1, 1) == 6.0);
}

TEST_CASE("matmul hand computation") {
  Tensor a = Tensor::of({1, 2}, {1, 2});
  Tensor b = Tensor::of({2, 1}, {3, 4});
  Tensor c = matmul(a, b);
  CHECK(c.size() == 1);
  CHECK(c.at(0, 0) == 11.0);
}

TEST_CASE("matmul against triple-loop oracle") {
  Rng rng(42);
  Tensor a = random_tensor({5, 4}, rng);
  Tensor b = random_tensor({4, 3}, rng);
  Tensor c = matmul(a, b);
  // Independent brute-force evaluation.
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a.at(i, k) * b.at(k, j);
      CHECK(std::abs(c.at(i, j) - acc) <= 1e-12);
    }
  }
}

TEST_CASE("matmul shape mismatch names both shapes") {
  Tensor a = Tensor::of({2, 3}, {1, 2, 3, 4, 5, 6});
  Tensor b = Tensor::of({2, 2}, {1, 2, 3, 4});
  try {
    matmul(a, b);
    FAIL("expected DimensionError");
  } catch (const DimensionError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("[2x3]") != std::string::npos);
    CHECK(msg.find("[2x2]") != std::string::npos);
  }
}

TEST_CASE("softmax symmetry") {
  Tensor s = softmax(Tensor::vec({0, 0, 0}));
  for (int i = 0; i < 3; ++i) CHECK(s[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("softmax stability under large logits") {
  Tensor s = softmax(Tensor::vec({1000, 0}));
  CHECK(std::abs(s[0] - 1.0) <= 1e-9);
  CHECK(std::abs(s[1] - 0.0) <= 1e-9);
}

TEST_CASE("softmax matches high-precision reference") {
  // Frozen from a 50-digit arbitrary-precision evaluation of exp(x_i)/sum.
  const double expected[3] = {0.090030573170380457998, 0.24472847105479765247,
                              0.66524095577482188953};
  Tensor s = softmax(Tensor::vec({1, 2, 3}));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(s[i] - expected[i]) <= 1e-12);
}

TEST_CASE("empty tensors are unconstructible") {
  CHECK_THROWS_AS(Tensor::vec({}), DimensionError);
  CHECK_THROWS_AS(Tensor::of({0}, {}), DimensionError);
}

TEST_CASE("softmax output sums to one and is permutation-equivariant") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + rng.next_int(8);
    Tensor v = random_tensor({n}, rng, -5.0, 5.0);
    Tensor s = softmax(v);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(s[i] > 0.0);
      total += s[i];
    }
    CHECK(std::abs(total - 1.0) <= 1e-9);

    // Reverse the input; the output must reverse identically.
    std::vector<double> rev(v.data().rbegin(), v.data().rend());
    Tensor sr = softmax(Tensor::vec(rev));
    for (int i = 0; i < n; ++i) CHECK(sr[i] == doctest::Approx(s[n - 1 - i]).epsilon(1e-15));
  }
}

TEST_CASE("elementwise basics") {
  CHECK(sigmoid(Tensor::scalar(0.0)).value() == 0.5);
  Tensor h = hadamard(Tensor::vec({1, 2}), Tensor::vec({3, 4}));
  CHECK(h[0] == 3.0);
  CHECK(h[1] == 8.0);
  CHECK(relu(Tensor::vec({-1, 2}))[0] == 0.0);
  CHECK(leaky_relu(Tensor::vec({-1, 2}))[0] == doctest::Approx(-0.01));
  CHECK(leaky_relu(Tensor::vec({-1, 2}))[1] == 2.0);
}

TEST_CASE("l1_norm gradient is the sign away from zero") {
  ModelParams params;
  params.add("p", Tensor::vec({0.5, -2.0}));
  Tape tape;
  Tensor loss = l1_norm(params.at("p"), &tape);
  auto outcome = tape.backward(loss);
  REQUIRE(outcome.gradients.count("p"));
  CHECK(outcome.gradients.at("p")[0] == 1.0);
  CHECK(outcome.gradients.at("p")[1] == -1.0);
}

TEST_CASE("backward of a plain sum gives all-ones") {
  ModelParams params;
  params.add("p", Tensor::vec({1.0, -3.0, 2.5}));
  Tape tape;
  auto outcome = tape.backward(sum(params.at("p"), &tape));
  for (int i = 0; i < 3; ++i) CHECK(outcome.gradients.at("p")[i] == 1.0);
}

TEST_CASE("backward of half squared norm gives the parameter back") {
  ModelParams params;
  Tensor p = params.add("p", Tensor::vec({1.0, -3.0, 2.5}));
  Tape tape;
  Tensor sq = hadamard(p, p, &tape);
  Tensor loss = affine(sum(sq, &tape), 0.5, 0.0, &tape);
  auto outcome = tape.backward(loss);
  for (int i = 0; i < 3; ++i) CHECK(outcome.gradients.at("p")[i] == doctest::Approx(p[i]).epsilon(1e-15));
}

TEST_CASE("backward rejects non-scalar losses and consumed tapes") {
  ModelParams params;
  Tensor p = params.add("p", Tensor::vec({1.0, 2.0}));
  Tape tape;
  Tensor doubled = affine(p, 2.0, 0.0, &tape);
  CHECK_THROWS_AS(tape.backward(doubled), ContractError);
}

TEST_CASE("detached loss yields empty gradient map plus warning flag") {
  Tape tape;
  auto outcome = tape.backward(Tensor::scalar(1.5));
  CHECK(outcome.detached_loss);
  CHECK(outcome.gradients.empty());
}

TEST_CASE("tape is consumed by backward") {
  ModelParams params;
  Tensor p = params.add("p", Tensor::vec({1.0}));
  Tape tape;
  Tensor loss = sum(p, &tape);
  tape.backward(loss);
  CHECK(tape.consumed());
  CHECK_THROWS_AS(tape.backward(loss), ContractError);
}

TEST_CASE("parameter unused in the forward pass has zero gradient") {
  ModelParams params;
  Tensor used = params.add("used", Tensor::vec({2.0}));
  params.add("unused", Tensor::vec({5.0}));
  Tape tape;
  auto outcome = tape.backward(sum(used, &tape));
  CHECK(outcome.gradients.count("used") == 1);
  // Absent from the map == exactly zero.
  CHECK(outcome.gradients.count("unused") == 0);
}

TEST_CASE("finite-difference check across the exported operation set") {
  Rng rng(101);
  ModelParams params;
  params.add("A", random_tensor({3, 4}, rng));
  params.add("x", random_tensor({4}, rng));
  params.add("y", random_tensor({3}, rng));
  params.add("M", random_tensor({2, 3}, rng));
  // Keep values away from relu/l1/clamp kinks so central differences are valid.
  params.add("k", Tensor::vec({0.7, -0.8, 0.55}));
  params.add("s", Tensor::vec({0.9}));

  auto loss_fn = [](const ModelParams& p, Tape* tape) {
    Tensor mv = matmul(p.at("A"), p.at("x"), tape);             // [3]
    Tensor a1 = add(mv, p.at("y"), tape);                       // [3]
    Tensor a2 = sub(a1, p.at("k"), tape);                       // [3]
    Tensor h = hadamard(a2, p.at("y"), tape);                   // [3]
    Tensor sm = softmax(h, tape);                               // [3]
    Tensor lg = log(clamp(sm, 1e-7, 1.0, tape), tape);          // [3]
    Tensor cat = concat(lg, sigmoid(a2, tape), tape);           // [6]
    Tensor lk = leaky_relu(cat, tape);                          // [6]
    Tensor rl = relu(affine(lk, 1.0, 0.3, tape), tape);         // [6]
    Tensor pooled = mean_pool_rows(p.at("M"), tape);            // [3]
    const Tensor parts[] = {pick(rl, 1, tape), pick(rl, 4, tape), mean(pooled, tape),
                            l1_norm(p.at("k"), tape), smul(mean(rl, tape), p.at("s"), tape),
                            sdiv(sum(pooled, tape), p.at("s"), tape)};
    Tensor stacked = concat(std::span<const Tensor>(parts, 6), tape);
    const Tensor halves[] = {sum(stacked, tape), mean(stacked, tape)};
    return add_n(std::span<const Tensor>(halves, 2), tape);
  };

  auto result = gradcheck(params, loss_fn);
  INFO("worst: ", result.worst, " rel err ", result.max_rel_err);
  CHECK(result.ok);
}

TEST_CASE("adam with zero gradients never changes parameters") {
  ModelParams params;
  params.add("p", Tensor::vec({1.0, -2.0, 3.0}));
  AdamOptimizer opt(AdamConfig{.lr = 0.01});
  GradMap grads;
  grads.emplace("p", Tensor::vec({0.0, 0.0, 0.0}));
  for (int i = 0; i < 5; ++i) opt.step(params, grads);
  CHECK(params.at("p")[0] == 1.0);
  CHECK(params.at("p")[1] == -2.0);
  CHECK(params.at("p")[2] == 3.0);
}

TEST_CASE("first adam step moves a scalar parameter by -lr") {
  ModelParams params;
  params.add("p", Tensor::vec({0.25}));
  AdamOptimizer opt(AdamConfig{.lr = 0.002});
  GradMap grads;
  grads.emplace("p", Tensor::vec({1.0}));
  opt.step(params, grads);
  // Closed form: with m_hat = g and v_hat = g^2 after bias correction the
  // first update is -lr * g / (|g| + eps).
  CHECK(std::abs(params.at("p")[0] - (0.25 - 0.002)) <= 1e-9);
}

TEST_CASE("plateau scheduler halves the learning rate after 11 flat epochs") {
  AdamOptimizer opt(AdamConfig{.lr = 0.002}, PlateauConfig{});
  CHECK_FALSE(opt.observe_epoch(1.0)); // first observation sets the best
  for (int i = 0; i < 10; ++i) {
    CHECK_FALSE(opt.observe_epoch(1.0));
    CHECK(opt.learning_rate() == 0.002);
  }
  CHECK(opt.observe_epoch(1.0)); // 11th non-improving epoch
  CHECK(opt.learning_rate() == doctest::Approx(0.001));
  // Counter was reset, so the decay does not repeat immediately.
  CHECK_FALSE(opt.observe_epoch(1.0));
  CHECK(opt.learning_rate() == doctest::Approx(0.001));
}

TEST_CASE("plateau scheduler requires a relative improvement") {
  AdamOptimizer opt(AdamConfig{.lr = 0.1}, PlateauConfig{});
  opt.observe_epoch(1.0);
  // A sub-threshold decrease does not count as improvement.
  opt.observe_epoch(1.0 - 1e-6);
  CHECK(opt.bad_epochs() == 1);
  // A real decrease resets the counter.
  opt.observe_epoch(0.9);
  CHECK(opt.bad_epochs() == 0);
}

TEST_CASE("nan gradients abort the step without touching parameters") {
  ModelParams params;
  params.add("p", Tensor::vec({1.0, 2.0}));
  AdamOptimizer opt;
  GradMap grads;
  grads.emplace("p", Tensor::vec({0.5, std::nan("")}));
  CHECK_THROWS_AS(opt.step(params, grads), NumericError);
  CHECK(params.at("p")[0] == 1.0);
  CHECK(params.at("p")[1] == 2.0);
}

TEST_CASE("seeded rng reproduces its stream exactly") {
  Rng a(2024), b(2024);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng fa = a.fork(3), fb = b.fork(3);
  for (int i = 0; i < 10; ++i) CHECK(fa.next_u64() == fb.next_u64());
  // Distinct streams diverge.
  CHECK(a.fork(1).next_u64() != a.fork(2).next_u64());
}

TEST_CASE("rng next_int stays in range") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const int v = rng.next_int(7);
    CHECK(v >= 0);
    CHECK(v < 7);
  }
}

TEST_SUITE_END();
