#include "doctest.h"

#include <cmath>

#include "meanlab/asymptotics.hpp"
#include "meanlab/errors.hpp"
#include "meanlab/pair_means.hpp"
#include "meanlab/samplers.hpp"
#include "support.hpp"

using namespace meanlab;
using namespace meanlab::test;

namespace {

const std::vector<double> kGrid{0.02, 0.01, 0.005, 0.0025};

MultiMean named(MultiMean::Kind kind, double p = 1.0) {
  MultiMean m;
  m.kind = kind;
  m.p = p;
  return m;
}

std::vector<MultiMean> trotter_means() {
  return {named(MultiMean::Kind::Arithmetic), named(MultiMean::Kind::Harmonic),
          named(MultiMean::Kind::Quasi, 0.5), named(MultiMean::Kind::Quasi, -0.5)};
}

MatrixTuple commuting(std::uint64_t seed, int n, int dim, double lo, double hi) {
  SamplerSpec s;
  s.seed = seed;
  s.dim = dim;
  s.lambda_lo = lo;
  s.lambda_hi = hi;
  return random_commuting_family(s, n);
}

}  // namespace

TEST_CASE("curves") {
  const Curve c(real_matrix({{0, 1}, {1, 0}}));
  CHECK(op_norm(c.at(0).matrix() - Matrix::Identity(2, 2)) == 0.0);
  const Matrix expect = reference_fn(c.generator().matrix(), [](double v) { return std::exp(0.3 * v); });
  CHECK(rel_dist(c.at(0.3).matrix(), expect) <= 1e-14);
}

TEST_CASE("order estimation") {
  CHECK(estimate_order({0.4, 0.2, 0.1}, {4, 2, 1}).value() == doctest::Approx(1.0));
  CHECK(estimate_order({0.4, 0.2, 0.1}, {16, 4, 1}).value() == doctest::Approx(2.0));
  CHECK_FALSE(estimate_order({0.4, 0.2}, {0, 0}).has_value());
  // One bad ratio among three does not move the median.
  CHECK(estimate_order({0.8, 0.4, 0.2, 0.1}, {8, 4, 2, 0.01}).value() == doctest::Approx(1.0));
}

TEST_CASE("Lie-Trotter with zero generators has zero error") {
  const std::vector<Curve> curves{Curve(HermitianMatrix::zero(3)), Curve(HermitianMatrix::zero(3))};
  for (const MultiMean& m : trotter_means()) {
    const LimitStudyReport r = lie_trotter_limit_study(m, WeightVector::uniform(2), curves, kGrid);
    for (double e : r.errors) CHECK(e <= 1e-12);
    CHECK(r.all_verdicts_hold());
  }
}

TEST_CASE("Lie-Trotter with cancelling commuting generators") {
  const std::vector<Curve> curves{Curve(HermitianMatrix::diagonal(std::vector<double>{1, -1})),
                                  Curve(HermitianMatrix::diagonal(std::vector<double>{-1, 1}))};
  const LimitStudyReport r =
      lie_trotter_limit_study(named(MultiMean::Kind::Arithmetic), WeightVector::uniform(2), curves, kGrid);
  // The mean is cosh(s) I, so E(s) = log(cosh s) / s.
  for (std::size_t i = 0; i < kGrid.size(); ++i)
    CHECK(r.errors[i] == doctest::Approx(std::log(std::cosh(kGrid[i])) / kGrid[i]).epsilon(1e-8));
  for (std::size_t i = 1; i < r.errors.size(); ++i) CHECK(r.errors[i] < r.errors[i - 1]);
  CHECK(r.all_verdicts_hold());
}

TEST_CASE("Lie-Trotter with noncommuting generators converges at first order") {
  const std::vector<Curve> curves{Curve(HermitianMatrix::diagonal(std::vector<double>{1, -1})),
                                  Curve(real_matrix({{0, 1}, {1, 0}}))};
  const Matrix target = reference_fn(real_matrix({{0.5, 0.5}, {0.5, -0.5}}).matrix(),
                                     [](double v) { return std::exp(v); });
  for (const MultiMean& m : trotter_means()) {
    CAPTURE(m.name());
    const LimitStudyReport r = lie_trotter_limit_study(m, WeightVector::uniform(2), curves, kGrid);
    REQUIRE(r.estimated_order.has_value());
    CHECK(*r.estimated_order >= 0.7);
    CHECK(*r.estimated_order <= 1.3);
    for (std::size_t i = 1; i < r.errors.size(); ++i) CHECK(r.errors[i] < r.errors[i - 1]);
    CHECK(r.errors.back() <= 5e-3);
    CHECK(r.all_verdicts_hold());
    // Independent error at the smallest s: d_T(G^{1/s}, target) via Eigen.
    const double s = kGrid.back();
    const HpdMatrix g = m(WeightVector::uniform(2), MatrixTuple({curves[0].at(s), curves[1].at(s)}));
    const Matrix gs = reference_fn(g.matrix(), [&](double v) { return std::pow(v, 1 / s); });
    const Matrix ti = reference_fn(target, [](double v) { return 1 / std::sqrt(v); });
    const Eigen::VectorXd ev = reference_eigenvalues(ti * gs * ti);
    const double dt = std::max(std::abs(std::log(ev(0))), std::abs(std::log(ev(ev.size() - 1))));
    CHECK(r.errors.back() == doctest::Approx(dt).epsilon(1e-6));
  }
}

TEST_CASE("Lie-Trotter rejects mismatched curves") {
  const std::vector<Curve> curves{Curve(HermitianMatrix::zero(2)), Curve(HermitianMatrix::zero(3))};
  CHECK_THROWS_AS(
      lie_trotter_limit_study(named(MultiMean::Kind::Arithmetic), WeightVector::uniform(2), curves, kGrid),
      PreconditionError);
}

TEST_CASE("Renyi zero limit") {
  const std::vector<double> grid{0.2, 0.1, 0.05};
  SUBCASE("commuting tuple below the identity") {
    const MatrixTuple a = commuting(5, 3, 3, 0.2, 0.95);
    CHECK(detect_renyi_hypothesis(a) == RenyiHypothesis::BelowIdentity);
    const LimitStudyReport r =
        renyi_zero_limit_study(0.4, 0.9, WeightVector::uniform(3), a, grid, RenyiHypothesis::BelowIdentity);
    CHECK(r.all_verdicts_hold());
    CHECK(r.worst_margin() >= -1e-9);
  }
  SUBCASE("constant tuple") {
    const HpdMatrix x = commuting(6, 1, 3, 0.2, 0.95)[0];
    const MatrixTuple a({x, x});
    const LimitStudyReport r =
        renyi_zero_limit_study(0.4, 0.9, WeightVector::uniform(2), a, grid, RenyiHypothesis::BelowIdentity);
    CHECK(r.all_verdicts_hold());
    // Both one-sided limits equal X; the surrogate Q_p(X^{1-t}) = X^{1-t}
    // sits above X with near-order margin lambda_max(X)^{-t/2} - 1.
    const double surrogate = std::pow(x.max_eigenvalue(), -0.2) - 1;
    for (const GridVerdict& v : r.verdicts) {
      CAPTURE(v.check);
      if (v.check.rfind("R(A^-p)", 0) == 0)
        CHECK(std::abs(v.verdict.margin) <= 1e-9);
      else
        CHECK(v.verdict.margin == doctest::Approx(surrogate).epsilon(1e-9));
    }
    for (double e : r.errors) CHECK(e <= 1e-9);
  }
  SUBCASE("random tuple above the identity") {
    Rng rng(51, "test-renyi-zero");
    const MatrixTuple a = random_tuple_rng(rng, 3, 3, 1.02, 5);
    CHECK(detect_renyi_hypothesis(a) == RenyiHypothesis::AboveIdentity);
    const LimitStudyReport r =
        renyi_zero_limit_study(0.4, 0.9, WeightVector::uniform(3), a, grid, RenyiHypothesis::AboveIdentity);
    CHECK(r.all_verdicts_hold());
    CHECK(r.errors.size() == grid.size());
  }
  SUBCASE("hypothesis mismatch") {
    Rng rng(52, "test-renyi-zero-mismatch");
    const MatrixTuple a = random_tuple_rng(rng, 2, 3, 0.2, 5);
    CHECK(detect_renyi_hypothesis(a) == RenyiHypothesis::None);
    CHECK_THROWS_AS(
        renyi_zero_limit_study(0.4, 0.9, WeightVector::uniform(2), a, grid, RenyiHypothesis::BelowIdentity),
        PreconditionError);
  }
}

TEST_CASE("quasi-arithmetic means approach the log-Euclidean mean") {
  const std::vector<double> grid{0.5, 0.25, 0.125, 0.0625};
  SUBCASE("commuting") {
    const LimitStudyReport r = qp_le_convergence_study(WeightVector::uniform(3), commuting(7, 3, 4, 0.2, 5), grid);
    CHECK(r.all_verdicts_hold());
    for (std::size_t i = 1; i < r.errors.size(); ++i) CHECK(r.errors[i] < r.errors[i - 1]);
  }
  SUBCASE("constant") {
    Rng rng(53, "test-qp-constant");
    const HpdMatrix x = random_hpd(rng, 3, 0.2, 5);
    const LimitStudyReport r = qp_le_convergence_study(WeightVector::uniform(2), MatrixTuple({x, x}), grid);
    for (double e : r.errors) CHECK(e <= 1e-10);
    for (const GridVerdict& v : r.verdicts) CHECK(std::abs(v.verdict.margin) <= 1e-10);
  }
  SUBCASE("random tuples: verdicts hold and the error halves with p") {
    Rng rng(54, "test-qp-random");
    for (int trial = 0; trial < 10; ++trial) {
      const int n = rng.uniform_int(2, 4);
      const LimitStudyReport r =
          qp_le_convergence_study(random_weights(rng, n), random_tuple_rng(rng, n, rng.uniform_int(2, 5)), grid);
      CHECK(r.all_verdicts_hold());
      CHECK(r.worst_margin() >= -1e-8);
      REQUIRE(r.estimated_order.has_value());
      CHECK(*r.estimated_order >= 0.8);
      CHECK(*r.estimated_order <= 1.2);
    }
  }
}
