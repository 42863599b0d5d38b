#include "doctest.h"

#include <cmath>

#include "meanlab/errors.hpp"
#include "meanlab/multi_means.hpp"
#include "meanlab/order_relations.hpp"
#include "meanlab/pair_means.hpp"
#include "meanlab/samplers.hpp"
#include "meanlab/spectral.hpp"
#include "support.hpp"

using namespace meanlab;
using namespace meanlab::test;

namespace {

const WeightVector kHalf = WeightVector::uniform(2);

MatrixTuple diag_pair() { return tuple_of({diag({1, 4}), diag({9, 16})}); }

bool close(const HpdMatrix& x, const HpdMatrix& y, double tol) {
  return rel_dist(x.matrix(), y.matrix()) <= tol;
}

MatrixTuple commuting(Rng& rng, int n, int dim) {
  SamplerSpec spec;
  spec.seed = rng.next_u64();
  spec.dim = dim;
  return random_commuting_family(spec, n);
}

/// Entrywise weighted Holder mean of the spectra of a commuting family in
/// its shared eigenbasis.
HpdMatrix scalar_mean(const WeightVector& w, const MatrixTuple& a, double p) {
  const Matrix u = a[0].eig().vectors;
  const int m = a.dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m);
  for (int j = 0; j < a.size(); ++j) {
    const Matrix d = u.adjoint() * a[j].matrix() * u;
    for (int i = 0; i < m; ++i) {
      const double x = d(i, i).real();
      out(i) += w[j] * (p == 0 ? std::log(x) : std::pow(x, p));
    }
  }
  for (int i = 0; i < m; ++i) out(i) = p == 0 ? std::exp(out(i)) : std::pow(out(i), 1 / p);
  return HpdMatrix(HermitianMatrix::symmetrized(u * out.cast<Complex>().asDiagonal() * u.adjoint()));
}

}  // namespace

TEST_CASE("weights") {
  const WeightVector w({1, 3});
  CHECK(w[0] == 0.25);
  CHECK(w[1] == 0.75);
  CHECK_THROWS_AS(WeightVector({1, 0}), PreconditionError);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{}), PreconditionError);
  CHECK_THROWS_AS(MatrixTuple({diag({1, 2}), diag({1, 2, 3})}), PreconditionError);
}

TEST_CASE("diagonal examples") {
  CHECK(close(quasi_arithmetic(1, kHalf, diag_pair()), diag({5, 10}), 1e-15));
  CHECK(close(quasi_arithmetic(0.5, kHalf, diag_pair()), diag({4, 9}), 1e-14));
  CHECK(close(log_euclidean(kHalf, diag_pair()), diag({3, 8}), 1e-14));
  CHECK(close(harmonic_mean(kHalf, diag_pair()), diag({1.8, 6.4}), 1e-14));
  CHECK(close(arithmetic_mean(kHalf, diag_pair()), diag({5, 10}), 1e-15));
  CHECK(close(renyi_power_mean(0.5, 0.75, kHalf, diag_pair()).value, diag({4, 9}), 1e-8));
  CHECK(close(karcher_mean(kHalf, diag_pair()).value, diag({3, 8}), 1e-12));
  CHECK(close(wasserstein_barycenter(kHalf, diag_pair()).value, diag({4, 9}), 1e-12));
}

TEST_CASE("quasi-arithmetic parameter handling") {
  CHECK_THROWS_AS(quasi_arithmetic(0, kHalf, diag_pair()), DomainError);
  CHECK_THROWS_AS(quasi_arithmetic(65, kHalf, diag_pair()), PreconditionError);
  CHECK(quasi_routes_to_log_euclidean(5e-5));
  CHECK_FALSE(quasi_routes_to_log_euclidean(2e-4));
  CHECK(close(quasi_arithmetic(5e-5, kHalf, diag_pair()), log_euclidean(kHalf, diag_pair()), 0));
  CHECK(close(quasi_arithmetic(-1, kHalf, diag_pair()), harmonic_mean(kHalf, diag_pair()), 1e-14));
}

TEST_CASE("constant tuples are fixed") {
  Rng rng(41, "test-multi-constant");
  const HpdMatrix x = random_hpd(rng, 4, 0.2, 5);
  const MatrixTuple a = tuple_of({x, x, x});
  const WeightVector w = random_weights(rng, 3);
  CHECK(close(log_euclidean(w, a), x, 1e-12));
  CHECK(close(quasi_arithmetic(0.3, w, a), x, 1e-12));
  CHECK(close(quasi_arithmetic(-2, w, a), x, 1e-12));
  CHECK(close(karcher_mean(w, a).value, x, 1e-12));
  CHECK(close(wasserstein_barycenter(w, a).value, x, 1e-12));
  CHECK(close(renyi_power_mean(0.2, 0.6, w, a).value, x, 1e-10));
}

TEST_CASE("commuting families reduce to scalar means") {
  Rng rng(42, "test-multi-commuting");
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(2, 4), dim = rng.uniform_int(2, 6);
    const MatrixTuple a = commuting(rng, n, dim);
    const WeightVector w = random_weights(rng, n);
    CHECK(close(quasi_arithmetic(0.5, w, a), scalar_mean(w, a, 0.5), 1e-10));
    CHECK(close(log_euclidean(w, a), scalar_mean(w, a, 0), 1e-10));
    CHECK(close(karcher_mean(w, a).value, scalar_mean(w, a, 0), 1e-10));
    CHECK(close(wasserstein_barycenter(w, a).value, scalar_mean(w, a, 0.5), 1e-10));
    const double t = trial % 2 ? 0.2 : 0.7, z = trial % 2 ? 0.6 : 1.0;
    CHECK(close(renyi_power_mean(t, z, w, a).value, scalar_mean(w, a, 1 - t), 1e-8));
  }
}

TEST_CASE("Renyi solver") {
  Rng rng(43, "test-renyi");
  const SolverConfig cfg{1e-12, 200};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(2, 4), dim = rng.uniform_int(2, 6);
    const MatrixTuple a = random_tuple_rng(rng, n, dim);
    const WeightVector w = random_weights(rng, n);
    CHECK(close(renyi_power_mean(0, 0.5, w, a).value, arithmetic_mean(w, a), 1e-11));
    const SolveResult r = renyi_power_mean(0.5, 0.75, w, a, cfg);
    CHECK(r.trace.converged);
    CHECK(r.trace.iterations <= 200);
    const HpdMatrix fx = renyi_map(0.5, 0.75, w, a, r.value);
    CHECK(op_norm(fx.matrix() - r.value.matrix()) <= 1e-12 * std::max(1.0, op_norm(r.value.matrix())));
    double weighted_log_det = 0;
    for (int j = 0; j < n; ++j) weighted_log_det += w[j] * log_det(a[j]);
    CHECK(log_det(r.value) >= weighted_log_det - 1e-8);
  }
  CHECK_THROWS_AS(renyi_power_mean(0.5, 0.5, kHalf, diag_pair()), PreconditionError);
  CHECK_THROWS_AS(renyi_power_mean(0.2, 1.5, kHalf, diag_pair()), PreconditionError);
  CHECK_THROWS_AS(renyi_power_mean(-0.1, 0.5, kHalf, diag_pair()), PreconditionError);
}

TEST_CASE("Karcher solver residual and fixed point") {
  Rng rng(44, "test-karcher");
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(2, 5), dim = rng.uniform_int(2, 6);
    const MatrixTuple a = random_tuple_rng(rng, n, dim);
    const WeightVector w = random_weights(rng, n);
    const SolveResult k = karcher_mean(w, a);
    CHECK(k.trace.converged);
    CHECK(karcher_residual(w, a, k.value) <= 1e-12);
    // Oracle: the residual expressed through Eigen's solver.
    const Matrix xr = reference_fn(k.value.matrix(), [](double v) { return std::sqrt(v); });
    Matrix s = Matrix::Zero(dim, dim);
    for (int j = 0; j < n; ++j) {
      const Matrix ai = reference_fn(a[j].matrix(), [](double v) { return 1 / v; });
      const Matrix inner = xr * ai * xr;
      s += w[j] * reference_fn((inner + inner.adjoint()) / 2.0, [](double v) { return std::log(v); });
    }
    CHECK(op_norm(s) <= 1e-10);
    if (n == 2) CHECK(close(k.value, metric_geometric(a[0], a[1], w[1]), 1e-10));
  }
}

TEST_CASE("barycenter matches the pairwise Wasserstein mean for n = 2") {
  Rng rng(45, "test-barycenter");
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = rng.uniform_int(2, 8);
    const MatrixTuple a = random_tuple_rng(rng, 2, dim);
    const WeightVector w({0.3, 0.7});
    const SolveResult b = wasserstein_barycenter(w, a);
    CHECK(b.trace.converged);
    CHECK(close(b.value, wasserstein_mean(a[0], a[1], 0.7), 1e-8));
    CHECK(relative_gap(barycenter_map(w, a, b.value).hermitian(), b.value.hermitian()) <= 1e-11);
  }
}

TEST_CASE("ordering of the named means") {
  const ToleranceProfile tol{1e-8, true};
  Rng rng(46, "test-multi-order");
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(2, 5), dim = rng.uniform_int(2, 6);
    const MatrixTuple a = random_tuple_rng(rng, n, dim);
    const WeightVector w = random_weights(rng, n);
    const HpdMatrix ar = arithmetic_mean(w, a), h = harmonic_mean(w, a), le = log_euclidean(w, a);
    const HpdMatrix omega = wasserstein_barycenter(w, a).value;
    CHECK(loewner_cmp(h, ar, tol).holds);
    CHECK(near_order_cmp(h, le, tol).holds);
    CHECK(near_order_cmp(le, ar, tol).holds);
    CHECK(loewner_cmp(omega, ar, tol).holds);
    CHECK(weak_log_majorization_cmp(le, omega, tol).holds);
    CHECK(weak_log_majorization_cmp(karcher_mean(w, a).value, le, tol, true).holds);
  }
}

TEST_CASE("tuple transformations") {
  Rng rng(47, "test-tuple");
  const MatrixTuple a = random_tuple_rng(rng, 3, 3);
  const WeightVector w = random_weights(rng, 3);
  const std::vector<int> sigma{2, 0, 1};
  CHECK(close(arithmetic_mean(w.permuted(sigma), a.permuted(sigma)), arithmetic_mean(w, a), 1e-14));
  CHECK(close(log_euclidean(w.repeated(3), a.repeated(3)), log_euclidean(w, a), 1e-12));
  CHECK(close(a.inverted()[1], a[1].inverse(), 1e-14));
  CHECK(close(a.scaled(2)[0], a[0].scaled(2), 0));
  CHECK(w.repeated(2).size() == 6);
}
