#include "doctest.h"

#include <cmath>

#include "meanlab/eigensolver.hpp"
#include "meanlab/errors.hpp"
#include "meanlab/samplers.hpp"
#include "meanlab/spectral.hpp"
#include "support.hpp"

using namespace meanlab;
using namespace meanlab::test;

TEST_CASE("Hermitian construction symmetrizes small asymmetry and rejects large") {
  Matrix m(2, 2);
  m << Complex(1, 0), Complex(2, 1e-15), Complex(2, -1e-15 + 1e-16), Complex(3, 0);
  const HermitianMatrix h(m);
  CHECK(h(0, 1) == std::conj(h(1, 0)));
  CHECK(h(0, 0).imag() == 0.0);

  Matrix bad = m;
  bad(0, 1) = Complex(2.1, 0);
  CHECK_THROWS_AS(HermitianMatrix{bad}, PreconditionError);
  CHECK_THROWS_AS(HermitianMatrix{Matrix(2, 3)}, PreconditionError);
  Matrix nan = m;
  nan(0, 0) = Complex(std::nan(""), 0);
  CHECK_THROWS_AS(HermitianMatrix{nan}, PreconditionError);
}

TEST_CASE("positivity at construction is strict") {
  CHECK_THROWS_AS(diag({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(diag({1.0, -1e-300}), DomainError);
  CHECK_NOTHROW(diag({1.0, 1e-300}));
}

TEST_CASE("eig_hermitian examples") {
  SUBCASE("diagonal input") {
    const EigenDecomposition e = eig_hermitian(HermitianMatrix::diagonal(std::vector<double>{2, 1}));
    CHECK(e.values(0) == 1.0);
    CHECK(e.values(1) == 2.0);
    CHECK(std::abs(e.vectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(0, 1)) == doctest::Approx(1.0));
  }
  SUBCASE("swap matrix") {
    const EigenDecomposition e = eig_hermitian(real_matrix({{0, 1}, {1, 0}}));
    CHECK(e.values(0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(e.values(1) == doctest::Approx(1.0).epsilon(1e-15));
    // Columns (1,-1)/sqrt2 and (1,1)/sqrt2 up to phase.
    CHECK(std::abs(e.vectors(0, 0) + e.vectors(1, 0)) < 1e-14);
    CHECK(std::abs(e.vectors(0, 1) - e.vectors(1, 1)) < 1e-14);
    CHECK(std::abs(e.vectors(0, 1)) == doctest::Approx(1 / std::sqrt(2.0)));
  }
}

TEST_CASE("eig_hermitian agrees with an independent solver and reconstructs") {
  Rng rng(11, "test-eig");
  for (int trial = 0; trial < 200; ++trial) {
    const int m = rng.uniform_int(1, 16);
    const HermitianMatrix h = random_hermitian(rng, m, rng.uniform(0.1, 100.0));
    const EigenDecomposition e = eig_hermitian(h);
    const Eigen::VectorXd ref = reference_eigenvalues(h.matrix());
    const double scale = std::max(1.0, op_norm(h.matrix()));
    for (int i = 0; i < m; ++i) {
      CHECK(std::abs(e.values(i) - ref(i)) <= 1e-12 * scale);
      if (i) CHECK(e.values(i - 1) <= e.values(i));
    }
    CHECK(op_norm(e.reconstruct() - h.matrix()) <= 1e-12 * scale);
    CHECK(op_norm(e.vectors.adjoint() * e.vectors - Matrix::Identity(m, m)) <= 1e-12);
    const RealVector values_only = eigenvalues_hermitian(h);
    CHECK((values_only - e.values).cwiseAbs().maxCoeff() <= 1e-12 * scale);
  }
}

TEST_CASE("eig_hermitian is deterministic and unitarily equivariant") {
  Rng rng(12, "test-eig-equivariance");
  for (int trial = 0; trial < 50; ++trial) {
    const int m = rng.uniform_int(2, 10);
    const HermitianMatrix h = random_hermitian(rng, m, 3.0);
    const Matrix u = random_unitary(rng, m);
    const EigenDecomposition a = eig_hermitian(h);
    const EigenDecomposition b = eig_hermitian(HermitianMatrix::symmetrized(u * h.matrix() * u.adjoint()));
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() <= 1e-11);
    const EigenDecomposition again = eig_hermitian(h);
    CHECK(again.values == a.values);
    CHECK(again.vectors == a.vectors);
  }
}

TEST_CASE("spectral functions") {
  const HpdMatrix half = apply_spectral_fn(diag({4, 9}), ScalarFunction::power(0.5));
  CHECK(rel_dist(half.matrix(), diag({2, 3}).matrix()) <= 1e-15);
  CHECK(op_norm(apply_spectral_fn(HermitianMatrix::identity(3), ScalarFunction::log()).matrix()) == 0.0);
  CHECK_THROWS_AS(apply_spectral_fn(real_matrix({{-1, 0}, {0, 1}}), ScalarFunction::log()), DomainError);
  CHECK_THROWS_AS(apply_spectral_fn(diag({1, 2}), ScalarFunction::log()), DomainError);

  Rng rng(13, "test-spectral");
  for (int trial = 0; trial < 100; ++trial) {
    const int m = rng.uniform_int(1, 12);
    const HpdMatrix a = random_hpd(rng, m, 0.01, 100.0);
    const double na = op_norm(a.matrix());
    const HpdMatrix r = a.sqrt();
    CHECK(op_norm(r.matrix() * r.matrix() - a.matrix()) <= 1e-10 * na);
    CHECK(rel_dist(r.matrix(), reference_fn(a.matrix(), [](double x) { return std::sqrt(x); })) <= 1e-11);
    const double p = rng.uniform(-2, 2), q = rng.uniform(-2, 2);
    CHECK(rel_dist(a.pow(p).pow(q).matrix(), a.pow(p * q).matrix()) <= 1e-9);
    CHECK(rel_dist(exp_hermitian(a.log()).matrix(), a.matrix()) <= 1e-10);
    CHECK(rel_dist(a.log().matrix(), reference_fn(a.matrix(), [](double x) { return std::log(x); })) <= 1e-11);
  }
}

TEST_CASE("exp(log A) for condition numbers up to 1e6") {
  Rng rng(14, "test-exp-log");
  for (int trial = 0; trial < 50; ++trial) {
    const HpdMatrix a = random_hpd(rng, rng.uniform_int(2, 10), 1e-3, 1e3);
    CHECK(rel_dist(exp_hermitian(a.log()).matrix(), a.matrix()) <= 1e-10);
  }
}

TEST_CASE("congruence") {
  const Matrix m = diag({2, 1}).matrix();
  CHECK(rel_dist(congruence(m, HpdMatrix::identity(2)).matrix(), diag({4, 1}).matrix()) == 0.0);
  CHECK_THROWS_AS(congruence(Matrix::Zero(2, 2), HpdMatrix::identity(2)), DomainError);

  Rng rng(15, "test-congruence");
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = rng.uniform_int(2, 8);
    const HpdMatrix a = random_hpd(rng, dim, 0.2, 5);
    const Matrix u = random_unitary(rng, dim);
    const HpdMatrix c = congruence(u, a);
    CHECK((c.eig().values - a.eig().values).cwiseAbs().maxCoeff() <= 1e-11);
    const HpdMatrix g = congruence(random_invertible(rng, dim), a);
    CHECK(reference_min_eig(g.matrix()) > 0.0);
  }
}

TEST_CASE("operator norm and log det") {
  CHECK(operator_norm(HermitianMatrix::diagonal(std::vector<double>{-3, 2})) == 3.0);
  CHECK(operator_norm(HermitianMatrix::identity(4)) == 1.0);
  CHECK(log_det(HpdMatrix::identity(3)) == 0.0);
  CHECK(log_det(diag({1, 4})) == doctest::Approx(std::log(4.0)).epsilon(1e-15));

  Rng rng(16, "test-norm");
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = rng.uniform_int(2, 10);
    const HermitianMatrix h = random_hermitian(rng, dim, rng.uniform(0.5, 5));
    // Power iteration on H^2 as the oracle.
    const Matrix h2 = h.matrix() * h.matrix();
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(dim);
    for (int k = 0; k < 5000; ++k) v = (h2 * v).normalized();
    const double estimate = std::sqrt((v.adjoint() * h2 * v)(0).real());
    CHECK(std::abs(operator_norm(h) - estimate) <= 1e-8 * estimate);
    CHECK(operator_norm(-h) == operator_norm(h));
    const HermitianMatrix g = random_hermitian(rng, dim, 1.0);
    CHECK(operator_norm(h + g) <= operator_norm(h) + operator_norm(g) + 1e-11);

    const HpdMatrix a = random_hpd(rng, dim, 0.2, 5), b = random_hpd(rng, dim, 0.2, 5);
    const HpdMatrix aba(HermitianMatrix::symmetrized(a.matrix() * b.matrix() * a.matrix()));
    CHECK(std::abs(log_det(aba) - (2 * log_det(a) + log_det(b))) <= 1e-9);
  }
}

TEST_CASE("eigensolver accuracy at high condition number") {
  Rng rng(17, "test-eig-cond");
  for (int trial = 0; trial < 100; ++trial) {
    const int m = rng.uniform_int(2, 16);
    const HpdMatrix a = random_hpd(rng, m, 1e-8, 1.0);
    const EigenDecomposition e = eig_hermitian(a.hermitian());
    CHECK(op_norm(e.reconstruct() - a.matrix()) <= 1e-12 * std::max(1.0, op_norm(a.matrix())));
    CHECK(op_norm(e.vectors.adjoint() * e.vectors - Matrix::Identity(m, m)) <= 1e-12);
  }
}
