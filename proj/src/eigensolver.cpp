#include "meanlab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "meanlab/errors.hpp"

namespace meanlab {
namespace {

constexpr double kOffDiagonalThreshold = 1e-14;
constexpr int kMaxSweeps = 30;

// Column-major scratch copy; Eigen's indexing overhead shows up at m <= 8.
struct Work {
  int m;
  std::vector<Complex> a;
  Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(j) * m + i]; }
};

double off_diagonal_norm(Work& w) {
  double s = 0.0;
  for (int j = 0; j < w.m; ++j)
    for (int i = 0; i < w.m; ++i)
      if (i != j) s += std::norm(w(i, j));
  return std::sqrt(s);
}

void jacobi(const HermitianMatrix& h, RealVector& values, Matrix* vectors) {
  const int m = h.dim();
  Work a{m, std::vector<Complex>(h.matrix().data(), h.matrix().data() + m * m)};
  Work v{m, {}};
  if (vectors) {
    v.a.assign(static_cast<std::size_t>(m) * m, Complex(0.0));
    for (int i = 0; i < m; ++i) v(i, i) = 1.0;
  }

  const double threshold = kOffDiagonalThreshold * h.matrix().norm();
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (int p = 0; p < m - 1; ++p) {
      for (int q = p + 1; q < m; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase-reduce to a real symmetric 2x2, then the classical rotation.
        const Complex e = apq / mag;
        const Complex ec = std::conj(e);
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- A J with J = [[c, s], [-s conj(e), c conj(e)]] on (p, q).
        for (int k = 0; k < m; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * ec * akq;
          a(k, q) = s * akp + c * ec * akq;
        }
        // A <- J* A.
        for (int k = 0; k < m; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * e * aqk;
          a(q, k) = s * apk + c * e * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;

        if (vectors) {
          for (int k = 0; k < m; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s * ec * vkq;
            v(k, q) = s * vkp + c * ec * vkq;
          }
        }
      }
    }
  }
  if (!converged)
    throw NumericalFailure("eig_hermitian: Jacobi did not converge within 30 sweeps");

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  values.resize(m);
  for (int k = 0; k < m; ++k) values(k) = a(order[k], order[k]).real();
  if (vectors) {
    vectors->resize(m, m);
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i) (*vectors)(i, k) = v(i, order[k]);
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianMatrix& h) {
  EigenDecomposition out;
  jacobi(h, out.values, &out.vectors);
  return out;
}

RealVector eigenvalues_hermitian(const HermitianMatrix& h) {
  RealVector values;
  jacobi(h, values, nullptr);
  return values;
}

}  // namespace meanlab
