#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace meanlab {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::VectorXd;

/// Largest supported matrix dimension.
inline constexpr int kMaxDim = 64;

/// Relative asymmetry (against max |entry|) absorbed by symmetrization.
inline constexpr double kHermitianSlack = 1e-13;

/// Dense m x m Hermitian matrix. Entries are exactly Hermitian after
/// construction: H(i,j) == conj(H(j,i)) bit for bit, real diagonal.
class HermitianMatrix {
 public:
  /// Validates |H - H*| <= 1e-13 max|H_ij| and stores (H + H*)/2.
  /// Throws PreconditionError on worse asymmetry, non-square, non-finite
  /// or empty input.
  explicit HermitianMatrix(const Matrix& entries);

  /// Trusted path for results that are Hermitian up to rounding
  /// (products like X A X*): symmetrizes without the asymmetry check.
  static HermitianMatrix symmetrized(const Matrix& entries);

  static HermitianMatrix identity(int dim);
  static HermitianMatrix zero(int dim);
  static HermitianMatrix diagonal(std::span<const double> values);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double c, const HermitianMatrix& a);
  HermitianMatrix operator-() const;

 private:
  struct Trusted {};
  HermitianMatrix(Trusted, Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Ascending eigenvalues with unitary eigenvectors as columns.
struct EigenDecomposition {
  RealVector values;
  Matrix vectors;

  int dim() const { return static_cast<int>(values.size()); }
  /// V diag(values) V*.
  Matrix reconstruct() const;
};

/// Hermitian positive definite matrix. Carries the eigendecomposition it
/// was validated with, so spectral functions never recompute it.
class HpdMatrix {
 public:
  /// Strict positivity: computed lambda_min must be > 0. Throws DomainError.
  explicit HpdMatrix(HermitianMatrix h);
  explicit HpdMatrix(const Matrix& entries) : HpdMatrix(HermitianMatrix(entries)) {}

  /// Builds V diag(values) V* from a known spectral pair. Values need not be
  /// sorted; throws DomainError if any value is not > 0.
  static HpdMatrix from_spectrum(const Matrix& vectors, const RealVector& values);

  static HpdMatrix identity(int dim);
  static HpdMatrix diagonal(std::span<const double> values);

  int dim() const { return h_.dim(); }
  const HermitianMatrix& hermitian() const { return h_; }
  const Matrix& matrix() const { return h_.matrix(); }
  const EigenDecomposition& eig() const { return eig_; }
  double min_eigenvalue() const { return eig_.values(0); }
  double max_eigenvalue() const { return eig_.values(eig_.values.size() - 1); }

  HpdMatrix pow(double p) const;
  HpdMatrix sqrt() const { return pow(0.5); }
  HpdMatrix inv_sqrt() const { return pow(-0.5); }
  HpdMatrix inverse() const { return pow(-1.0); }
  HermitianMatrix log() const;
  HpdMatrix scaled(double c) const;

  operator const HermitianMatrix&() const { return h_; }

 private:
  HpdMatrix(HermitianMatrix h, EigenDecomposition e) : h_(std::move(h)), eig_(std::move(e)) {}
  HermitianMatrix h_;
  EigenDecomposition eig_;
};

/// max |A_ij - B_ij| helper used by tests and I/O checks.
double max_abs_entry(const Matrix& m);

}  // namespace meanlab
