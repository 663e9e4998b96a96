#ifndef NVNE_MATRIX_HPP
#define NVNE_MATRIX_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nvne {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Thrown when a typed-matrix invariant or an operation precondition fails.
/// The message lists every violated invariant with its measured magnitude.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// One violated invariant: name, measured magnitude, allowed tolerance.
struct Violation {
  std::string invariant;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

double frobenius_norm(const CMatrix& m);

/// ||M - M^dag||_F
double hermiticity_defect(const CMatrix& m);

bool all_finite(const CMatrix& m);

/// AB - BA. Throws ValidationError on dimension mismatch.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Rotates v by a global phase so its first component of magnitude
/// > 1e-12*||v|| is real and positive. Makes eigenvector output
/// reproducible across runs.
CVector canonical_phase(const CVector& v);

/// Hermitian matrix: ||M - M^dag||_F <= 1e-12 * max(1, ||M||_F).
class HermitianMatrix {
 public:
  static HermitianMatrix validated(CMatrix m);
  /// (M + M^dag)/2, for use after operations that are Hermitian up to roundoff.
  static HermitianMatrix symmetrized(const CMatrix& m);

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  explicit HermitianMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

class DensityMatrix;

/// Diagnostic result of validate_density: every violated invariant is
/// listed; nothing throws.
struct DensityCheck {
  std::vector<Violation> violations;
  std::optional<DensityMatrix> value;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Density matrix: Hermitian, |Tr - 1| <= 1e-12, eigenvalues >= -1e-12.
class DensityMatrix {
 public:
  static DensityCheck validate(const CMatrix& m);
  /// Throwing variant; message lists all violations.
  static DensityMatrix validated(const CMatrix& m);

  const CMatrix& matrix() const { return m_.matrix(); }
  const HermitianMatrix& hermitian() const { return m_; }
  Eigen::Index dim() const { return m_.dim(); }

 private:
  explicit DensityMatrix(HermitianMatrix m) : m_(std::move(m)) {}
  HermitianMatrix m_;
  friend struct DensityCheck;
};

/// Spectral decomposition of a Hermitian matrix: ascending eigenvalues with
/// orthogonal projectors. Eigenvalues closer than the degeneracy gap are
/// merged into a single projector.
struct SpectralData {
  std::vector<double> eigenvalues;   // ascending, one per distinct eigenvalue
  std::vector<CMatrix> projectors;   // same length; sum to identity

  CMatrix reconstruct() const;
  std::size_t size() const { return eigenvalues.size(); }
};

/// Degeneracy threshold for merging eigenvalues into one projector.
inline constexpr double kDegeneracyGap = 1e-10;

/// Eigendecomposition of a Hermitian matrix into SpectralData.
/// Eigenvalues ascending; gaps below kDegeneracyGap merged.
SpectralData eig_hermitian(const HermitianMatrix& m);

/// Eigenvalues and phase-canonical eigenvectors (columns), ascending, without
/// degeneracy merging. For callers that need the vectors themselves.
struct EigenPairs {
  Eigen::VectorXd values;
  CMatrix vectors;
};
EigenPairs eig_vectors(const HermitianMatrix& m);

/// f applied to an operator through its spectral decomposition:
/// sum_i f(lambda_i) P_i.
template <typename F>
HermitianMatrix apply_spectral_function(F&& f, const SpectralData& s) {
  const Eigen::Index n = s.projectors.empty() ? 0 : s.projectors[0].rows();
  CMatrix out = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < s.size(); ++i)
    out += f(s.eigenvalues[i]) * s.projectors[i];
  return HermitianMatrix::symmetrized(out);
}

/// Sorted eigenvalues of a Hermitian-up-to-roundoff matrix.
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& m);

/// exp(i s H) for Hermitian H, via its eigendecomposition.
CMatrix unitary_exp(const HermitianMatrix& h, Complex exponent_scale);

}  // namespace nvne

#endif  // NVNE_MATRIX_HPP
