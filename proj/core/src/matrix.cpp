#include "nvne/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace nvne {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", x);
  return buf;
}

}  // namespace

double frobenius_norm(const CMatrix& m) { return m.norm(); }

double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).norm();
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw ValidationError("commutator: dimension mismatch (" +
                          std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()) + ")");
  return a * b - b * a;
}

CVector canonical_phase(const CVector& v) {
  const double scale = v.norm();
  if (scale == 0.0) return v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > 1e-12 * scale) {
      const Complex phase = std::conj(v(i)) / a;
      return phase * v;
    }
  }
  return v;
}

HermitianMatrix HermitianMatrix::validated(CMatrix m) {
  if (m.rows() != m.cols())
    throw ValidationError("HermitianMatrix: matrix not square");
  if (!all_finite(m))
    throw ValidationError("HermitianMatrix: non-finite entries");
  const double defect = hermiticity_defect(m);
  const double tol = 1e-12 * std::max(1.0, m.norm());
  if (defect > tol)
    throw ValidationError("HermitianMatrix: hermiticity defect " +
                          fmt(defect) + " exceeds " + fmt(tol));
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::symmetrized(const CMatrix& m) {
  if (m.rows() != m.cols())
    throw ValidationError("HermitianMatrix: matrix not square");
  CMatrix h = 0.5 * (m + m.adjoint());
  if (!all_finite(h))
    throw ValidationError("HermitianMatrix: non-finite entries");
  return HermitianMatrix(std::move(h));
}

std::string DensityCheck::describe() const {
  if (violations.empty()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].invariant << ": measured " << fmt(violations[i].measured)
       << " (tolerance " << fmt(violations[i].tolerance) << ")";
    if (!violations[i].detail.empty()) os << " [" << violations[i].detail << "]";
  }
  return os.str();
}

DensityCheck DensityMatrix::validate(const CMatrix& m) {
  DensityCheck check;
  if (m.rows() != m.cols() || !all_finite(m)) {
    check.violations.push_back({"finite square matrix", 0.0, 0.0,
                                "non-square or non-finite input"});
    return check;
  }
  const double defect = hermiticity_defect(m);
  const double htol = 1e-12 * std::max(1.0, m.norm());
  if (defect > htol)
    check.violations.push_back({"hermiticity", defect, htol, ""});

  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err > 1e-12)
    check.violations.push_back({"unit trace", trace_err, 1e-12,
                                "|Tr - 1| = " + fmt(trace_err)});

  // Positivity is judged on the symmetrized part so a tiny hermiticity
  // defect does not also masquerade as an eigenvalue problem.
  const Eigen::VectorXd evals = hermitian_eigenvalues(m);
  const double min_eig = evals.minCoeff();
  if (min_eig < -1e-12)
    check.violations.push_back({"positive semidefinite", min_eig, -1e-12,
                                "min eigenvalue " + fmt(min_eig)});

  if (check.violations.empty())
    check.value = DensityMatrix(HermitianMatrix::symmetrized(m));
  return check;
}

DensityMatrix DensityMatrix::validated(const CMatrix& m) {
  DensityCheck check = validate(m);
  if (!check.ok())
    throw ValidationError("DensityMatrix: " + check.describe());
  return *check.value;
}

CMatrix SpectralData::reconstruct() const {
  const Eigen::Index n = projectors.empty() ? 0 : projectors[0].rows();
  CMatrix out = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < size(); ++i)
    out += eigenvalues[i] * projectors[i];
  return out;
}

EigenPairs eig_vectors(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix());
  if (solver.info() != Eigen::Success)
    throw ValidationError("eig_hermitian: eigensolver failed to converge");
  EigenPairs out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();
  for (Eigen::Index j = 0; j < out.vectors.cols(); ++j)
    out.vectors.col(j) = canonical_phase(out.vectors.col(j));
  return out;
}

SpectralData eig_hermitian(const HermitianMatrix& m) {
  EigenPairs pairs = eig_vectors(m);
  SpectralData s;
  const Eigen::Index n = pairs.values.size();
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index j = i + 1;
    while (j < n && pairs.values(j) - pairs.values(j - 1) < kDegeneracyGap) ++j;
    CMatrix p = CMatrix::Zero(n, n);
    double sum = 0.0;
    for (Eigen::Index k = i; k < j; ++k) {
      p += pairs.vectors.col(k) * pairs.vectors.col(k).adjoint();
      sum += pairs.values(k);
    }
    s.eigenvalues.push_back(sum / static_cast<double>(j - i));
    s.projectors.push_back(0.5 * (p + p.adjoint()));
    i = j;
  }
  return s;
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& m) {
  CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ValidationError("hermitian_eigenvalues: eigensolver failed");
  return solver.eigenvalues();
}

CMatrix unitary_exp(const HermitianMatrix& h, Complex exponent_scale) {
  EigenPairs pairs = eig_vectors(h);
  const Eigen::Index n = pairs.values.size();
  CMatrix out = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    out += std::exp(exponent_scale * pairs.values(k)) *
           (pairs.vectors.col(k) * pairs.vectors.col(k).adjoint());
  return out;
}

}  // namespace nvne
