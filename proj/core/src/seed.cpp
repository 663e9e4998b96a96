#include "nvne/seed.hpp"

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

// Shared tail of both builders: eigensystem of the block, Lax eigenvector,
// and the residual checks that define a valid seed.
SeedSolution finish_seed(const CMatrix& rho0_mat,
                         std::array<double, 3> h_work,
                         std::array<double, 3> h_raw, double shift,
                         Complex mu, Complex z_mu, double rho_offdiag,
                         std::vector<std::string> warnings) {
  DensityMatrix rho0 = DensityMatrix::validated(rho0_mat);

  // lambda_3 = z_mu + mu*h3 must be real for the third Lax component.
  const Complex lambda3_c = z_mu + mu * h_work[2];
  if (std::abs(lambda3_c.imag()) > 1e-10)
    throw ValidationError(
        "seed: Im(z_mu + mu*h3) = " + fmt(lambda3_c.imag()) +
        " exceeds 1e-10; third Lax component has no real eigenvalue");

  SeedSolution seed{rho0,
                    h_work,
                    h_raw,
                    shift,
                    mu,
                    z_mu,
                    {},
                    {},
                    CVector(),
                    rho_offdiag,
                    std::move(warnings)};

  // Two-level block eigensystem (ascending).
  const CMatrix block = rho0_mat.topLeftCorner(2, 2);
  EigenPairs pairs = eig_vectors(HermitianMatrix::validated(block));
  seed.lambda = {pairs.values(0), pairs.values(1), rho0_mat(2, 2).real()};
  for (int i = 0; i < 2; ++i) {
    CVector v = CVector::Zero(3);
    v.head(2) = pairs.vectors.col(i);
    seed.omega[i] = canonical_phase(v);
  }
  CVector e3 = CVector::Zero(3);
  e3(2) = 1.0;
  seed.omega[2] = e3;

  // Lax eigenvector of the block: null direction of (block - mu*H1 - z_mu).
  // With varrho real this is (varrho, -i*beta*(h3 - h1)) for every seed here.
  const double beta = mu.imag();
  const double u = h_work[2] - h_work[0];
  CVector phi = CVector::Zero(3);
  phi(0) = Complex(rho_offdiag, 0.0);
  phi(1) = Complex(0.0, -beta * u);
  phi /= phi.norm();
  seed.phi1 = canonical_phase(phi);

  const CMatrix pencil = rho0_mat - mu * seed.working_hamiltonian();
  const double res_phi = (pencil * seed.phi1 - z_mu * seed.phi1).norm();
  const double res_w3 = (pencil * e3 - z_mu * e3).norm();
  if (res_phi > 1e-10 || res_w3 > 1e-10)
    throw ValidationError(
        "seed: (rho(0) - mu*H) eigenvalue residuals " + fmt(res_phi) + ", " +
        fmt(res_w3) + " exceed 1e-10; construction inconsistent");
  return seed;
}

}  // namespace

double alpha_lambda(const Nonlinearity& f, double lambda1, double lambda2) {
  const double scale =
      std::max({1.0, std::abs(lambda1), std::abs(lambda2)});
  if (std::abs(lambda1 - lambda2) <= 1e-14 * scale)
    throw ValidationError("alpha_lambda: degenerate eigenvalue pair " +
                          fmt(lambda1) + ", " + fmt(lambda2));
  return (f.eval(lambda1) - f.eval(lambda2)) / (lambda1 - lambda2);
}

CMatrix SeedSolution::projector(int i) const {
  return omega[i] * omega[i].adjoint();
}

CMatrix SeedSolution::transition(int i, int j) const {
  return omega[i] * omega[j].adjoint();
}

CMatrix SeedSolution::working_hamiltonian() const {
  CMatrix h = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) h(i, i) = h_work[i];
  return h;
}

SpectralData SeedSolution::spectral() const {
  return eig_hermitian(rho0.hermitian());
}

double SeedSolution::alpha_of_lambda(const Nonlinearity& f) const {
  return nvne::alpha_lambda(f, lambda[0], lambda[1]);
}

SeedSolution build_equispaced_seed(double B, double alpha, double beta) {
  if (B == 0.0)
    throw ValidationError("equispaced seed: B must be nonzero");
  if (beta == 0.0)
    throw ValidationError(
        "equispaced seed: beta = Im mu must be nonzero "
        "(the Darboux transformation is trivial for real mu)");

  const double r1 = 1.0 / 3.0 - alpha * B;
  const double r2 = 1.0 / 3.0 + alpha * B;
  const double r3 = 1.0 / 3.0;
  const double coupling = std::abs(beta * B);  // |varrho'|

  std::vector<Violation> bad;
  if (r1 <= 0.0) bad.push_back({"varrho_1 > 0", r1, 0.0, ""});
  if (r2 <= 0.0) bad.push_back({"varrho_2 > 0", r2, 0.0, ""});
  if (r1 * r2 <= coupling * coupling)
    bad.push_back({"varrho_1*varrho_2 > |varrho|^2", r1 * r2 - coupling * coupling,
                   0.0, ""});
  if (!bad.empty()) {
    std::ostringstream os;
    os << "equispaced seed: rho(0) not positive:";
    for (const auto& v : bad)
      os << " " << v.invariant << " fails (measured " << fmt(v.measured) << ");";
    throw ValidationError(os.str());
  }

  const Complex mu(alpha, beta);
  const double mu2B2 = std::norm(mu) * B * B;
  if (mu2B2 >= 1.0 / 3.0)
    throw ValidationError("equispaced seed: |mu|^2 B^2 = " + fmt(mu2B2) +
                          " violates |mu|^2 B^2 < 1/3");

  CMatrix rho0 = CMatrix::Zero(3, 3);
  rho0(0, 0) = r1;
  rho0(1, 1) = r2;
  rho0(2, 2) = r3;
  rho0(0, 1) = coupling;
  rho0(1, 0) = coupling;

  const std::array<double, 3> levels{B, 3.0 * B, 2.0 * B};
  const Complex z_mu = 1.0 / 3.0 - 2.0 * mu * B;
  return finish_seed(rho0, levels, levels, 0.0, mu, z_mu, coupling, {});
}

SeedSolution build_inhomogeneous_seed(double h1, double h2, double h3,
                                      double beta, double rho3) {
  if (beta == 0.0)
    throw ValidationError(
        "inhomogeneous seed: beta = Im mu must be nonzero "
        "(the Darboux transformation is trivial for real mu)");

  const double u = h3 - h1;
  const double w = h2 - h3;
  if (u * w <= 0.0)
    throw ValidationError(
        "inhomogeneous seed: h3 must lie strictly between h1 and h2; "
        "|varrho|^2 = beta^2*(h1-h3)*(h3-h2) = " +
        fmt(beta * beta * u * w) + " is not positive");

  const double denom = h1 + h2 - 2.0 * h3;
  const double level_scale =
      std::max({1.0, std::abs(h1), std::abs(h2), std::abs(h3)});
  double alpha = 0.0;
  if (std::abs(denom) > 1e-14 * level_scale) {
    alpha = (1.0 - 3.0 * rho3) / denom;
  } else if (std::abs(1.0 - 3.0 * rho3) > 1e-14) {
    throw ValidationError(
        "inhomogeneous seed: h1 + h2 - 2*h3 = 0 forces rho3 = 1/3 "
        "(unit trace is otherwise unreachable); got rho3 = " +
        fmt(rho3));
  }

  const double r1 = rho3 + alpha * (h1 - h3);
  const double r2 = rho3 + alpha * (h2 - h3);
  const double coupling = std::abs(beta) * std::sqrt(u * w);

  std::vector<Violation> bad;
  if (r1 <= 0.0) bad.push_back({"varrho_1 > 0", r1, 0.0, ""});
  if (r2 <= 0.0) bad.push_back({"varrho_2 > 0", r2, 0.0, ""});
  if (rho3 <= 0.0) bad.push_back({"varrho_3 > 0", rho3, 0.0, ""});
  if (r1 * r2 <= coupling * coupling)
    bad.push_back({"varrho_1*varrho_2 > |varrho|^2",
                   r1 * r2 - coupling * coupling, 0.0, ""});
  if (!bad.empty()) {
    std::ostringstream os;
    os << "inhomogeneous seed: rho(0) not positive:";
    for (const auto& v : bad)
      os << " " << v.invariant << " fails (measured " << fmt(v.measured) << ");";
    throw ValidationError(os.str());
  }

  std::vector<std::string> warnings;
  const double sep = beta * beta * (h1 - h2) * (h1 - h2) -
                     4.0 * coupling * coupling;
  if (sep <= 0.0)
    warnings.push_back(
        "separation condition beta^2 (h1-h2)^2 > 4|varrho|^2 not strictly "
        "satisfied (margin " + fmt(sep) + "); block pencil eigenvalue is "
        "degenerate at z_mu");

  const double shift = 0.5 * (h1 + h2);
  const std::array<double, 3> h_raw{h1, h2, h3};
  const std::array<double, 3> h_work{h1 - shift, h2 - shift, h3 - shift};
  const Complex mu(alpha, beta);
  const Complex z_mu(rho3 + 0.5 * (1.0 - 3.0 * rho3), -beta * (h3 - shift));

  CMatrix rho0 = CMatrix::Zero(3, 3);
  rho0(0, 0) = r1;
  rho0(1, 1) = r2;
  rho0(2, 2) = rho3;
  rho0(0, 1) = coupling;
  rho0(1, 0) = coupling;
  return finish_seed(rho0, h_work, h_raw, shift, mu, z_mu, coupling,
                     std::move(warnings));
}

CVector lax_eigenvector(const SeedSolution& seed, Complex gamma1,
                        Complex gamma3) {
  if (gamma1 == Complex(0.0) && gamma3 == Complex(0.0))
    throw ValidationError("lax_eigenvector: (gamma1, gamma3) = (0, 0)");
  CVector phi0 = gamma1 * seed.phi1 + gamma3 * seed.omega[2];
  const CMatrix pencil =
      seed.rho0.matrix() - seed.mu * seed.working_hamiltonian();
  const double residual =
      (pencil * phi0 - seed.z_mu * phi0).norm() / phi0.norm();
  if (residual > 1e-10)
    throw ValidationError("lax_eigenvector: eigenvalue residual " +
                          fmt(residual) +
                          " exceeds 1e-10; seed construction inconsistent");
  return phi0;
}

DensityMatrix two_level_evolution(const DensityMatrix& rho0,
                                  const HermitianMatrix& h1,
                                  const Nonlinearity& f, double t) {
  if (rho0.dim() != 2 || h1.dim() != 2)
    throw ValidationError("two_level_evolution: expects 2x2 inputs");
  const Eigen::VectorXd evals = hermitian_eigenvalues(rho0.matrix());
  const double a = alpha_lambda(f, evals(0), evals(1));
  const CMatrix u = unitary_exp(h1, Complex(0.0, -a * t));
  return DensityMatrix::validated(u * rho0.matrix() * u.adjoint());
}

EmbeddedSeed embed_seed(const SeedSolution& seed, const HamiltonianSpec& full) {
  full.validate();
  const auto triple = full.working_triple();
  for (int i = 0; i < 3; ++i)
    if (std::abs(triple[i] - seed.h_raw[i]) >
        1e-12 * std::max(1.0, std::abs(seed.h_raw[i])))
      throw ValidationError(
          "embed_seed: selected levels do not match the seed levels");
  const Eigen::Index n = static_cast<Eigen::Index>(full.levels.size());
  CMatrix rho = CMatrix::Zero(n, n);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      rho(full.selected[a], full.selected[b]) = seed.rho0.matrix()(a, b);
  return {rho, full.full_matrix()};
}

}  // namespace nvne
