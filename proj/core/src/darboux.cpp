#include "nvne/darboux.hpp"

#include <cmath>
#include <cstdio>

namespace nvne {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", x);
  return buf;
}

Eigen::Matrix3cd exponents_at(const LaxSolution& lax, double t) {
  Eigen::Matrix3cd e;
  const Complex minus_i(0.0, -1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      e(i, j) = lax.a(i, j) * std::exp(minus_i * lax.b(i, j) * t);
  return e;
}

}  // namespace

std::array<Complex, 3> beta_of_lambda(const Nonlinearity& f,
                                      const SeedSolution& seed) {
  const double f3 = f.eval(seed.lambda[2]);
  const double alpha_l = seed.alpha_of_lambda(f);
  std::array<Complex, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = (f.eval(seed.lambda[i]) - f3) -
             alpha_l * (seed.lambda[i] - seed.z_mu);
  return out;
}

LaxSolution make_lax(const SeedSolution& seed, const Nonlinearity& f,
                     Complex gamma1, Complex gamma3) {
  LaxSolution lax{seed, f, gamma1, gamma3,
                  lax_eigenvector(seed, gamma1, gamma3)};
  lax.alpha_lam = seed.alpha_of_lambda(f);
  lax.beta = beta_of_lambda(f, seed);

  if (std::abs(lax.beta[0] - lax.beta[1]) > 1e-12)
    throw ValidationError("make_lax: beta(lambda_1) != beta(lambda_2), gap " +
                          fmt(std::abs(lax.beta[0] - lax.beta[1])));

  const Complex mu = seed.mu;
  if (mu.imag() == 0.0)
    throw ValidationError("make_lax: mu is real; transformation is trivial");

  for (int i = 0; i < 3; ++i) {
    const Complex wi = seed.omega[i].dot(lax.psi0);  // <w_i|psi0>
    for (int j = 0; j < 3; ++j) {
      const Complex wj = seed.omega[j].dot(lax.psi0);
      lax.a(i, j) = wi * std::conj(wj);
      lax.b(i, j) = lax.beta[i] / mu - std::conj(lax.beta[j] / mu);
    }
  }
  lax.b_block = lax.b(0, 0);

  if (std::abs(lax.b(2, 2)) > 1e-12)
    throw ValidationError("make_lax: b_33 = " + fmt(std::abs(lax.b(2, 2))) +
                          " is not zero");
  if (std::abs(lax.b_block.real()) > 1e-12)
    throw ValidationError("make_lax: Re b = " + fmt(lax.b_block.real()) +
                          "; block exponent must be purely imaginary");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(lax.b(i, j) - lax.b_block) > 1e-12)
        throw ValidationError("make_lax: block exponents b_ij not constant");
  return lax;
}

CVector evolve_psi(const LaxSolution& lax, double t) {
  if (lax.seed.mu == Complex(0.0))
    throw ValidationError("evolve_psi: mu = 0 is invalid");
  const Complex minus_i(0.0, -1.0);
  CVector out = CVector::Zero(3);
  for (int i = 0; i < 3; ++i) {
    const Complex coeff = lax.seed.omega[i].dot(lax.psi0);
    out += std::exp(minus_i * lax.beta[i] / lax.seed.mu * t) * coeff *
           lax.seed.omega[i];
  }
  return out;
}

double f_denominator(const LaxSolution& lax, double t) {
  const Complex minus_i(0.0, -1.0);
  const Complex f = std::exp(minus_i * lax.b_block * t) *
                        (lax.a(0, 0) + lax.a(1, 1)) +
                    lax.a(2, 2);
  if (std::abs(f.imag()) > 1e-12 * std::max(1.0, std::abs(f.real())))
    throw ValidationError("F(t): unexpected imaginary part " +
                          fmt(f.imag()));
  if (std::abs(f.real()) < 1e-14)
    throw ValidationError("F(t) = " + fmt(f.real()) +
                          " is singular at t = " + fmt(t));
  return f.real();
}

CMatrix p_int(const LaxSolution& lax, double t) {
  const double f = f_denominator(lax, t);
  const Eigen::Matrix3cd e = exponents_at(lax, t);
  CMatrix p = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      p += e(i, j) * lax.seed.transition(i, j);
  return p / f;
}

CMatrix p_int_outer(const LaxSolution& lax, double t) {
  const CVector psi = evolve_psi(lax, t);
  return (psi * psi.adjoint()) / psi.squaredNorm();
}

DensityMatrix darboux_sandwich(const DensityMatrix& rho_t, Complex mu,
                               const CMatrix& p) {
  if (mu.imag() == 0.0) return rho_t;  // coefficient mu - conj(mu) vanishes
  const Complex c = (mu - std::conj(mu)) / std::conj(mu);
  const CMatrix left =
      CMatrix::Identity(p.rows(), p.cols()) + c * p;
  return DensityMatrix::validated(left * rho_t.matrix() * left.adjoint());
}

CMatrix dress(const CMatrix& rho_int, const std::array<double, 3>& levels,
              double alpha_lam, double t) {
  const Complex minus_i(0.0, -1.0);
  CVector phases(3);
  for (int i = 0; i < 3; ++i)
    phases(i) = std::exp(minus_i * alpha_lam * levels[i] * t);
  return phases.asDiagonal() * rho_int *
         phases.conjugate().asDiagonal();
}

CMatrix DarbouxOutput::rho_int(double t) const {
  const Complex mu = lax_.seed.mu;
  const Complex c = (mu - std::conj(mu)) / std::conj(mu);
  const CMatrix left = CMatrix::Identity(3, 3) + c * p_int(lax_, t);
  return left * lax_.seed.rho0.matrix() * left.adjoint();
}

CMatrix DarbouxOutput::rho_int_closed(double t, bool corrected) const {
  const Complex mu = lax_.seed.mu;
  const Complex delta = mu - std::conj(mu);
  const double f = f_denominator(lax_, t);
  const Eigen::Matrix3cd e = exponents_at(lax_, t);
  const auto& l = lax_.seed.lambda;

  CMatrix out = lax_.seed.rho0.matrix();
  const Complex prefactor = delta / (f * f * std::norm(mu));
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    // Diagonal coefficient; the printed form has lambda_1 where the index
    // pattern requires lambda_i, kept reachable for comparison.
    const double first = corrected ? l[i] : l[0];
    const Complex ci =
        delta * e(i, i) * ((l[i] - l[j]) * e(j, j) + (first - l[k]) * e(k, k));
    out += prefactor * ci * lax_.seed.projector(i);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      const Complex cij =
          e(i, j) *
          ((l[j] - l[i]) * (mu * e(i, i) + std::conj(mu) * e(j, j)) +
           ((std::conj(mu) - mu) * l[k] + mu * l[j] - std::conj(mu) * l[i]) *
               e(k, k));
      out += prefactor * cij * lax_.seed.transition(i, j);
    }
  return out;
}

CMatrix DarbouxOutput::rho(double t) const {
  return dress(rho_int(t), lax_.seed.h_work, lax_.alpha_lam, t);
}

}  // namespace nvne
