#ifndef NVNE_DARBOUX_HPP
#define NVNE_DARBOUX_HPP

#include <array>

#include "nvne/seed.hpp"

namespace nvne {

/// beta(lambda_i) = f'(lambda_i) - alpha(lambda) * (lambda_i - z_mu), with
/// f'(x) = f(x) - f(lambda_3). Construction-order indexing.
std::array<Complex, 3> beta_of_lambda(const Nonlinearity& f,
                                      const SeedSolution& seed);

/// Closed-form time evolution of the Lax eigenvector and the coefficient
/// data of the Darboux projector: a_ij = <w_i|psi(0)> conj(<w_j|psi(0)>),
/// b_ij = beta(l_i)/mu - conj(beta(l_j))/conj(mu).
///
/// Invariants checked on construction: beta(l1) = beta(l2), b_33 = 0, and
/// the common block exponent b is purely imaginary (all within 1e-12).
struct LaxSolution {
  SeedSolution seed;
  Nonlinearity f;
  Complex gamma1, gamma3;
  CVector psi0;
  double alpha_lam = 0.0;             // alpha(lambda)
  std::array<Complex, 3> beta{};      // beta(lambda_i)
  Eigen::Matrix3cd a;                 // a_ij
  Eigen::Matrix3cd b;                 // b_ij
  Complex b_block;                    // b_11 = b_22 = b_12 = b_21
};

LaxSolution make_lax(const SeedSolution& seed, const Nonlinearity& f,
                     Complex gamma1, Complex gamma3);

/// psi(t) = sum_i e^{-i beta(l_i) t / mu} P_i(0) psi(0). Non-unitary.
CVector evolve_psi(const LaxSolution& lax, double t);

/// F(t) = e^{-i b t} (a_11 + a_22) + a_33 = |psi(t)|^2. Real and positive;
/// throws if |F| < 1e-14.
double f_denominator(const LaxSolution& lax, double t);

/// Rank-one Darboux projector P_int(t) = sum_ij a_ij e^{-i b_ij t} P_ij / F.
CMatrix p_int(const LaxSolution& lax, double t);

/// Oracle form |psi(t)><psi(t)| / <psi(t)|psi(t)>.
CMatrix p_int_outer(const LaxSolution& lax, double t);

/// (1 + (mu - conj mu)/conj(mu) P) rho (1 + (conj mu - mu)/mu P).
/// Isospectral; exactly the identity for real mu.
DensityMatrix darboux_sandwich(const DensityMatrix& rho_t, Complex mu,
                               const CMatrix& p);

/// Unitary dressing V rho V* with V = e^{-i alpha(lambda) H t}, H diagonal.
CMatrix dress(const CMatrix& rho_int, const std::array<double, 3>& levels,
              double alpha_lam, double t);

/// Transformed solution sampler. rho_int() is the sandwich path (ground
/// truth); rho_int_closed() is the explicit coefficient formula validated
/// against it. All samplers are pure and safe to call concurrently.
class DarbouxOutput {
 public:
  explicit DarbouxOutput(LaxSolution lax) : lax_(std::move(lax)) {}

  const LaxSolution& lax() const { return lax_; }

  CVector psi(double t) const { return evolve_psi(lax_, t); }
  double F(double t) const { return f_denominator(lax_, t); }
  CMatrix projector(double t) const { return p_int(lax_, t); }

  /// rho_int[1](t), sandwich path.
  CMatrix rho_int(double t) const;
  /// rho_int[1](t) through the coefficient formula; corrected = false keeps
  /// the diagonal coefficient exactly as printed, for comparison.
  CMatrix rho_int_closed(double t, bool corrected = true) const;
  /// rho[1](t) = V rho_int[1](t) V*.
  CMatrix rho(double t) const;

  DensityMatrix rho_int_density(double t) const {
    return DensityMatrix::validated(rho_int(t));
  }
  DensityMatrix rho_density(double t) const {
    return DensityMatrix::validated(rho(t));
  }

 private:
  LaxSolution lax_;
};

}  // namespace nvne

#endif  // NVNE_DARBOUX_HPP
