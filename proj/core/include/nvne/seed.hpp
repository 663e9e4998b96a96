#ifndef NVNE_SEED_HPP
#define NVNE_SEED_HPP

#include <array>
#include <string>
#include <vector>

#include "nvne/hamiltonian.hpp"
#include "nvne/matrix.hpp"
#include "nvne/nonlinearity.hpp"

namespace nvne {

/// Difference quotient (f(l1) - f(l2)) / (l1 - l2): the rotating-frame rate
/// of the two-level block. Throws on a degenerate pair.
double alpha_lambda(const Nonlinearity& f, double lambda1, double lambda2);

/// Exactly solvable three-level seed of the nonlinear von Neumann equation:
/// a density matrix whose (rho(0) - mu*H) has the eigenvalue z_mu with a
/// two-dimensional eigenspace, one eigenvector inside the two-level block
/// (phi1) and one along the third axis (omega(2)).
///
/// Construction-order indexing throughout: index 0 and 1 are the lower and
/// upper eigenvalue of the two-level block of rho(0), index 2 is the third
/// level. The working Hamiltonian levels carry whatever uniform shift the
/// constructor chose; shift_applied records it (raw = working + shift).
struct SeedSolution {
  DensityMatrix rho0;               // 3x3, construction basis
  std::array<double, 3> h_work;     // Lax Hamiltonian diagonal
  std::array<double, 3> h_raw;      // levels as given to the builder
  double shift_applied = 0.0;
  Complex mu;                       // alpha + i beta, Im mu != 0
  Complex z_mu;                     // Lax eigenvalue for h_work
  std::array<double, 3> lambda;     // eigenvalues of rho0, construction order
  std::array<CVector, 3> omega;     // unit eigenvectors, construction order
  CVector phi1;                     // block Lax eigenvector, unit norm
  double rho_offdiag = 0.0;         // |varrho|, the block coupling magnitude
  std::vector<std::string> warnings;

  CMatrix projector(int i) const;               // P_i(0)
  CMatrix transition(int i, int j) const;       // P_ij(0)
  CMatrix working_hamiltonian() const;          // diag(h_work)
  SpectralData spectral() const;                // ascending, merged
  double alpha_of_lambda(const Nonlinearity& f) const;

  double alpha() const { return mu.real(); }
  double beta() const { return mu.imag(); }
};

/// Equally-spaced spectrum seed: H = diag(B, 3B, 2B), rho(0) diagonal
/// (1/3 - aB, 1/3 + aB, 1/3) with block coupling |varrho'| = |b|B.
/// z_mu = 1/3 - 2*mu*B.
SeedSolution build_equispaced_seed(double B, double alpha, double beta);

/// Arbitrary-spectrum seed for levels (h1, h2, h3) with h3 strictly between
/// h1 and h2. rho3 is the free third eigenvalue; alpha is derived from the
/// unit-trace condition. Works in the frame shifted by (h1+h2)/2.
SeedSolution build_inhomogeneous_seed(double h1, double h2, double h3,
                                      double beta, double rho3);

/// gamma1 * phi1(0) + gamma3 * omega3(0): an eigenvector of
/// (rho(0) - mu*H) at z_mu for any (gamma1, gamma3) != (0, 0).
CVector lax_eigenvector(const SeedSolution& seed, Complex gamma1,
                        Complex gamma3);

/// Unitary two-level evolution rho(t) = e^{-i a(l) H1 t} rho(0) e^{+...}.
DensityMatrix two_level_evolution(const DensityMatrix& rho0,
                                  const HermitianMatrix& h1,
                                  const Nonlinearity& f, double t);

/// Direct sum with an untouched diagonal rest: places the 3x3 seed into the
/// selected levels of a larger diagonal Hamiltonian, zero elsewhere.
struct EmbeddedSeed {
  CMatrix rho0;
  CMatrix hamiltonian;
};
EmbeddedSeed embed_seed(const SeedSolution& seed, const HamiltonianSpec& full);

}  // namespace nvne

#endif  // NVNE_SEED_HPP
