#ifndef NVNE_HAMILTONIAN_HPP
#define NVNE_HAMILTONIAN_HPP

#include <array>
#include <vector>

#include "nvne/matrix.hpp"

namespace nvne {

/// Diagonal Hamiltonian specification: eigenvalues plus an optional uniform
/// shift (the dynamics is invariant under H -> H + C*1), and the three level
/// indices selected as the working subspace of a larger spectrum.
struct HamiltonianSpec {
  std::vector<double> levels;       // eigenvalues h_1..h_n, construction order
  std::array<int, 3> selected{0, 1, 2};
  double shift = 0.0;

  static HamiltonianSpec three_level(double h1, double h2, double h3,
                                     double shift = 0.0);
  /// diag(B, 3B, 2B) + A*1: the equally-spaced three-level form.
  static HamiltonianSpec equispaced(double B, double A = 0.0);
  /// Select three levels (i, j, k) of a larger diagonal spectrum.
  static HamiltonianSpec select(std::vector<double> levels,
                                std::array<int, 3> selected,
                                double shift = 0.0);

  /// The three selected eigenvalues, shift included, in construction order.
  std::array<double, 3> working_triple() const;

  /// Full diagonal matrix over all levels (shift included).
  CMatrix full_matrix() const;
  /// 3x3 diagonal matrix of the working triple.
  CMatrix working_matrix() const;

  void validate() const;  // throws ValidationError on bad selection
};

/// Neighbouring hydrogen-like levels (-B/n^2, -B/(n+2)^2, -B/(n+1)^2);
/// the third always lies strictly between the first two.
std::array<double, 3> hydrogen_levels(int n, double B);

/// Permutation p such that triple[p[0]] <= triple[p[1]] <= triple[p[2]].
std::array<int, 3> ascending_permutation(const std::array<double, 3>& triple);

}  // namespace nvne

#endif  // NVNE_HAMILTONIAN_HPP
