#include "nvne/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

namespace nvne {

HamiltonianSpec HamiltonianSpec::three_level(double h1, double h2, double h3,
                                             double shift) {
  HamiltonianSpec spec;
  spec.levels = {h1, h2, h3};
  spec.selected = {0, 1, 2};
  spec.shift = shift;
  spec.validate();
  return spec;
}

HamiltonianSpec HamiltonianSpec::equispaced(double B, double A) {
  return three_level(B, 3.0 * B, 2.0 * B, A);
}

HamiltonianSpec HamiltonianSpec::select(std::vector<double> levels,
                                        std::array<int, 3> selected,
                                        double shift) {
  HamiltonianSpec spec;
  spec.levels = std::move(levels);
  spec.selected = selected;
  spec.shift = shift;
  spec.validate();
  return spec;
}

void HamiltonianSpec::validate() const {
  const int n = static_cast<int>(levels.size());
  if (n < 3) throw ValidationError("HamiltonianSpec: needs at least 3 levels");
  for (double h : levels)
    if (!std::isfinite(h))
      throw ValidationError("HamiltonianSpec: non-finite level");
  for (int idx : selected)
    if (idx < 0 || idx >= n)
      throw ValidationError("HamiltonianSpec: selected index out of range");
  if (selected[0] == selected[1] || selected[0] == selected[2] ||
      selected[1] == selected[2])
    throw ValidationError("HamiltonianSpec: selected indices not distinct");
}

std::array<double, 3> HamiltonianSpec::working_triple() const {
  return {levels[selected[0]] + shift, levels[selected[1]] + shift,
          levels[selected[2]] + shift};
}

CMatrix HamiltonianSpec::full_matrix() const {
  const Eigen::Index n = static_cast<Eigen::Index>(levels.size());
  CMatrix h = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = levels[i] + shift;
  return h;
}

CMatrix HamiltonianSpec::working_matrix() const {
  const auto t = working_triple();
  CMatrix h = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) h(i, i) = t[i];
  return h;
}

std::array<double, 3> hydrogen_levels(int n, double B) {
  if (n < 1) throw ValidationError("hydrogen_levels: n must be >= 1");
  if (B <= 0.0) throw ValidationError("hydrogen_levels: B must be positive");
  const double n1 = static_cast<double>(n);
  return {-B / (n1 * n1), -B / ((n1 + 2.0) * (n1 + 2.0)),
          -B / ((n1 + 1.0) * (n1 + 1.0))};
}

std::array<int, 3> ascending_permutation(const std::array<double, 3>& triple) {
  std::array<int, 3> p{0, 1, 2};
  std::sort(p.begin(), p.end(),
            [&](int a, int b) { return triple[a] < triple[b]; });
  return p;
}

}  // namespace nvne
