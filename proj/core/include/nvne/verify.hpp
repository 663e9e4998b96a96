#ifndef NVNE_VERIFY_HPP
#define NVNE_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "nvne/matrix.hpp"
#include "nvne/nonlinearity.hpp"

namespace nvne {

/// Pure sampler of a matrix-valued trajectory.
using MatrixSampler = std::function<CMatrix(double)>;

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  int n_points = 2;

  static TimeGrid make(double t_start, double t_end, int n_points);
  double point(int i) const;
  double spacing() const { return (t_end - t_start) / (n_points - 1); }
};

struct Check {
  std::string name;
  double tolerance = 0.0;
  double measured = 0.0;
  bool pass = false;
  std::string notes;
};

/// Machine-readable list of named checks; names are unique.
class VerificationReport {
 public:
  void add(Check check);
  /// measured <= tolerance.
  void add_bound(const std::string& name, double measured, double tolerance,
                 const std::string& notes = "");
  void merge(const VerificationReport& other);

  bool all_pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check& find(const std::string& name) const;

  /// One record per line: name, tolerance, measured, verdict, notes.
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

/// Fixed-step classic Runge-Kutta trajectory of i rho' = [H, f(rho)].
/// States are re-Hermitized after every step; the trace is never
/// renormalized, so trace_drift_max is an honest quality diagnostic.
struct Trajectory {
  std::vector<double> times;
  std::vector<CMatrix> states;
  double trace_drift_max = 0.0;
};

Trajectory rk4_integrate(const DensityMatrix& rho_start,
                         const HermitianMatrix& h, const Nonlinearity& f,
                         const TimeGrid& grid, double step);

/// || i (rho(t+d) - rho(t-d)) / (2d) - [H, f(rho(t))] ||_F
double nvne_residual_fd(const MatrixSampler& rho, const CMatrix& h,
                        const Nonlinearity& f, double t, double delta);

/// Max of nvne_residual_fd over the grid.
double max_nvne_residual(const MatrixSampler& rho, const CMatrix& h,
                         const Nonlinearity& f, const TimeGrid& grid,
                         double delta);

struct InvariantTolerances {
  double trace = 1e-12;
  double hermiticity = 1e-12;
  double min_eigenvalue = -1e-12;
  double eigenvalue_drift = 1e-10;
  double purity_drift = 1e-10;
};

/// Trace, hermiticity, positivity, eigenvalue drift and Tr rho^2 constancy
/// over a grid. Failures are report entries, never exceptions.
VerificationReport invariant_suite(const MatrixSampler& rho,
                                   const TimeGrid& grid,
                                   const InvariantTolerances& tol = {},
                                   const std::string& prefix = "");

/// Scaling property for f(x) = x^k: given a predensity solution with
/// Tr rho = tau != 1, the rescaled map (rho/tau)(t/tau^{k-1}) must again
/// solve the equation. Residuals via central differences.
VerificationReport scaling_property_check(const MatrixSampler& predensity,
                                          int k, const CMatrix& h,
                                          const TimeGrid& grid,
                                          double delta = 1e-5,
                                          double tolerance = 1e-6);

/// Shift property: rho + s*1 against both readings g(x) = f(x +- s).
/// Records which reading (if either) passes.
VerificationReport shift_property_check(const MatrixSampler& rho, double s,
                                        const Nonlinearity& f,
                                        const CMatrix& h, const TimeGrid& grid,
                                        double delta = 1e-5,
                                        double tolerance = 1e-6);

}  // namespace nvne

#endif  // NVNE_VERIFY_HPP
