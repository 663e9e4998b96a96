#include "nvne/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace nvne {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", x);
  return buf;
}

CMatrix apply_f(const Nonlinearity& f, const CMatrix& rho) {
  return f.apply(eig_hermitian(HermitianMatrix::symmetrized(rho))).matrix();
}

// d rho / dt = -i [H, f(rho)]
CMatrix nvne_rhs(const CMatrix& h, const Nonlinearity& f, const CMatrix& rho) {
  return Complex(0.0, -1.0) * commutator(h, apply_f(f, rho));
}

}  // namespace

TimeGrid TimeGrid::make(double t_start, double t_end, int n_points) {
  if (!(t_start < t_end))
    throw ValidationError("TimeGrid: t_start must be less than t_end");
  if (n_points < 2)
    throw ValidationError("TimeGrid: n_points must be at least 2");
  return TimeGrid{t_start, t_end, n_points};
}

double TimeGrid::point(int i) const {
  if (i < 0 || i >= n_points)
    throw ValidationError("TimeGrid: point index out of range");
  if (i == n_points - 1) return t_end;
  return t_start + spacing() * i;
}

void VerificationReport::add(Check check) {
  for (const auto& existing : checks_)
    if (existing.name == check.name)
      throw ValidationError("VerificationReport: duplicate check '" +
                            check.name + "'");
  checks_.push_back(std::move(check));
}

void VerificationReport::add_bound(const std::string& name, double measured,
                                   double tolerance,
                                   const std::string& notes) {
  add({name, tolerance, measured, measured <= tolerance, notes});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) add(c);
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.pass; });
}

const Check& VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return c;
  throw ValidationError("VerificationReport: no check named '" + name + "'");
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "check                                              "
        "tolerance      measured       verdict\n";
  for (const auto& c : checks_) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-50s %-14.6e %-14.6e %s", c.name.c_str(),
                  c.tolerance, c.measured, c.pass ? "PASS" : "FAIL");
    os << line;
    if (!c.notes.empty()) os << "  # " << c.notes;
    os << "\n";
  }
  return os.str();
}

Trajectory rk4_integrate(const DensityMatrix& rho_start,
                         const HermitianMatrix& h, const Nonlinearity& f,
                         const TimeGrid& grid, double step) {
  if (step <= 0.0) throw ValidationError("rk4_integrate: step must be > 0");
  if (step > grid.spacing() * (1.0 + 1e-12))
    throw ValidationError("rk4_integrate: step " + fmt(step) +
                          " exceeds grid spacing " + fmt(grid.spacing()));
  const double rate = nvne_rhs(h.matrix(), f, rho_start.matrix()).norm();
  if (rate * step >= 0.1)
    throw ValidationError("rk4_integrate: ||[H, f(rho)]|| * step = " +
                          fmt(rate * step) + " >= 0.1; reduce the step");

  Trajectory traj;
  traj.times.reserve(grid.n_points);
  traj.states.reserve(grid.n_points);

  CMatrix rho = rho_start.matrix();
  traj.times.push_back(grid.point(0));
  traj.states.push_back(rho);

  const int substeps =
      std::max(1, static_cast<int>(std::ceil(grid.spacing() / step - 1e-12)));
  const double hstep = grid.spacing() / substeps;

  for (int i = 1; i < grid.n_points; ++i) {
    for (int s = 0; s < substeps; ++s) {
      const CMatrix k1 = nvne_rhs(h.matrix(), f, rho);
      const CMatrix k2 = nvne_rhs(h.matrix(), f, rho + 0.5 * hstep * k1);
      const CMatrix k3 = nvne_rhs(h.matrix(), f, rho + 0.5 * hstep * k2);
      const CMatrix k4 = nvne_rhs(h.matrix(), f, rho + hstep * k3);
      rho += (hstep / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      rho = 0.5 * (rho + rho.adjoint().eval());
      traj.trace_drift_max =
          std::max(traj.trace_drift_max,
                   std::abs(rho.trace() - rho_start.matrix().trace()));
    }
    traj.times.push_back(grid.point(i));
    traj.states.push_back(rho);
  }
  return traj;
}

double nvne_residual_fd(const MatrixSampler& rho, const CMatrix& h,
                        const Nonlinearity& f, double t, double delta) {
  if (delta <= 0.0) throw ValidationError("nvne_residual_fd: delta must be > 0");
  const CMatrix dot =
      (rho(t + delta) - rho(t - delta)) / (2.0 * delta);
  const CMatrix lhs = Complex(0.0, 1.0) * dot;
  const CMatrix rhs = commutator(h, apply_f(f, rho(t)));
  return (lhs - rhs).norm();
}

double max_nvne_residual(const MatrixSampler& rho, const CMatrix& h,
                         const Nonlinearity& f, const TimeGrid& grid,
                         double delta) {
  double worst = 0.0;
  for (int i = 0; i < grid.n_points; ++i)
    worst = std::max(worst, nvne_residual_fd(rho, h, f, grid.point(i), delta));
  return worst;
}

VerificationReport invariant_suite(const MatrixSampler& rho,
                                   const TimeGrid& grid,
                                   const InvariantTolerances& tol,
                                   const std::string& prefix) {
  double trace_err = 0.0;
  double herm = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  double eig_drift = 0.0;
  double purity_drift = 0.0;

  const Eigen::VectorXd eig0 = hermitian_eigenvalues(rho(grid.point(0)));
  const double purity0 = (rho(grid.point(0)) * rho(grid.point(0)))
                             .trace()
                             .real();

  for (int i = 0; i < grid.n_points; ++i) {
    const CMatrix m = rho(grid.point(i));
    trace_err = std::max(trace_err, std::abs(m.trace() - Complex(1.0)));
    herm = std::max(herm, hermiticity_defect(m));
    const Eigen::VectorXd eig = hermitian_eigenvalues(m);
    min_eig = std::min(min_eig, eig.minCoeff());
    eig_drift = std::max(eig_drift, (eig - eig0).cwiseAbs().maxCoeff());
    purity_drift = std::max(
        purity_drift, std::abs((m * m).trace().real() - purity0));
  }

  VerificationReport report;
  report.add_bound(prefix + "trace: max |Tr rho - 1|", trace_err, tol.trace);
  report.add_bound(prefix + "hermiticity: max ||rho - rho*||_F", herm,
                   tol.hermiticity);
  report.add({prefix + "positivity: min eigenvalue", tol.min_eigenvalue,
              min_eig, min_eig >= tol.min_eigenvalue, ""});
  report.add_bound(prefix + "isospectrality: max eigenvalue drift", eig_drift,
                   tol.eigenvalue_drift);
  report.add_bound(prefix + "purity: max |Tr rho^2 - Tr rho0^2|", purity_drift,
                   tol.purity_drift);
  return report;
}

VerificationReport scaling_property_check(const MatrixSampler& predensity,
                                          int k, const CMatrix& h,
                                          const TimeGrid& grid, double delta,
                                          double tolerance) {
  if (k < 1) throw ValidationError("scaling_property_check: k must be >= 1");
  const double t_mid = 0.5 * (grid.t_start + grid.t_end);
  const double tau = predensity(t_mid).trace().real();
  const double time_scale = std::pow(tau, k - 1);

  MatrixSampler rescaled = [predensity, tau, time_scale](double t) {
    return predensity(t / time_scale) / tau;
  };
  const Nonlinearity f = Nonlinearity::power(k);
  const double residual = max_nvne_residual(rescaled, h, f, grid, delta);

  VerificationReport report;
  {
    std::ostringstream name;
    name << "scaling k=" << k << ": residual of (rho/tau)(t/tau^" << (k - 1)
         << ")";
    report.add_bound(name.str(), residual, tolerance,
                     "tau = " + fmt(tau));
  }
  return report;
}

VerificationReport shift_property_check(const MatrixSampler& rho, double s,
                                        const Nonlinearity& f,
                                        const CMatrix& h, const TimeGrid& grid,
                                        double delta, double tolerance) {
  const Eigen::Index n = rho(grid.t_start).rows();
  MatrixSampler shifted = [rho, s, n](double t) {
    return CMatrix(rho(t) + s * CMatrix::Identity(n, n));
  };

  auto shifted_poly = [&f](double s_arg) {
    // g(x) = f(x + s_arg), expanded through the binomial theorem.
    const auto& c = f.coefficients();
    std::vector<double> g(c.size(), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      double binom = 1.0;
      double pow_s = 1.0;
      for (std::size_t j = 0; j <= k; ++j) {
        g[k - j] += c[k] * binom * pow_s;
        binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
        pow_s *= s_arg;
      }
    }
    return Nonlinearity(std::move(g), f.offset());
  };

  const double res_plus =
      max_nvne_residual(shifted, h, shifted_poly(+s), grid, delta);
  const double res_minus =
      max_nvne_residual(shifted, h, shifted_poly(-s), grid, delta);

  VerificationReport report;
  std::string which;
  if (res_minus <= tolerance && res_plus <= tolerance)
    which = "both readings pass";
  else if (res_minus <= tolerance)
    which = "g(x) = f(x - s) passes";
  else if (res_plus <= tolerance)
    which = "g(x) = f(x + s) passes";
  else
    which = "neither reading passes";
  report.add({"shift: residual with g(x) = f(x - s)", tolerance, res_minus,
              res_minus <= tolerance, which});
  // The opposite reading is recorded for comparison, never gated on.
  report.add({"shift: residual with g(x) = f(x + s) (recorded)",
              std::numeric_limits<double>::infinity(), res_plus, true, which});
  return report;
}

}  // namespace nvne
