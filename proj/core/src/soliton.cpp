#include "nvne/soliton.hpp"

#include <cmath>
#include <cstdio>

namespace nvne {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", x);
  return buf;
}

SolitonProfile finish_profile(SolitonModel model, int n, SeedSolution seed,
                              Complex gamma1, Complex gamma3, Complex kappa) {
  const Nonlinearity f = Nonlinearity::power(2);
  const double rho_mag = seed.rho_offdiag;
  const double beta = seed.beta();

  SolitonProfile p{model,
                   n,
                   gamma1,
                   gamma3,
                   Complex(0.0),
                   kappa,
                   rho_mag * rho_mag / beta,
                   0.0,
                   rho_mag,
                   Complex(0.0),
                   Complex(0.0),
                   gamma1 == Complex(0.0) || gamma3 == Complex(0.0),
                   seed,
                   DarbouxOutput(make_lax(seed, f, gamma1 * kappa, gamma3))};

  if (!p.constant_solution) {
    p.D = std::conj(gamma3) * gamma1 / std::norm(gamma1);
    p.vartheta = std::log(std::abs(p.D) / std::abs(kappa));
    const Complex kappa_hat = kappa / std::abs(kappa);
    const Complex d_hat = p.D / std::abs(p.D);
    const Complex c_up = seed.omega[1].dot(seed.phi1);
    const Complex c_low = seed.omega[0].dot(seed.phi1);
    p.Z = -rho_mag * kappa_hat * d_hat * c_up;
    p.Z2 = rho_mag * kappa_hat * d_hat * c_low;
  }
  return p;
}

}  // namespace

double ha_d(int n) {
  if (n < 1) throw ValidationError("ha_d: n must be >= 1");
  const double nd = n;
  return 4.0 * (2.0 * nd + 1.0) * std::pow(nd + 1.0, 3);
}

Complex ha_e(int n) {
  if (n < 1) throw ValidationError("ha_e: n must be >= 1");
  const double nd = n;
  return Complex((2.0 * nd + 1.0) * (nd + 2.0),
                 nd * std::sqrt((2.0 * nd + 3.0) * (2.0 * nd + 1.0)));
}

double SolitonProfile::envelope(double t) const {
  if (constant_solution) return 0.0;
  return 1.0 / std::cosh(theta * t + vartheta);
}

double SolitonProfile::zeta(double t) const {
  if (constant_solution) {
    // gamma3 = 0 pins the lower block weight, gamma1 = 0 the upper.
    return gamma3 == Complex(0.0) ? -rho_mag : rho_mag;
  }
  return rho_mag * std::tanh(theta * t + vartheta);
}

Complex SolitonProfile::xi(double t) const { return Z * envelope(t); }

Complex SolitonProfile::xi2(double t) const { return Z2 * envelope(t); }

std::array<int, 3> SolitonProfile::ascending_permutation() const {
  return nvne::ascending_permutation(seed.h_work);
}

std::array<double, 3> SolitonProfile::ascending_levels() const {
  const auto p = ascending_permutation();
  return {seed.h_work[p[0]], seed.h_work[p[1]], seed.h_work[p[2]]};
}

CMatrix SolitonProfile::rho_renumbered(double t) const {
  return renumber_basis(engine.rho(t), ascending_permutation());
}

MatrixSampler SolitonProfile::rho_renumbered_sampler() const {
  const DarbouxOutput eng = engine;
  const auto perm = ascending_permutation();
  return [eng, perm](double t) { return renumber_basis(eng.rho(t), perm); };
}

CMatrix SolitonProfile::rho_int_renumbered(double t) const {
  return renumber_basis(engine.rho_int(t), ascending_permutation());
}

Complex SolitonProfile::u1() const { return (Z + Z2) / std::sqrt(2.0); }

Complex SolitonProfile::u2() const {
  return std::conj((Z - Z2) / std::sqrt(2.0));
}

SolitonProfile ho_profile(double B, double beta, Complex gamma1,
                          Complex gamma3) {
  SeedSolution seed = build_equispaced_seed(B, 0.0, beta);
  return finish_profile(SolitonModel::HO, 0, std::move(seed), gamma1, gamma3,
                        Complex(1.0, 1.0));
}

SolitonProfile ha_profile(int n, double B, double beta, Complex gamma1,
                          Complex gamma3) {
  const auto h = hydrogen_levels(n, B);
  SeedSolution seed =
      build_inhomogeneous_seed(h[0], h[1], h[2], beta, 1.0 / 3.0);
  const Complex kappa(0.0, std::sqrt(2.0 * ha_d(n)));
  return finish_profile(SolitonModel::HA, n, std::move(seed), gamma1, gamma3,
                        kappa);
}

DensityMatrix rho_spectral_basis(const SolitonProfile& profile, double t) {
  const double z = profile.zeta(t);
  const Complex x = profile.xi(t);
  const double third = 1.0 / 3.0;
  CMatrix m(3, 3);
  const double re = std::sqrt(2.0) * x.real();
  const Complex im(0.0, std::sqrt(2.0) * x.imag());
  m << third, re, z,
       re, third, -im,
       z, im, third;
  return DensityMatrix::validated(m);
}

CMatrix renumber_basis(const CMatrix& m, const std::array<int, 3>& perm) {
  CMatrix out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m(perm[i], perm[j]);
  return out;
}

HermitianMatrix effective_hamiltonian(const MatrixSampler& rho,
                                      const std::array<double, 3>& levels,
                                      const Nonlinearity& f, double eps1,
                                      double eps2, double t) {
  if (!f.is_pure_quadratic())
    throw ValidationError(
        "effective_hamiltonian: the commutator identity holds for "
        "f(x) = x^2 only; got degree " +
        std::to_string(f.degree()));
  CMatrix g = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) g(i, i) = levels[i] + eps1;
  const CMatrix r = rho(t);
  CMatrix h = g * r + r * g;
  h += eps2 * CMatrix::Identity(3, 3);
  return HermitianMatrix::symmetrized(h);
}

std::array<double, 2> paper_epsilons(const std::array<double, 3>& levels) {
  const double sum = levels[0] + levels[2];
  return {-0.5 * sum, 0.75 * sum};
}

void FieldConfig::validate() const {
  if (!(v > 0.0) || !(c > 0.0) || !(v < c))
    throw ValidationError("FieldConfig: requires 0 < v < c (v = " + fmt(v) +
                          ", c = " + fmt(c) + ")");
  for (double x : {Ex0, Ey0, omega, eps1, eps2})
    if (!std::isfinite(x))
      throw ValidationError("FieldConfig: non-finite parameter");
}

FieldAndDipoles field_and_dipoles(const SolitonProfile& profile,
                                  const FieldConfig& cfg, double t) {
  cfg.validate();
  if (cfg.Ex0 == 0.0 || cfg.Ey0 == 0.0)
    throw ValidationError(
        "field_and_dipoles: zero field amplitude cannot carry the potential");

  const auto g = profile.ascending_levels();
  const double alpha_lam = profile.engine.lax().alpha_lam;
  FieldAndDipoles out;
  out.omega12 = alpha_lam * (g[1] - g[0]);
  out.omega23 = alpha_lam * (g[2] - g[1]);
  const double scale = std::max({1.0, std::abs(out.omega12)});
  out.single_carrier = std::abs(out.omega12 - out.omega23) <= 1e-10 * scale;
  out.factorized =
      out.single_carrier && std::abs(cfg.omega - out.omega12) <= 1e-10 * scale;
  if (!out.factorized) {
    out.diagnostic =
        "V is not expressible as -d.E with a single static dipole at the "
        "given omega: derived carriers omega12 = " +
        fmt(out.omega12) + ", omega23 = " + fmt(out.omega23) +
        ", requested omega = " + fmt(cfg.omega) +
        "; residual carrier phases are folded into d(t)";
  }

  const double s = profile.envelope(t);
  out.E = Eigen::Vector3d(cfg.Ex0 * s * std::cos(cfg.omega * t),
                          cfg.Ey0 * s * std::sin(cfg.omega * t), 0.0);

  const Complex i_unit(0.0, 1.0);
  // -V_12 / envelope and -V_23 / envelope; V is the off-diagonal part of
  // the effective Hamiltonian at the paper's eps1.
  const Complex q12 =
      -(g[1] - g[2]) * profile.u1() * std::exp(i_unit * out.omega12 * t);
  const Complex q23 =
      -(g[1] - g[0]) * profile.u2() * std::exp(i_unit * out.omega23 * t);

  out.dx = CMatrix::Zero(3, 3);
  out.dy = CMatrix::Zero(3, 3);
  const double cosw = std::cos(cfg.omega * t);
  const double sinw = std::sin(cfg.omega * t);
  out.dx(0, 1) = q12 / cfg.Ex0 * cosw;
  out.dx(1, 2) = q23 / cfg.Ex0 * cosw;
  out.dy(0, 1) = q12 / cfg.Ey0 * sinw;
  out.dy(1, 2) = q23 / cfg.Ey0 * sinw;
  out.dx(1, 0) = std::conj(out.dx(0, 1));
  out.dx(2, 1) = std::conj(out.dx(1, 2));
  out.dy(1, 0) = std::conj(out.dy(0, 1));
  out.dy(2, 1) = std::conj(out.dy(1, 2));
  return out;
}

Eigen::Vector2d polarization(const MatrixSampler& rho, const CMatrix& dx,
                             const CMatrix& dy, double t) {
  const CMatrix r = rho(t);
  const Complex px = (r * dx).trace();
  const Complex py = (r * dy).trace();
  const double scale = std::max({1.0, std::abs(px), std::abs(py)});
  if (std::abs(px.imag()) > 1e-12 * scale ||
      std::abs(py.imag()) > 1e-12 * scale)
    throw ValidationError("polarization: trace has imaginary part " +
                          fmt(px.imag()) + ", " + fmt(py.imag()));
  return {px.real(), py.real()};
}

Eigen::Vector2d polarization_closed(const SolitonProfile& profile,
                                    double omega, double t) {
  const double common = 4.0 * profile.envelope(t) * maxwell_bracket(profile);
  return {common * std::cos(omega * t), common * std::sin(omega * t)};
}

double maxwell_bracket(const SolitonProfile& profile) {
  const auto g = profile.ascending_levels();
  const double re = profile.Z.real();
  const double im = profile.Z.imag();
  return (g[1] - g[2]) * re * re + (g[1] - g[0]) * im * im;
}

double solve_constraint_amplitude(const SolitonProfile& profile, double v,
                                  double c) {
  const double k = (c / v) * (c / v) - 1.0;
  if (k < 1e-12)
    throw ValidationError("solve_constraint_amplitude: (c/v)^2 - 1 = " +
                          fmt(k) + " is degenerate (v too close to c)");
  return 16.0 * kPi * maxwell_bracket(profile) / k;
}

MaxwellCheck maxwell_check(const FieldConfig& cfg,
                           const SolitonProfile& profile) {
  cfg.validate();
  const double k = (cfg.c / cfg.v) * (cfg.c / cfg.v) - 1.0;
  if (k < 1e-12)
    throw ValidationError("maxwell_check: (c/v)^2 - 1 = " + fmt(k) +
                          " is degenerate (v too close to c)");

  MaxwellCheck out;
  out.bracket = maxwell_bracket(profile);
  const double lhs = 16.0 * kPi * out.bracket;
  out.constraint_residual = std::max(std::abs(lhs - k * cfg.Ex0),
                                     std::abs(lhs - k * cfg.Ey0));

  // Steady state: t -> retarded coordinate. E and P are the closed forms,
  // differentiated by second central differences.
  const double theta = profile.theta;
  if (theta == 0.0 || profile.constant_solution) return out;
  const double center = -profile.vartheta / theta;
  const double span = 6.0 / std::abs(theta);
  const double step = 1e-3 / std::abs(theta);
  const int samples = 201;

  auto e_field = [&](double s) {
    const double env = profile.envelope(s);
    return Eigen::Vector2d(cfg.Ex0 * env * std::cos(cfg.omega * s),
                           cfg.Ey0 * env * std::sin(cfg.omega * s));
  };
  auto p_field = [&](double s) {
    return Eigen::Vector2d(polarization_closed(profile, cfg.omega, s));
  };

  double worst = 0.0;
  double e2_max = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = center - span + 2.0 * span * i / (samples - 1);
    const Eigen::Vector2d e2 =
        (e_field(s + step) - 2.0 * e_field(s) + e_field(s - step)) /
        (step * step);
    const Eigen::Vector2d p2 =
        (p_field(s + step) - 2.0 * p_field(s) + p_field(s - step)) /
        (step * step);
    const Eigen::Vector2d res = e2 - (4.0 * kPi / k) * p2;
    worst = std::max(worst, res.cwiseAbs().maxCoeff());
    e2_max = std::max(e2_max, e2.cwiseAbs().maxCoeff());
  }
  out.pde_residual = e2_max > 0.0 ? worst / e2_max : worst;
  return out;
}

}  // namespace nvne
