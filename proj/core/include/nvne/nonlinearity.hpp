#ifndef NVNE_NONLINEARITY_HPP
#define NVNE_NONLINEARITY_HPP

#include <vector>

#include "nvne/matrix.hpp"

namespace nvne {

/// Real polynomial nonlinearity f of the evolution equation
/// i rho' = [H, f(rho)], plus the constant gauge offset c used by the
/// two-level linear problem (f_c(x) = f(x) + c).
class Nonlinearity {
 public:
  /// coeffs[k] multiplies x^k.
  explicit Nonlinearity(std::vector<double> coeffs, double c = 0.0);

  /// f(x) = x^k.
  static Nonlinearity power(int k);

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;                 // f(x), Horner
  double eval_shifted(double x) const;         // f_c(x) = f(x) + c

  /// f applied to an operator through its spectral data.
  HermitianMatrix apply(const SpectralData& s) const;

  const std::vector<double>& coefficients() const { return coeffs_; }
  double offset() const { return c_; }
  int degree() const;

  /// True when f(x) = x^2 (an arbitrary constant term is allowed; it
  /// commutes out of the equation of motion).
  bool is_pure_quadratic() const;

 private:
  std::vector<double> coeffs_;
  double c_;
};

}  // namespace nvne

#endif  // NVNE_NONLINEARITY_HPP
