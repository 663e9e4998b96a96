#include "nvne/nonlinearity.hpp"

#include <cmath>

namespace nvne {

Nonlinearity::Nonlinearity(std::vector<double> coeffs, double c)
    : coeffs_(std::move(coeffs)), c_(c) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  for (double a : coeffs_)
    if (!std::isfinite(a))
      throw ValidationError("Nonlinearity: non-finite coefficient");
  if (!std::isfinite(c_))
    throw ValidationError("Nonlinearity: non-finite offset");
}

Nonlinearity Nonlinearity::power(int k) {
  if (k < 0) throw ValidationError("Nonlinearity::power: negative exponent");
  std::vector<double> coeffs(static_cast<std::size_t>(k) + 1, 0.0);
  coeffs.back() = 1.0;
  return Nonlinearity(std::move(coeffs));
}

double Nonlinearity::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

double Nonlinearity::eval_shifted(double x) const { return eval(x) + c_; }

HermitianMatrix Nonlinearity::apply(const SpectralData& s) const {
  return apply_spectral_function([this](double x) { return eval(x); }, s);
}

int Nonlinearity::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    if (coeffs_[k] != 0.0) return static_cast<int>(k);
  return 0;
}

bool Nonlinearity::is_pure_quadratic() const {
  if (degree() != 2 || coeffs_[2] != 1.0) return false;
  return coeffs_[1] == 0.0;
}

}  // namespace nvne
