#include "qtrace/rootfind.hpp"

#include <algorithm>
#include <cmath>

#include "qtrace/errors.hpp"

namespace qtrace {

Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex x) {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  if (coeffs.size() < 2) throw RootFindingError("polynomial degree must be at least 1");
  if (std::abs(coeffs.back()) == 0.0) throw RootFindingError("leading coefficient is zero");
  const std::size_t degree = coeffs.size() - 1;

  // Monic copy.
  std::vector<Complex> monic(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) monic[i] = coeffs[i] / coeffs.back();

  // Cauchy-style radius bound keeps the starting ring around the roots.
  double radius = 0.0;
  for (std::size_t i = 0; i < degree; ++i) radius = std::max(radius, std::abs(monic[i]));
  radius = 1.0 + radius;

  const Complex ratio{0.4, 0.9};  // not a root of unity
  std::vector<Complex> x(degree);
  Complex p{1.0, 0.0};
  for (std::size_t j = 0; j < degree; ++j) {
    p *= ratio;
    x[j] = radius * p / std::abs(p) * std::pow(0.95, static_cast<double>(j));
  }

  constexpr int kMaxIterations = 1000;
  constexpr double kStepTol = 1e-12;
  for (int it = 0; it < kMaxIterations; ++it) {
    double max_step = 0.0;
    for (std::size_t j = 0; j < degree; ++j) {
      Complex denom{1.0, 0.0};
      for (std::size_t i = 0; i < degree; ++i) {
        if (i != j) denom *= (x[j] - x[i]);
      }
      if (std::abs(denom) == 0.0) {
        // Collided iterates: nudge and continue.
        x[j] += Complex{1e-8, 1e-8};
        max_step = 1.0;
        continue;
      }
      const Complex step = polynomial_eval(monic, x[j]) / denom;
      x[j] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < kStepTol) break;
  }

  double max_coeff = 0.0;
  for (const Complex& c : coeffs) max_coeff = std::max(max_coeff, std::abs(c));
  for (const Complex& r : x) {
    if (!(std::abs(polynomial_eval(coeffs, r)) <= 1e-8 * max_coeff)) {
      throw RootFindingError("Durand-Kerner did not converge to the requested residual");
    }
  }
  return x;
}

}  // namespace qtrace
