#pragma once

#include <vector>

#include "qtrace/linalg.hpp"

namespace qtrace {

/// Roots of p(x) = c[0] + c[1] x + ... + c[L] x^L by Durand-Kerner
/// simultaneous iteration. Requires c[L] != 0 and L >= 1. Every returned
/// root r satisfies |p(r)| <= 1e-8 * max|c_k|, else RootFindingError.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// Horner evaluation of p at x.
Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex x);

}  // namespace qtrace
