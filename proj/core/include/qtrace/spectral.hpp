#pragma once

#include <vector>

#include "qtrace/estimator.hpp"
#include "qtrace/synthesis.hpp"

namespace qtrace {

/// Classical Tr(p(A)) with p(x) = sum_k coeffs[k] x^k. Oracle for both
/// estimation routes below.
Complex trace_polynomial_reference(const std::vector<Complex>& coeffs, const ComplexMatrix& a);

/// Moment route: sum_k c_k * T_k with T_0 = n and T_k the estimated
/// Tr(A^k), each moment compiled from k copies of the prep (identity preps
/// appended until the input count is even and at least four). a_frobenius is
/// the classically tracked norm that undoes the amplitude-encoding scaling.
Complex spectral_sum_moments(const std::vector<Complex>& coeffs, const MatrixStatePrep& a_prep,
                             double a_frobenius, const EstimateOptions& opts);

/// Factored route: c_L * Tr((A - r_1 I) ... (A - r_L I)) with the shifts
/// taken as the roots of p. Needs the classical matrix, since the shifted
/// variants are formed classically and synthesized.
Complex spectral_sum_factored(const std::vector<Complex>& coeffs, const ComplexMatrix& a,
                              const EstimateOptions& opts);

}  // namespace qtrace
