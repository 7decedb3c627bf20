#include "qtrace/spectral.hpp"

#include <cmath>

#include "qtrace/errors.hpp"
#include "qtrace/rootfind.hpp"

namespace qtrace {

namespace {

// Even count of at least four inputs, per the trace plan contract.
void pad_with_identities(std::vector<MatrixStatePrep>& preps, double& norm_product,
                         std::int64_t n) {
  while (preps.size() < 4 || preps.size() % 2 != 0) {
    preps.push_back(identity_prep(n));
    norm_product *= std::sqrt(static_cast<double>(n));
  }
}

}  // namespace

Complex trace_polynomial_reference(const std::vector<Complex>& coeffs, const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("spectral sum needs a square matrix");
  if (coeffs.empty()) throw DimensionError("empty coefficient list");
  ComplexMatrix acc(a.rows(), a.cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = add(matmul(acc, a), scale(*it, ComplexMatrix::identity(a.rows())));
  }
  return trace(acc);
}

Complex spectral_sum_moments(const std::vector<Complex>& coeffs, const MatrixStatePrep& a_prep,
                             double a_frobenius, const EstimateOptions& opts) {
  if (coeffs.empty()) throw DimensionError("empty coefficient list");
  if (a_prep.rows != a_prep.cols) throw DimensionError("spectral sum needs a square prep");
  const std::int64_t n = a_prep.rows;

  Complex total = coeffs[0] * static_cast<double>(n);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    if (coeffs[k] == Complex{}) continue;
    std::vector<MatrixStatePrep> preps(k, a_prep);
    double norm_product = std::pow(a_frobenius, static_cast<double>(k));
    pad_with_identities(preps, norm_product, n);
    MVTraceOutput compiled = mvtrace_prep_optimized(preps);
    compiled.norm_product = norm_product;
    EstimateOptions per_moment = opts;
    per_moment.seed = opts.seed + static_cast<std::uint64_t>(k);
    total += coeffs[k] * estimate_trace(compiled, per_moment).trace;
  }
  return total;
}

Complex spectral_sum_factored(const std::vector<Complex>& coeffs, const ComplexMatrix& a,
                              const EstimateOptions& opts) {
  if (a.rows() != a.cols()) throw DimensionError("spectral sum needs a square matrix");
  if (coeffs.size() < 2) throw DimensionError("factored route needs degree >= 1");
  if (!is_power_of_two(a.rows())) throw DimensionError("matrix dimension must be a power of two");

  const std::vector<Complex> roots = polynomial_roots(coeffs);
  std::vector<MatrixStatePrep> preps;
  double norm_product = 1.0;
  for (const Complex& r : roots) {
    const ComplexMatrix shifted = shift_diagonal(a, r);
    // A root exactly on the spectrum with a rank-0 remainder annihilates the
    // whole product; nothing to synthesize.
    if (frobenius(shifted) == 0.0) return Complex{};
    preps.push_back(synthesize_state_prep(shifted));
    norm_product *= frobenius(shifted);
  }
  pad_with_identities(preps, norm_product, a.rows());
  MVTraceOutput compiled = mvtrace_prep_optimized(preps);
  compiled.norm_product = norm_product;
  return coeffs.back() * estimate_trace(compiled, opts).trace;
}

}  // namespace qtrace
