#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qtrace {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }
int log2_exact(std::int64_t n);  // throws DimensionError if n is not a power of two

/// Dense complex matrix, row-major storage. The classical ground truth for
/// everything the circuit pipeline encodes.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::int64_t rows, std::int64_t cols);
  ComplexMatrix(std::int64_t rows, std::int64_t cols, ComplexVector data);

  static ComplexMatrix identity(std::int64_t n);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  Complex& operator()(std::int64_t i, std::int64_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::int64_t i, std::int64_t j) const { return data_[i * cols_ + j]; }

  const ComplexVector& data() const { return data_; }
  bool all_finite() const;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  ComplexVector data_;
};

/// Column-major stacking: entry m*j + i of the result is a(i, j).
ComplexVector vec(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);
Complex trace(const ComplexMatrix& a);
double frobenius(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex s, const ComplexMatrix& a);
/// a - s*I, for shifted spectral-sum factors.
ComplexMatrix shift_diagonal(const ComplexMatrix& a, Complex s);

/// Exact Tr(A1 A2 ... AL) of a conformable chain whose product is square.
Complex multivariate_trace_oracle(const std::vector<ComplexMatrix>& chain);

struct HutchinsonEstimate {
  Complex estimate;
  double std_error = 0.0;  // sample standard deviation of the mean
  std::int64_t samples = 0;
};

/// Rademacher trace estimator (1/s) sum_i z_i^T (A1...AL) z_i, applied via
/// repeated matrix-vector products. Per-sample randomness is derived from
/// (seed, sample index), so the result is reproducible.
HutchinsonEstimate hutchinson_estimate(const std::vector<ComplexMatrix>& chain,
                                       std::int64_t samples, std::uint64_t seed);

}  // namespace qtrace
