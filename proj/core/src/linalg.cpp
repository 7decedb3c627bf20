#include "qtrace/linalg.hpp"

#include <cmath>
#include <random>

#include "qtrace/errors.hpp"

namespace qtrace {

int log2_exact(std::int64_t n) {
  if (!is_power_of_two(n)) {
    throw DimensionError("expected a power of two, got " + std::to_string(n));
  }
  int q = 0;
  while ((std::int64_t{1} << q) < n) ++q;
  return q;
}

ComplexMatrix::ComplexMatrix(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
  if (rows <= 0 || cols <= 0) throw DimensionError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::int64_t rows, std::int64_t cols, ComplexVector data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows <= 0 || cols <= 0) throw DimensionError("matrix dimensions must be positive");
  if (static_cast<std::int64_t>(data_.size()) != rows * cols) {
    throw DimensionError("matrix data length does not match rows*cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::int64_t n) {
  ComplexMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexVector vec(const ComplexMatrix& a) {
  ComplexVector v(static_cast<std::size_t>(a.rows() * a.cols()));
  for (std::int64_t j = 0; j < a.cols(); ++j) {
    for (std::int64_t i = 0; i < a.rows(); ++i) {
      v[static_cast<std::size_t>(a.rows() * j + i)] = a(i, j);
    }
  }
  return v;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::int64_t p = b.rows(), q = b.cols();
  ComplexMatrix c(a.rows() * p, a.cols() * q);
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::int64_t k = 0; k < p; ++k) {
        for (std::int64_t l = 0; l < q; ++l) {
          c(p * i + k, q * j + l) = aij * b(k, l);
        }
      }
    }
  }
  return c;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::int64_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  if (a.cols() != static_cast<std::int64_t>(x.size())) {
    throw DimensionError("matvec: dimension mismatch");
  }
  ComplexVector y(static_cast<std::size_t>(a.rows()));
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    for (std::int64_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

Complex trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("trace of a non-square matrix");
  Complex t{};
  for (std::int64_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t j = 0; j < a.cols(); ++j) c(i, j) = std::conj(a(i, j));
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return conjugate(transpose(a)); }

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: shape mismatch");
  ComplexMatrix c(a.rows(), a.cols());
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  }
  return c;
}

ComplexMatrix scale(Complex s, const ComplexMatrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  }
  return c;
}

ComplexMatrix shift_diagonal(const ComplexMatrix& a, Complex s) {
  if (a.rows() != a.cols()) throw DimensionError("shift_diagonal: matrix must be square");
  ComplexMatrix c = a;
  for (std::int64_t i = 0; i < a.rows(); ++i) c(i, i) -= s;
  return c;
}

Complex multivariate_trace_oracle(const std::vector<ComplexMatrix>& chain) {
  if (chain.empty()) throw DimensionError("multivariate trace of an empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].cols() != chain[i + 1].rows()) {
      throw DimensionError("multivariate trace: chain dimensions break at position " +
                           std::to_string(i));
    }
  }
  if (chain.front().rows() != chain.back().cols()) {
    throw DimensionError("multivariate trace: product is not square");
  }
  ComplexMatrix prod = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) prod = matmul(prod, chain[i]);
  return trace(prod);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

HutchinsonEstimate hutchinson_estimate(const std::vector<ComplexMatrix>& chain,
                                       std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw DimensionError("hutchinson: need at least one sample");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].cols() != chain[i + 1].rows()) throw DimensionError("hutchinson: chain breaks");
  }
  if (chain.empty() || chain.front().rows() != chain.back().cols()) {
    throw DimensionError("hutchinson: product is not square");
  }
  const std::int64_t n = chain.front().rows();

  Complex sum{};
  double sum_sq_re = 0.0, sum_sq_im = 0.0;
  std::vector<double> z(static_cast<std::size_t>(n));
  for (std::int64_t s = 0; s < samples; ++s) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(s))));
    for (auto& zi : z) zi = (rng() & 1u) ? 1.0 : -1.0;
    ComplexVector v(z.begin(), z.end());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) v = matvec(*it, v);
    Complex draw{};
    for (std::int64_t i = 0; i < n; ++i) draw += z[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    sum += draw;
    sum_sq_re += draw.real() * draw.real();
    sum_sq_im += draw.imag() * draw.imag();
  }

  HutchinsonEstimate out;
  out.samples = samples;
  out.estimate = sum / static_cast<double>(samples);
  if (samples > 1) {
    const double ns = static_cast<double>(samples);
    double var_re = (sum_sq_re - ns * out.estimate.real() * out.estimate.real()) / (ns - 1.0);
    double var_im = (sum_sq_im - ns * out.estimate.imag() * out.estimate.imag()) / (ns - 1.0);
    out.std_error = std::sqrt(std::max(0.0, var_re + var_im) / ns);
  }
  return out;
}

}  // namespace qtrace
