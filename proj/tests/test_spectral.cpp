#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtrace/errors.hpp"
#include "qtrace/spectral.hpp"
#include "test_util.hpp"

using namespace qtrace;
using qtest::make_rng;
using qtest::random_matrix;

namespace {

EstimateOptions exact_mode() {
  EstimateOptions o;
  o.mode = EstimateMode::Exact;
  return o;
}

}  // namespace

TEST_CASE("trace_polynomial_reference") {
  // p(x) = x^2 on I2 -> 2.
  ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(std::abs(trace_polynomial_reference({Complex{0}, Complex{0}, Complex{1}}, i2) - 2.0) <
        1e-14);
  // Against an independent eigenvalue evaluation on a diagonal matrix.
  ComplexMatrix d(2, 2);
  d(0, 0) = Complex{1.5, 0};
  d(1, 1) = Complex{-0.5, 0};
  std::vector<Complex> coeffs{Complex{2}, Complex{-1}, Complex{3}, Complex{0.5}};
  Complex want{};
  for (const Complex lam : {d(0, 0), d(1, 1)}) {
    Complex p{};
    Complex x{1.0, 0.0};
    for (const Complex& c : coeffs) {
      p += c * x;
      x *= lam;
    }
    want += p;
  }
  CHECK(std::abs(trace_polynomial_reference(coeffs, d) - want) < 1e-12);
}

TEST_CASE("moments route, exact mode") {
  // p(x) = x^2, A = I2 -> 2.
  MatrixStatePrep id2 = identity_prep(2);
  const double norm_i2 = std::sqrt(2.0);
  Complex got = spectral_sum_moments({Complex{0}, Complex{0}, Complex{1}}, id2, norm_i2,
                                     exact_mode());
  CHECK(std::abs(got - 2.0) < 1e-10);

  // p(x) = 1 + x^4 on a random 2x2.
  auto rng = make_rng(71);
  ComplexMatrix a = random_matrix(rng, 2, 2);
  std::vector<Complex> coeffs{Complex{1}, Complex{0}, Complex{0}, Complex{0}, Complex{1}};
  got = spectral_sum_moments(coeffs, synthesize_state_prep(a), frobenius(a), exact_mode());
  CHECK(std::abs(got - trace_polynomial_reference(coeffs, a)) < 1e-8);

  // Odd degree exercises the identity-insertion path.
  std::vector<Complex> odd{Complex{0.5}, Complex{-1}, Complex{0}, Complex{2}};
  got = spectral_sum_moments(odd, synthesize_state_prep(a), frobenius(a), exact_mode());
  CHECK(std::abs(got - trace_polynomial_reference(odd, a)) < 1e-8);
}

TEST_CASE("factored route, exact mode") {
  // p(x) = (x-1)(x-2) = 2 - 3x + x^2 on I2: both shifted factors vanish on
  // the spectrum -> 0.
  ComplexMatrix i2 = ComplexMatrix::identity(2);
  std::vector<Complex> coeffs{Complex{2}, Complex{-3}, Complex{1}};
  Complex got = spectral_sum_factored(coeffs, i2, exact_mode());
  CHECK(std::abs(got) < 1e-8);

  // Roots at 0: c_L * Tr(A^2) matches the moments route.
  auto rng = make_rng(72);
  ComplexMatrix a = random_matrix(rng, 2, 2);
  std::vector<Complex> square{Complex{0}, Complex{0}, Complex{1}};
  const Complex via_factored = spectral_sum_factored(square, a, exact_mode());
  const Complex via_moments =
      spectral_sum_moments(square, synthesize_state_prep(a), frobenius(a), exact_mode());
  CHECK(std::abs(via_factored - via_moments) < 1e-8);

  // Degree-3 polynomial with planted roots on a random SPD 2x2.
  ComplexMatrix spd = qtest::random_spd(rng, 2);
  std::vector<Complex> planted{Complex{0.3, 0}, Complex{-1.2, 0}, Complex{2.5, 0}};
  std::vector<Complex> c{Complex{1}};
  for (const Complex& r : planted) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  got = spectral_sum_factored(c, spd, exact_mode());
  CHECK(std::abs(got - trace_polynomial_reference(c, spd)) < 1e-8);
}

TEST_CASE("both routes agree on random degree <= 4 polynomials") {
  auto rng = make_rng(73);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const std::int64_t n : {2, 4}) {
    for (int degree = 1; degree <= 4; ++degree) {
      ComplexMatrix a = random_matrix(rng, n, n);
      std::vector<Complex> coeffs;
      for (int i = 0; i <= degree; ++i) coeffs.push_back(Complex{u(rng), 0.0});
      if (std::abs(coeffs.back()) < 0.1) coeffs.back() += 0.5;
      const Complex want = trace_polynomial_reference(coeffs, a);
      const Complex moments =
          spectral_sum_moments(coeffs, synthesize_state_prep(a), frobenius(a), exact_mode());
      const Complex factored = spectral_sum_factored(coeffs, a, exact_mode());
      CHECK(std::abs(moments - want) < 1e-8);
      CHECK(std::abs(factored - want) < 1e-8);
      CHECK(std::abs(moments - factored) < 1e-6);
    }
  }
}

TEST_CASE("error paths") {
  ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(spectral_sum_factored({Complex{1}}, i2, exact_mode()), DimensionError);
  CHECK_THROWS_AS(spectral_sum_factored({Complex{1}, Complex{0}}, i2, exact_mode()),
                  RootFindingError);
  // Shift exactly at the only eigenvalue of I: the zero factor forces 0.
  std::vector<Complex> at_one{Complex{-1}, Complex{1}};  // p(x) = x - 1
  CHECK(spectral_sum_factored(at_one, i2, exact_mode()) == Complex{});

  // Degree 0 is a pure classical sum: c0 * n.
  const Complex constant = spectral_sum_moments({Complex{3}}, identity_prep(2), std::sqrt(2.0),
                                                exact_mode());
  CHECK(std::abs(constant - 6.0) < 1e-14);

  // Non-square prep rejected.
  ComplexMatrix rect(2, 4);
  rect(0, 0) = 1.0;
  CHECK_THROWS_AS(spectral_sum_moments({Complex{1}, Complex{1}}, synthesize_state_prep(rect), 1.0,
                                       exact_mode()),
                  DimensionError);
}
