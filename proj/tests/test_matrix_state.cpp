#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtrace/errors.hpp"
#include "qtrace/matrix_state.hpp"
#include "qtrace/simulator.hpp"
#include "qtrace/synthesis.hpp"
#include "test_util.hpp"

using namespace qtrace;
using qtest::make_rng;
using qtest::normalized_vec;
using qtest::random_matrix;

namespace {

// The binding semantics check: simulating the prep from |0> must reproduce
// the normalized vectorization of the matrix it claims to prepare.
void check_prepares(const MatrixStatePrep& prep, const ComplexMatrix& a, double tol = 1e-10) {
  REQUIRE(prep.rows == a.rows());
  REQUIRE(prep.cols == a.cols());
  const ComplexVector got = simulate(prep.circuit).amplitudes();
  CHECK(qtest::max_abs_diff(got, normalized_vec(a)) < tol);
}

void check_registers(const MatrixStatePrep& prep) {
  CHECK((static_cast<std::int64_t>(1) << prep.creg.size()) == prep.cols);
  CHECK((static_cast<std::int64_t>(1) << prep.rreg.size()) == prep.rows);
  CHECK(prep.creg.size() + prep.rreg.size() == static_cast<std::size_t>(prep.num_qubits()));
}

MatrixStatePrep prep_of(const ComplexMatrix& a) { return synthesize_state_prep(a); }

}  // namespace

TEST_CASE("identity_prep") {
  MatrixStatePrep p2 = identity_prep(2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const ComplexVector amps = simulate(p2.circuit).amplitudes();
  CHECK(std::abs(amps[0] - inv_sqrt2) < 1e-12);
  CHECK(std::abs(amps[3] - inv_sqrt2) < 1e-12);
  check_prepares(p2, ComplexMatrix::identity(2), 1e-12);

  MatrixStatePrep p4 = identity_prep(4);
  CHECK(p4.circuit.gate_count() == 4);
  CHECK(p4.circuit.depth() == 2);
  check_registers(p4);
  check_prepares(p4, ComplexMatrix::identity(4), 1e-12);

  // Overlap with the synthesized I2/sqrt(2) state is 1.
  MatrixStatePrep synth = synthesize_state_prep(ComplexMatrix::identity(2));
  const Complex ov = state_overlap(simulate(p2.circuit), simulate(synth.circuit));
  CHECK(std::abs(ov - 1.0) < 1e-10);

  CHECK_THROWS_AS(identity_prep(3), DimensionError);
  CHECK_THROWS_AS(identity_prep(1), DimensionError);
}

TEST_CASE("circuit_matrix_prep") {
  check_prepares(circuit_matrix_prep(qc_empty(1)), ComplexMatrix::identity(2), 1e-12);

  QuantumCircuit x(1);
  x.add(Gate::x(0));
  ComplexMatrix mx(2, 2, {Complex{0}, Complex{1}, Complex{1}, Complex{0}});
  check_prepares(circuit_matrix_prep(x), mx, 1e-12);

  auto rng = make_rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    QuantumCircuit u = qtest::random_circuit(rng, 2, 6);
    MatrixStatePrep p = circuit_matrix_prep(u);
    check_prepares(p, circuit_unitary(u) /* frobenius = 2 for unitary */, 1e-10);
    CHECK(p.circuit.gate_count() == u.gate_count() + 2 * u.num_qubits());
    CHECK(p.circuit.depth() == u.depth() + 2);
    check_registers(p);
  }
}

TEST_CASE("conjugate / transpose / adjoint") {
  auto rng = make_rng(42);

  // Real matrix: conjugate leaves the state alone.
  ComplexMatrix real_a(2, 2, {Complex{1}, Complex{2}, Complex{3}, Complex{4}});
  check_prepares(conjugate(prep_of(real_a)), real_a);

  ComplexMatrix diag_i(2, 2, {Complex{0, 1}, Complex{0}, Complex{0}, Complex{1, 0}});
  check_prepares(conjugate(prep_of(diag_i)), qtrace::conjugate(diag_i));

  // Double conjugate restores the state.
  ComplexMatrix a = random_matrix(rng, 2, 4);
  check_prepares(conjugate(conjugate(prep_of(a))), a);

  // Spec example: vec([[1,2],[3,4]]) = [1,3,2,4], transposed [1,2,3,4].
  ComplexMatrix m(2, 2, {Complex{1}, Complex{2}, Complex{3}, Complex{4}});
  MatrixStatePrep mt = transpose(prep_of(m));
  check_prepares(mt, qtrace::transpose(m));
  CHECK(mt.circuit.gate_count() == prep_of(m).circuit.gate_count());
  CHECK(mt.circuit.depth() == prep_of(m).circuit.depth());

  for (int trial = 0; trial < 6; ++trial) {
    ComplexMatrix r = random_matrix(rng, 4, 2);
    check_prepares(transpose(prep_of(r)), qtrace::transpose(r));
    check_prepares(adjoint(prep_of(r)), qtrace::adjoint(r));
    check_registers(transpose(prep_of(r)));
  }

  // Hermitian matrix: adjoint preserves the state; adjoint is an involution.
  ComplexMatrix h(2, 2, {Complex{1}, Complex{0, 1}, Complex{0, -1}, Complex{2}});
  check_prepares(adjoint(prep_of(h)), h);
  ComplexMatrix r = random_matrix(rng, 2, 2);
  check_prepares(adjoint(adjoint(prep_of(r))), r);
}

TEST_CASE("vec and rvec") {
  MatrixStatePrep p = identity_prep(2);
  MatrixStatePrep v = vec(p);
  CHECK(v.rows == 4);
  CHECK(v.cols == 1);
  CHECK(v.creg.empty());
  // Amplitudes unchanged; prepares |vec(I2)> as a 4-vector.
  CHECK(qtest::max_abs_diff(simulate(v.circuit).amplitudes(),
                            simulate(p.circuit).amplitudes()) == 0.0);

  MatrixStatePrep rv = rvec(p);
  CHECK(rv.rows == 1);
  CHECK(rv.cols == 4);
  CHECK(rv.rreg.empty());
  CHECK(qtest::max_abs_diff(simulate(rv.circuit).amplitudes(),
                            simulate(p.circuit).amplitudes()) < 1e-12);
  // Metadata round-trip.
  MatrixStatePrep back = transpose(rv);
  CHECK(back.rows == 4);
  CHECK(back.cols == 1);
}

TEST_CASE("pad operations") {
  // pad_zero_columns(I2, 1): amplitudes [1,0,0,1,0,0,0,0]/sqrt(2).
  MatrixStatePrep padded = pad_zero_columns(identity_prep(2), 1);
  ComplexMatrix expect(2, 4);
  expect(0, 0) = 1.0;
  expect(1, 1) = 1.0;
  check_prepares(padded, expect, 1e-12);
  CHECK(padded.circuit.gate_count() == identity_prep(2).circuit.gate_count());
  CHECK(std::abs(simulate(padded.circuit).norm() - 1.0) < 1e-12);

  // pad_zero_rows on a basis column vector: [1,0,0,0].
  ComplexMatrix e0(2, 1);
  e0(0, 0) = 1.0;
  MatrixStatePrep taller = pad_zero_rows(prep_of(e0), 1);
  ComplexMatrix expect_col(4, 1);
  expect_col(0, 0) = 1.0;
  check_prepares(taller, expect_col, 1e-12);

  // Zero rows interleave per column on a genuine matrix.
  auto rng = make_rng(43);
  ComplexMatrix a = random_matrix(rng, 2, 2);
  ComplexMatrix stacked(4, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) stacked(i, j) = a(i, j);
  check_prepares(pad_zero_rows(prep_of(a), 1), stacked);

  // pad metadata and gate count.
  MatrixStatePrep both = pad(prep_of(a), 2, 1);
  CHECK(both.rows == 4 * a.rows());
  CHECK(both.cols == 2 * a.cols());
  CHECK(both.circuit.gate_count() == prep_of(a).circuit.gate_count());
  ComplexMatrix embedded(8, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) embedded(i, j) = a(i, j);
  check_prepares(both, embedded);

  CHECK_THROWS_AS(pad_zero_columns(prep_of(a), 0), DimensionError);
  CHECK_THROWS_AS(pad_zero_rows(prep_of(a), 0), DimensionError);
  // pad accepts zero on either side.
  CHECK(pad(prep_of(a), 0, 0).rows == a.rows());
}

TEST_CASE("matrix_vec") {
  // A = I2 via identity_prep, b = e0: first two amplitudes [1/sqrt2, 0].
  ComplexMatrix e0(2, 1);
  e0(0, 0) = 1.0;
  MatrixStatePrep mv = matrix_vec(identity_prep(2), prep_of(e0));
  CHECK(mv.rows == 4);
  CHECK(mv.cols == 1);
  const ComplexVector amps = simulate(mv.circuit).amplitudes();
  CHECK(std::abs(amps[0] - 1.0 / std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(amps[1]) < 1e-10);

  // b = e0 extracts the first column of A over ||A||_F.
  auto rng = make_rng(44);
  for (int trial = 0; trial < 6; ++trial) {
    ComplexMatrix a = random_matrix(rng, 4, 2);
    ComplexMatrix b = random_matrix(rng, 2, 1);
    MatrixStatePrep y = matrix_vec(prep_of(a), prep_of(b));
    const ComplexVector got = simulate(y.circuit).amplitudes();
    // Oracle block: A b / (||A||_F ||b||_2).
    ComplexVector ab = matvec(a, vec(b));
    const double scale = frobenius(a) * frobenius(b);
    for (std::int64_t i = 0; i < a.rows(); ++i) {
      CHECK(std::abs(got[static_cast<std::size_t>(i)] - ab[static_cast<std::size_t>(i)] / scale) <
            1e-10);
    }
    CHECK(std::abs(simulate(y.circuit).norm() - 1.0) < 1e-12);
    CHECK(y.circuit.gate_count() ==
          prep_of(a).circuit.gate_count() + prep_of(b).circuit.gate_count());
  }

  CHECK_THROWS_AS(matrix_vec(identity_prep(2), identity_prep(2)), DimensionError);
  ComplexMatrix b4(4, 1);
  b4(0, 0) = 1.0;
  CHECK_THROWS_AS(matrix_vec(identity_prep(2), prep_of(b4)), DimensionError);
}

TEST_CASE("kronecker") {
  // identity (x) identity prepares the big identity.
  check_prepares(kronecker(identity_prep(2), identity_prep(2)), ComplexMatrix::identity(4), 1e-12);

  auto rng = make_rng(45);
  for (int trial = 0; trial < 8; ++trial) {
    ComplexMatrix a = random_matrix(rng, 2, 2);
    ComplexMatrix b = random_matrix(rng, 2, 2);
    MatrixStatePrep k = kronecker(prep_of(a), prep_of(b));
    check_prepares(k, kron(a, b));
    CHECK(k.circuit.gate_count() ==
          prep_of(a).circuit.gate_count() + prep_of(b).circuit.gate_count());
    CHECK(k.circuit.depth() ==
          std::max(prep_of(a).circuit.depth(), prep_of(b).circuit.depth()));
    check_registers(k);
  }

  // Rectangular blocks and a 3-way product through the single-permutation path.
  for (int trial = 0; trial < 4; ++trial) {
    ComplexMatrix a = random_matrix(rng, 2, 4);
    ComplexMatrix b = random_matrix(rng, 2, 1);
    ComplexMatrix c = random_matrix(rng, 1, 2);
    MatrixStatePrep k = kronecker_many({prep_of(a), prep_of(b), prep_of(c)});
    check_prepares(k, kron(kron(a, b), c));
    const std::int64_t total = prep_of(a).circuit.gate_count() +
                               prep_of(b).circuit.gate_count() +
                               prep_of(c).circuit.gate_count();
    CHECK(k.circuit.gate_count() == total);
  }
}

TEST_CASE("overlap") {
  auto rng = make_rng(46);
  // psi = phi: first amplitude 1.
  ComplexMatrix v = random_matrix(rng, 4, 1);
  MatrixStatePrep same = overlap(prep_of(v), prep_of(v));
  CHECK(std::abs(simulate(same.circuit).amplitudes()[0] - 1.0) < 1e-10);

  // Orthogonal basis vectors: first amplitude 0.
  ComplexMatrix e0(2, 1), e1(2, 1);
  e0(0, 0) = 1.0;
  e1(1, 0) = 1.0;
  MatrixStatePrep orth = overlap(prep_of(e0), prep_of(e1));
  CHECK(std::abs(simulate(orth.circuit).amplitudes()[0]) < 1e-12);

  // Random pairs match the conjugate-dot oracle.
  for (int trial = 0; trial < 8; ++trial) {
    ComplexMatrix x = random_matrix(rng, 4, 1);
    ComplexMatrix y = random_matrix(rng, 4, 1);
    MatrixStatePrep ov = overlap(prep_of(x), prep_of(y));
    Complex expect{};
    for (int i = 0; i < 4; ++i) expect += std::conj(x(i, 0)) * y(i, 0);
    expect /= frobenius(x) * frobenius(y);
    CHECK(std::abs(simulate(ov.circuit).amplitudes()[0] - expect) < 1e-12);
    CHECK(ov.circuit.gate_count() ==
          prep_of(x).circuit.gate_count() + prep_of(y).circuit.gate_count());
    CHECK(ov.num_qubits() == prep_of(x).num_qubits());
  }

  CHECK_THROWS_AS(overlap(identity_prep(2), vec(identity_prep(2))), DimensionError);
}

TEST_CASE("register actions: column register multiplies by M(U)^T, row by M(Q)") {
  auto rng = make_rng(47);
  for (int trial = 0; trial < 8; ++trial) {
    ComplexMatrix a = random_matrix(rng, 2, 2);
    MatrixStatePrep p = prep_of(a);
    QuantumCircuit u = qtest::random_circuit(rng, 1, 4);
    ComplexMatrix mu = circuit_unitary(u);

    // Column register.
    QuantumCircuit on_cols = qc_compose(p.circuit, u, p.creg);
    ComplexMatrix expect_c = matmul(a, qtrace::transpose(mu));
    CHECK(qtest::max_abs_diff(simulate(on_cols).amplitudes(), normalized_vec(expect_c)) < 1e-10);

    // Row register.
    QuantumCircuit on_rows = qc_compose(p.circuit, u, p.rreg);
    ComplexMatrix expect_r = matmul(mu, a);
    CHECK(qtest::max_abs_diff(simulate(on_rows).amplitudes(), normalized_vec(expect_r)) < 1e-10);
  }
}

TEST_CASE("level-1/2 semantics sweep, dims 2 and 4") {
  auto rng = make_rng(48);
  for (int trial = 0; trial < 10; ++trial) {
    const std::int64_t m = (trial % 2 == 0) ? 2 : 4;
    const std::int64_t n = (trial % 3 == 0) ? 4 : 2;
    ComplexMatrix a = random_matrix(rng, m, n);
    MatrixStatePrep p = prep_of(a);
    check_prepares(p, a);
    check_prepares(conjugate(p), qtrace::conjugate(a));
    check_prepares(transpose(p), qtrace::transpose(a));
    check_prepares(adjoint(p), qtrace::adjoint(a));
    check_registers(transpose(p));

    ComplexMatrix padded_cols(m, 2 * n);
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = 0; j < n; ++j) padded_cols(i, j) = a(i, j);
    check_prepares(pad_zero_columns(p, 1), padded_cols);
  }
}
