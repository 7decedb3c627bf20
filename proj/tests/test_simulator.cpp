#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtrace/errors.hpp"
#include "qtrace/simulator.hpp"
#include "test_util.hpp"

using namespace qtrace;
using qtest::make_rng;

TEST_CASE("MSB-first indexing") {
  // H on qubit 0 of a 2-qubit register from |00>: superposition on the MSB.
  QuantumCircuit c(2);
  c.add(Gate::h(0));
  StateVector s = simulate(c);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.amplitudes()[0] - inv_sqrt2) < 1e-12);
  CHECK(std::abs(s.amplitudes()[2] - inv_sqrt2) < 1e-12);
  CHECK(std::abs(s.amplitudes()[1]) < 1e-12);
  CHECK(std::abs(s.amplitudes()[3]) < 1e-12);

  // Empty circuit leaves any initial state alone.
  StateVector init = StateVector::basis(2, 3);
  CHECK(qtest::max_abs_diff(simulate(qc_empty(2), init).amplitudes(), init.amplitudes()) == 0.0);

  // Bell pair.
  QuantumCircuit bell(2);
  bell.add(Gate::h(0));
  bell.add(Gate::cnot(0, 1));
  StateVector b = simulate(bell);
  CHECK(std::abs(b.amplitudes()[0] - inv_sqrt2) < 1e-12);
  CHECK(std::abs(b.amplitudes()[3] - inv_sqrt2) < 1e-12);

  CHECK_THROWS_AS(simulate(qc_empty(2), StateVector::ground(3)), DimensionError);
}

TEST_CASE("norm preserved gate by gate") {
  auto rng = make_rng(31);
  QuantumCircuit c = qtest::random_circuit(rng, 4, 20);
  StateVector s = StateVector::ground(4);
  QuantumCircuit prefix(4);
  for (const Gate& g : c.gates()) {
    prefix.add(g);
    StateVector out = simulate(prefix);
    CHECK(std::abs(out.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("hadamard test probabilities") {
  // U = identity on |0>: p0 = 1.
  QuantumCircuit ht = hadamard_test_circuit(qc_empty(1), false);
  CHECK(measure_qubit0_p0(simulate(ht)) == doctest::Approx(1.0).epsilon(1e-12));

  // U = X: <0|X|0> = 0, p0 = 1/2.
  QuantumCircuit x(1);
  x.add(Gate::x(0));
  CHECK(measure_qubit0_p0(simulate(hadamard_test_circuit(x, false))) ==
        doctest::Approx(0.5).epsilon(1e-12));

  // Random circuits: p0 = (1 + Re<0|U|0>)/2 and the S-dagger variant gives
  // the imaginary part. The oracle expectation comes from plain simulation.
  auto rng = make_rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const int q = 2 + (trial % 2);
    QuantumCircuit u = qtest::random_circuit(rng, q, 8);
    const Complex amp0 = simulate(u).amplitudes()[0];  // <0|U|0>
    const double p0_re = measure_qubit0_p0(simulate(hadamard_test_circuit(u, false)));
    const double p0_im = measure_qubit0_p0(simulate(hadamard_test_circuit(u, true)));
    CHECK(p0_re == doctest::Approx(0.5 * (1.0 + amp0.real())).epsilon(1e-12));
    CHECK(p0_im == doctest::Approx(0.5 * (1.0 + amp0.imag())).epsilon(1e-12));
  }
}

TEST_CASE("hadamard test construction cost stays linear") {
  auto rng = make_rng(33);
  QuantumCircuit u = qtest::random_circuit(rng, 3, 40);
  QuantumCircuit ht = hadamard_test_circuit(u, false);
  CHECK(ht.gate_count() <= 7 * u.gate_count() + 2);
  CHECK(ht.num_qubits() == u.num_qubits() + 1);
}

TEST_CASE("swap test probabilities") {
  auto rng = make_rng(34);
  for (int trial = 0; trial < 8; ++trial) {
    const int q = 1 + (trial % 3);
    QuantumCircuit up = qtest::random_circuit(rng, q, 5);
    QuantumCircuit vp = (trial % 4 == 0) ? up : qtest::random_circuit(rng, q, 5);
    const Complex ov = state_overlap(simulate(up), simulate(vp));

    QuantumCircuit preps = qc_tensor(qc_tensor(qc_empty(1), up), vp);
    QuantumCircuit full =
        qc_compose(preps, swap_test_circuit(q), QubitPermutation::identity(2 * q + 1));
    const double p0 = measure_qubit0_p0(simulate(full));
    CHECK(p0 == doctest::Approx(0.5 * (1.0 + std::norm(ov))).epsilon(1e-12));
  }

  // psi = phi -> p0 = 1; orthogonal basis states -> p0 = 1/2.
  QuantumCircuit id1(1);
  QuantumCircuit x1(1);
  x1.add(Gate::x(0));
  QuantumCircuit same = qc_compose(qc_tensor(qc_tensor(qc_empty(1), id1), id1),
                                   swap_test_circuit(1), QubitPermutation::identity(3));
  CHECK(measure_qubit0_p0(simulate(same)) == doctest::Approx(1.0).epsilon(1e-12));
  QuantumCircuit orth = qc_compose(qc_tensor(qc_tensor(qc_empty(1), id1), x1),
                                   swap_test_circuit(1), QubitPermutation::identity(3));
  CHECK(measure_qubit0_p0(simulate(orth)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("shot sampling") {
  // p0 = 1 and p0 = 1/2 ground truths.
  CHECK(measure_qubit0_p0(StateVector::ground(3)) == 1.0);
  StateVector uniform(2, {0.5, 0.5, 0.5, 0.5});
  CHECK(measure_qubit0_p0(uniform) == doctest::Approx(0.5).epsilon(1e-12));

  // p0 = 0.75 state; a million shots land within 0.002 (3 sigma = 0.0013).
  StateVector s(1, {std::sqrt(0.75), std::sqrt(0.25)});
  ShotReport r = sample_shots(s, 1000000, 12345);
  CHECK(std::abs(r.p0_hat - 0.75) < 0.002);
  CHECK(r.derived_estimate == doctest::Approx(2.0 * r.p0_hat - 1.0));

  // Determinism: identical (state, shots, seed) -> identical report.
  ShotReport r2 = sample_shots(s, 10000, 7);
  ShotReport r3 = sample_shots(s, 10000, 7);
  CHECK(r2.zeros == r3.zeros);
  ShotReport r4 = sample_shots(s, 10000, 8);
  CHECK(r2.zeros != r4.zeros);
}

TEST_CASE("shot error shrinks like 1/sqrt(shots)") {
  StateVector s(1, {std::sqrt(0.6), std::sqrt(0.4)});
  // Seed picked so the small-sample error is not anomalously tiny.
  const std::uint64_t seed = 2;
  const double err_small = std::abs(sample_shots(s, 10000, seed).p0_hat - 0.6);
  const double err_large = std::abs(sample_shots(s, 1000000, seed).p0_hat - 0.6);
  const double ratio = err_small / err_large;
  CHECK(ratio >= 5.0);
  CHECK(ratio <= 20.0);
}
