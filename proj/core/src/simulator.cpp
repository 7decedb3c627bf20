#include "qtrace/simulator.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "qtrace/errors.hpp"

namespace qtrace {

namespace {

void apply_single(ComplexVector& a, int q, int qubit, const Mat2& m) {
  const std::uint64_t bit = std::uint64_t{1} << (q - 1 - qubit);
  const std::uint64_t n = a.size();
  for (std::uint64_t t = 0; t < n; ++t) {
    if (t & bit) continue;
    const Complex a0 = a[t];
    const Complex a1 = a[t | bit];
    a[t] = m.a * a0 + m.b * a1;
    a[t | bit] = m.c * a0 + m.d * a1;
  }
}

void apply_controlled_single(ComplexVector& a, int q, int control, int target, const Mat2& m) {
  const std::uint64_t cbit = std::uint64_t{1} << (q - 1 - control);
  const std::uint64_t tbit = std::uint64_t{1} << (q - 1 - target);
  const std::uint64_t n = a.size();
  for (std::uint64_t t = 0; t < n; ++t) {
    if (!(t & cbit) || (t & tbit)) continue;
    const Complex a0 = a[t];
    const Complex a1 = a[t | tbit];
    a[t] = m.a * a0 + m.b * a1;
    a[t | tbit] = m.c * a0 + m.d * a1;
  }
}

void apply_swap(ComplexVector& a, int q, int x, int y) {
  const std::uint64_t xbit = std::uint64_t{1} << (q - 1 - x);
  const std::uint64_t ybit = std::uint64_t{1} << (q - 1 - y);
  const std::uint64_t n = a.size();
  for (std::uint64_t t = 0; t < n; ++t) {
    if ((t & xbit) && !(t & ybit)) std::swap(a[t], a[(t ^ xbit) | ybit]);
  }
}

void apply_gate(ComplexVector& a, int q, const Gate& g) {
  switch (g.kind()) {
    case GateKind::CNOT:
      apply_controlled_single(a, q, g.qubits()[0], g.qubits()[1], {0.0, 1.0, 1.0, 0.0});
      return;
    case GateKind::Swap:
      apply_swap(a, q, g.qubits()[0], g.qubits()[1]);
      return;
    case GateKind::CU1q:
      apply_controlled_single(a, q, g.qubits()[0], g.qubits()[1], single_qubit_matrix(g));
      return;
    default:
      apply_single(a, q, g.qubits()[0], single_qubit_matrix(g));
      return;
  }
}

// Controlled application of a base-set gate, emitted onto `c` with the
// ancilla as control. Two-qubit kinds use the V = sqrt(U) construction.
void add_controlled(QuantumCircuit& c, int ancilla, const Gate& g) {
  switch (g.kind()) {
    case GateKind::X:
      c.add(Gate::cnot(ancilla, g.qubits()[0]));
      return;
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Phase:
    case GateKind::U1q:
      c.add(Gate::cu1q(ancilla, g.qubits()[0], single_qubit_matrix(g)));
      return;
    case GateKind::CNOT: {
      // Toffoli(ancilla, control -> target) via V = sqrt(X).
      const int ctl = g.qubits()[0], tgt = g.qubits()[1];
      const Mat2 v = mat2_sqrt_unitary({0.0, 1.0, 1.0, 0.0});
      c.add(Gate::cu1q(ctl, tgt, v));
      c.add(Gate::cnot(ancilla, ctl));
      c.add(Gate::cu1q(ctl, tgt, mat2_adjoint(v)));
      c.add(Gate::cnot(ancilla, ctl));
      c.add(Gate::cu1q(ancilla, tgt, v));
      return;
    }
    case GateKind::Swap: {
      // Fredkin = CNOT(b<-a sandwich) around a Toffoli.
      const int qa = g.qubits()[0], qb = g.qubits()[1];
      c.add(Gate::cnot(qb, qa));
      add_controlled(c, ancilla, Gate::cnot(qa, qb));
      c.add(Gate::cnot(qb, qa));
      return;
    }
    case GateKind::CU1q: {
      const int ctl = g.qubits()[0], tgt = g.qubits()[1];
      const Mat2 w = mat2_sqrt_unitary(single_qubit_matrix(g));
      c.add(Gate::cu1q(ctl, tgt, w));
      c.add(Gate::cnot(ancilla, ctl));
      c.add(Gate::cu1q(ctl, tgt, mat2_adjoint(w)));
      c.add(Gate::cnot(ancilla, ctl));
      c.add(Gate::cu1q(ancilla, tgt, w));
      return;
    }
  }
}

}  // namespace

StateVector simulate(const QuantumCircuit& circuit, const StateVector& initial) {
  if (circuit.num_qubits() != initial.num_qubits()) {
    throw DimensionError("simulate: circuit and state widths differ");
  }
  ComplexVector amps = initial.amplitudes();
  const int q = circuit.num_qubits();
  for (const Gate& g : circuit.gates()) {
    apply_gate(amps, q, g);
  }
  StateVector out(q, std::move(amps));
  if (std::abs(out.norm() - 1.0) > 1e-12 * static_cast<double>(circuit.gate_count() + 1)) {
    throw NumericError("simulate: norm drifted beyond tolerance");
  }
  return out;
}

StateVector simulate(const QuantumCircuit& circuit) {
  return simulate(circuit, StateVector::ground(circuit.num_qubits()));
}

ComplexMatrix circuit_unitary(const QuantumCircuit& circuit) {
  const std::int64_t n = std::int64_t{1} << circuit.num_qubits();
  ComplexMatrix m(n, n);
  for (std::int64_t col = 0; col < n; ++col) {
    StateVector out = simulate(circuit, StateVector::basis(circuit.num_qubits(),
                                                           static_cast<std::uint64_t>(col)));
    for (std::int64_t row = 0; row < n; ++row) {
      m(row, col) = out.amplitudes()[static_cast<std::size_t>(row)];
    }
  }
  return m;
}

QuantumCircuit hadamard_test_circuit(const QuantumCircuit& u, bool imaginary) {
  QuantumCircuit c(u.num_qubits() + 1);
  c.add(Gate::h(0));
  if (imaginary) c.add(Gate::sdg(0));
  for (const Gate& g : u.gates()) add_controlled(c, 0, g.shifted(1));
  c.add(Gate::h(0));
  return c;
}

QuantumCircuit swap_test_circuit(int q) {
  if (q < 1) throw DimensionError("swap test needs q >= 1");
  QuantumCircuit c(2 * q + 1);
  c.add(Gate::h(0));
  for (int i = 0; i < q; ++i) add_controlled(c, 0, Gate::swap(1 + i, 1 + q + i));
  c.add(Gate::h(0));
  return c;
}

double measure_qubit0_p0(const StateVector& state) {
  const std::size_t half = state.amplitudes().size() / 2;
  double p0 = 0.0;
  for (std::size_t t = 0; t < half; ++t) p0 += std::norm(state.amplitudes()[t]);
  return p0;
}

ShotReport sample_shots(const StateVector& state, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw DimensionError("sample_shots: shots must be >= 1");
  const double p0 = measure_qubit0_p0(state);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::int64_t zeros = 0;
  for (std::int64_t s = 0; s < shots; ++s) {
    if (unif(rng) < p0) ++zeros;
  }
  ShotReport r;
  r.shots = shots;
  r.zeros = zeros;
  r.seed = seed;
  r.p0_hat = static_cast<double>(zeros) / static_cast<double>(shots);
  r.derived_estimate = 2.0 * r.p0_hat - 1.0;
  return r;
}

}  // namespace qtrace
