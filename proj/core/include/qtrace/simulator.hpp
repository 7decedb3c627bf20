#pragma once

#include <cstdint>

#include "qtrace/circuit.hpp"
#include "qtrace/statevector.hpp"

namespace qtrace {

/// Applies the circuit's gates in order; each gate is a local amplitude
/// update. Norm is checked after every gate (1e-12 drift budget).
StateVector simulate(const QuantumCircuit& circuit, const StateVector& initial);
StateVector simulate(const QuantumCircuit& circuit);  // from |0...0>

/// M(circuit) assembled column by column from basis-state simulations.
/// Intended for small widths (tests, gate-rule verification).
ComplexMatrix circuit_unitary(const QuantumCircuit& circuit);

/// Fig-1 interference circuit on q(U)+1 qubits: H on the ancilla (qubit 0),
/// each gate of U controlled on the ancilla, H again. p(0) = (1+Re<0|U|0>)/2.
/// The imaginary variant inserts S-dagger after the first H and yields
/// p(0) = (1+Im<0|U|0>)/2. Cost O(g_U): controlled two-qubit gates decompose
/// into at most seven gates of the base set.
QuantumCircuit hadamard_test_circuit(const QuantumCircuit& u, bool imaginary);

/// Fig-2 circuit on 2q+1 qubits: H, controlled-SWAP per qubit pair, H.
/// p(0) = (1 + |<phi|psi>|^2)/2; controlled-SWAPs are decomposed.
QuantumCircuit swap_test_circuit(int q);

/// Probability that measuring qubit 0 alone yields 0.
double measure_qubit0_p0(const StateVector& state);

struct ShotReport {
  std::int64_t shots = 0;
  std::int64_t zeros = 0;
  double p0_hat = 0.0;
  double derived_estimate = 0.0;  // 2*p0_hat - 1
  std::uint64_t seed = 0;
};

/// Bernoulli(p0) sampling of the qubit-0 marginal with a seeded PRNG.
/// Identical (state, shots, seed) give identical reports.
ShotReport sample_shots(const StateVector& state, std::int64_t shots, std::uint64_t seed);

}  // namespace qtrace
