#pragma once

#include <cstdint>
#include <vector>

#include "qtrace/gate.hpp"

namespace qtrace {

/// A bijection sigma on {0..q-1}. Acting on basis labels, the induced unitary
/// S_sigma maps |b_0 ... b_{q-1}> to the state whose bit at position i is
/// b_{sigma(i)} (qubit 0 is the most significant index bit).
class QubitPermutation {
 public:
  explicit QubitPermutation(std::vector<int> map);
  static QubitPermutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& map() const { return map_; }

  QubitPermutation inverse() const;
  /// this after inner: result(i) = (*this)(inner(i)).
  QubitPermutation compose(const QubitPermutation& inner) const;

 private:
  std::vector<int> map_;
};

/// Ordered gate list on a fixed number of qubits. Value type: every
/// circuit-level operation below returns a fresh circuit.
class QuantumCircuit {
 public:
  QuantumCircuit() : num_qubits_(1) {}
  explicit QuantumCircuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::int64_t gate_count() const { return static_cast<std::int64_t>(gates_.size()); }

  /// Critical path over qubit-overlap dependencies.
  int depth() const;
  std::int64_t swap_count() const;

  /// Appends a gate (validates qubit bounds). Used by builders; the public
  /// non-destructive path is qc_add_gate.
  void add(const Gate& g);

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

/// Empty circuit on q >= 1 qubits; its unitary is the identity.
QuantumCircuit qc_empty(int q);

/// Width q(Q)+q(W); Q acts on the MSB qubits, W on the LSB qubits, so the
/// unitary is kron(M(Q), M(W)).
QuantumCircuit qc_tensor(const QuantumCircuit& q_msb, const QuantumCircuit& w_lsb);

/// W followed by Q with Q's qubit i re-targeted to wiring[i]; no SWAP gates
/// are emitted. With a full permutation sigma this realizes
/// M = S_{sigma^-1} M(Q) S_sigma M(W) on width max(q(W), q(Q)).
QuantumCircuit qc_compose(const QuantumCircuit& w, const QuantumCircuit& q,
                          const std::vector<int>& wiring);
QuantumCircuit qc_compose(const QuantumCircuit& w, const QuantumCircuit& q,
                          const QubitPermutation& sigma);

/// New circuit with g placed on the qubits in delta, appended after q's gates.
QuantumCircuit qc_add_gate(const QuantumCircuit& q, const Gate& g, const std::vector<int>& delta);

/// M(out) = M(U)^T: reverse the gate order and transpose each gate.
QuantumCircuit qc_transpose(const QuantumCircuit& u);
/// M(out) = conj(M(U)): conjugate each gate in place.
QuantumCircuit qc_conjugate(const QuantumCircuit& u);
/// M(out) = M(U)^dagger: reverse the gate order and invert each gate.
QuantumCircuit qc_inverse(const QuantumCircuit& u);

/// SWAP-free qubit rearrangement: out|0> = S_sigma W|0> with g and d
/// unchanged. Built as inverse -> compose into empty with sigma^-1 wiring ->
/// inverse, which collapses to re-indexing W's gates.
QuantumCircuit qc_permute_bits(const QuantumCircuit& w, const QubitPermutation& sigma);

/// Reference implementation of S_sigma as explicit SWAP gates (for tests and
/// for counting what the SWAP-free path saves).
QuantumCircuit permutation_to_swaps(const QubitPermutation& sigma);

}  // namespace qtrace
