#pragma once

#include "qtrace/linalg.hpp"
#include "qtrace/matrix_state.hpp"

namespace qtrace {

/// Builds a matrix state preparation circuit for a classically stored matrix:
/// the returned circuit maps |0> to exactly vec(A)/||A||_F on log2(rows*cols)
/// qubits. Recursive amplitude encoding: a tree of multiplexed Ry rotations
/// fixes the magnitudes, a ladder of multiplexed Rz installs the phases, and
/// a four-gate tail realizes the leftover common phase so the amplitudes
/// match without any global-phase freedom. Gate count O(rows*cols).
///
/// Requires power-of-two dimensions, rows*cols >= 2, and a nonzero matrix.
MatrixStatePrep synthesize_state_prep(const ComplexMatrix& a);

/// Same encoding for a bare amplitude vector (length a power of two >= 2).
QuantumCircuit synthesize_vector_circuit(const ComplexVector& x);

}  // namespace qtrace
