#pragma once

#include <cstdint>
#include <vector>

#include "qtrace/circuit.hpp"

namespace qtrace {

/// A circuit plus (rows, cols) metadata: applying the circuit to |0...0>
/// yields amplitudes vec(A)/||A||_F for the m x n matrix A it prepares.
/// creg lists the column-register qubits (MSB side, log2 cols of them) and
/// rreg the row-register qubits. Every operation in this module returns a
/// prep in standard layout: creg = [0..log2 cols), rreg = the rest. The
/// lists are kept explicit because the trace compiler tracks non-contiguous
/// register placements before its final re-indexing.
struct MatrixStatePrep {
  QuantumCircuit circuit;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<int> creg;
  std::vector<int> rreg;

  int num_qubits() const { return circuit.num_qubits(); }
  bool is_column_vector() const { return cols == 1; }
  bool is_row_vector() const { return rows == 1; }
};

/// Wraps a circuit as an m x n prep with standard contiguous registers.
MatrixStatePrep make_matrix_prep(QuantumCircuit circuit, std::int64_t rows, std::int64_t cols);

/// Prep of I_n / sqrt(n) as the maximally entangled state: q Hadamards on
/// the column register, q CNOTs onto the row register. g = 2q, d = 2.
MatrixStatePrep identity_prep(std::int64_t n);

/// Prep of M(U): apply U to the row register of the identity prep.
/// g = g(U) + 2q, d = d(U) + 2.
MatrixStatePrep circuit_matrix_prep(const QuantumCircuit& u);

MatrixStatePrep conjugate(const MatrixStatePrep& a);

/// Prep of A^T via the register-swap qubit permutation; g and d unchanged.
MatrixStatePrep transpose(const MatrixStatePrep& a);

/// Metadata-only: same circuit reinterpreted as the (mn) x 1 column vec(A).
MatrixStatePrep vec(const MatrixStatePrep& a);

/// transpose(vec(a)): vec(A) read as a 1 x (mn) row vector. Metadata-only.
MatrixStatePrep rvec(const MatrixStatePrep& a);

/// Prep of [A | 0] with (2^k - 1)n zero columns: k fresh MSB qubits.
MatrixStatePrep pad_zero_columns(const MatrixStatePrep& a, int k);

/// Prep of A stacked on (2^r - 1)m zero rows: an empty register inserted
/// between the column and row registers.
MatrixStatePrep pad_zero_rows(const MatrixStatePrep& a, int r);

/// Rows and columns padding combined; either count may be zero (no-op side).
MatrixStatePrep pad(const MatrixStatePrep& a, int r, int k);

/// conjugate . transpose (order immaterial).
MatrixStatePrep adjoint(const MatrixStatePrep& a);

/// Vector prep of y with y[0..m) = A b / (||A||_F ||b||_2) and unspecified
/// garbage beyond: applies qc_transpose of b's circuit to the column
/// register, then reads the result as a vector. g = g_A + g_b.
MatrixStatePrep matrix_vec(const MatrixStatePrep& a, const MatrixStatePrep& b);

/// Prep of A (x) B: tensor the circuits, then one SWAP-free register
/// reordering. g = g_A + g_B, d = max(d_A, d_B).
MatrixStatePrep kronecker(const MatrixStatePrep& a, const MatrixStatePrep& b);

/// k-ary Kronecker chain with the register permutation computed once and
/// applied once, so the build cost stays linear in the total gate count.
MatrixStatePrep kronecker_many(const std::vector<MatrixStatePrep>& inputs);

/// Vector prep whose amplitude 0 is <psi|phi>: adjoint(psi) then matrix_vec.
/// No additional qubits; g = g_psi + g_phi.
MatrixStatePrep overlap(const MatrixStatePrep& psi, const MatrixStatePrep& phi);

}  // namespace qtrace
