#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qtrace/linalg.hpp"
#include "qtrace/matrix_state.hpp"

namespace qtrace {

struct MatrixDims {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
};

/// One Kronecker pairing (1-based matrix indices into the input chain).
struct TracePair {
  int left = 0;
  int right = 0;
};

/// Pairing structure for the trace-of-2k-matrices identity. The even chain
/// pairs even-indexed inputs (left as-is, right transposed), the odd chain
/// pairs odd-indexed inputs from position 3 up, and the pivot A_{k+1}
/// (transposed) lands in the even chain when k is odd, the odd chain when k
/// is even. Chain elements are listed outermost first.
struct TracePlan {
  int k = 0;
  int pivot = 0;  // k + 1
  bool pivot_in_even_chain = false;
  std::vector<TracePair> even_pairs;
  std::vector<TracePair> odd_pairs;
  int l_even = 0;
  int l_odd = 0;
};

/// Validates a 2k-long (k >= 2) power-of-two chain with n_0 = n_{2k} and
/// builds the pairing. Odd-length inputs are the caller's problem: append an
/// identity first.
TracePlan build_trace_plan(const std::vector<MatrixDims>& dims);

/// Classical evaluation of the pairing identity
///   Tr(A_1 ... A_{2k}) = vec(A_1)^T F_even vec(F_odd),
/// where each chain folds as F = X_outer (x) rowvec(F_inner). Independent of
/// the circuit pipeline; agrees with multivariate_trace_oracle.
Complex trace_formula_reference(const std::vector<ComplexMatrix>& chain);

/// The two compiled circuits. <psi|phi> * prod ||A_i||_F = Tr(A_1 ... A_{2k});
/// norm_product carries that rescaling factor when the inputs came from
/// classical matrices.
struct MVTraceOutput {
  MatrixStatePrep u_psi;
  MatrixStatePrep u_phi;
  std::optional<double> norm_product;
};

/// Direct translation of the pairing identity into level-1/2 operations:
/// u_psi = zero-padded vec(conj(A_1)); u_phi = the even Kronecker chain
/// applied to the vectorized odd chain. g(u_psi) = g_{A_1},
/// g(u_phi) = sum of the other gate counts, d(u_phi) <= max even depth +
/// max odd depth.
MVTraceOutput mvtrace_prep(const std::vector<MatrixStatePrep>& inputs);

/// Same prepared states as mvtrace_prep, built as: even-layer tensor, one
/// SWAP-free middle permutation wired through qc_compose, transposed
/// odd-layer tensor, and a final cost-free register re-indexing. Each input
/// gate is copied O(1) times, so the classical cost is O(sum g_i) with no
/// log k factor.
MVTraceOutput mvtrace_prep_optimized(const std::vector<MatrixStatePrep>& inputs);

/// Register lists of one input prep, in whatever global numbering the caller
/// tracks (sizes and relative order are what matter).
struct QubitRegisterSet {
  std::vector<int> rreg;
  std::vector<int> creg;
};

/// The single middle permutation separating the two tensor layers of the
/// optimized build: sigma = lambda_even o lambda_odd^{-1} on the odd layer's
/// qubits, extended with the identity elsewhere. regs holds the register
/// lists of A_1..A_{2k}; only their sizes are used.
QubitPermutation generate_mvtrace_permutation(const TracePlan& plan,
                                              const std::vector<QubitRegisterSet>& regs);

/// Register tracking for the optimized build (the logical execution of the
/// baseline ops, computed on index lists only).
struct MVTraceLayout {
  std::vector<int> even_emission;  // 1-based input indices, layer tensor order
  std::vector<int> odd_emission;
  std::vector<int> lambda_even;  // standard position -> even-layer tensor bit
  std::vector<int> lambda_odd;   // standard position -> odd-layer tensor bit
  int even_width = 0;
  int odd_width = 0;
};

MVTraceLayout mvtrace_layer_layout(const TracePlan& plan, const std::vector<MatrixDims>& dims);

}  // namespace qtrace
