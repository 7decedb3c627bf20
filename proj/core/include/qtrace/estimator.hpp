#pragma once

#include <cstdint>

#include "qtrace/simulator.hpp"
#include "qtrace/trace_encoding.hpp"

namespace qtrace {

enum class EstimateMode { Exact, Hadamard, HadamardImag, Swap };

struct EstimateOptions {
  EstimateMode mode = EstimateMode::Exact;
  std::int64_t shots = 1'000'000;
  std::uint64_t seed = 0;
};

struct TraceEstimate {
  Complex overlap;  // estimated <psi|phi>
  Complex trace;    // overlap scaled by norm_product when present
  bool phase_blind = false;
  bool has_norm = false;
  // Diagnostics for the shot-based paths (NaN when not applicable).
  double p0_real, p0_hat_real;
  double p0_imag, p0_hat_imag;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  int qubits = 0;
};

/// Exact mode reads <psi|phi> off two statevectors. Hadamard mode runs the
/// interference test over U_psi^dagger U_phi and reports 2*p0_hat - 1 (real
/// part; the HadamardImag mode adds the S-dagger pass for the imaginary
/// part). Swap mode is phase-blind: it reports |<psi|phi>| only.
TraceEstimate estimate_trace(const MVTraceOutput& out, const EstimateOptions& opts);

}  // namespace qtrace
