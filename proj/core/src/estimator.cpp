#include "qtrace/estimator.hpp"

#include <cmath>
#include <limits>

#include "qtrace/errors.hpp"

namespace qtrace {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Circuit with <0|C|0> = <psi|phi>: apply U_phi, then U_psi^dagger.
QuantumCircuit overlap_circuit(const MVTraceOutput& out) {
  QuantumCircuit inv_psi = qc_inverse(out.u_psi.circuit);
  return qc_compose(out.u_phi.circuit, inv_psi,
                    QubitPermutation::identity(inv_psi.num_qubits()));
}

}  // namespace

TraceEstimate estimate_trace(const MVTraceOutput& out, const EstimateOptions& opts) {
  if (out.u_psi.num_qubits() != out.u_phi.num_qubits()) {
    throw DimensionError("estimate_trace: psi and phi widths differ");
  }

  TraceEstimate est;
  est.p0_real = est.p0_hat_real = est.p0_imag = est.p0_hat_imag = kNaN;
  est.shots = opts.shots;
  est.seed = opts.seed;
  est.qubits = out.u_psi.num_qubits();

  switch (opts.mode) {
    case EstimateMode::Exact: {
      const StateVector psi = simulate(out.u_psi.circuit);
      const StateVector phi = simulate(out.u_phi.circuit);
      est.overlap = state_overlap(psi, phi);
      break;
    }
    case EstimateMode::Hadamard:
    case EstimateMode::HadamardImag: {
      const QuantumCircuit u = overlap_circuit(out);
      const StateVector ht_state = simulate(hadamard_test_circuit(u, false));
      est.p0_real = measure_qubit0_p0(ht_state);
      const ShotReport real_report = sample_shots(ht_state, opts.shots, opts.seed);
      est.p0_hat_real = real_report.p0_hat;
      double im = 0.0;
      if (opts.mode == EstimateMode::HadamardImag) {
        const StateVector ht_imag = simulate(hadamard_test_circuit(u, true));
        est.p0_imag = measure_qubit0_p0(ht_imag);
        const ShotReport imag_report = sample_shots(ht_imag, opts.shots, opts.seed + 1);
        est.p0_hat_imag = imag_report.p0_hat;
        im = imag_report.derived_estimate;
      }
      est.overlap = Complex{real_report.derived_estimate, im};
      break;
    }
    case EstimateMode::Swap: {
      const int q = out.u_psi.num_qubits();
      QuantumCircuit preps = qc_tensor(qc_tensor(qc_empty(1), out.u_psi.circuit),
                                       out.u_phi.circuit);
      QuantumCircuit full = qc_compose(preps, swap_test_circuit(q),
                                       QubitPermutation::identity(2 * q + 1));
      const StateVector st_state = simulate(full);
      est.p0_real = measure_qubit0_p0(st_state);
      const ShotReport report = sample_shots(st_state, opts.shots, opts.seed);
      est.p0_hat_real = report.p0_hat;
      est.overlap = Complex{std::sqrt(std::max(0.0, report.derived_estimate)), 0.0};
      est.phase_blind = true;
      break;
    }
  }

  est.has_norm = out.norm_product.has_value();
  est.trace = est.has_norm ? est.overlap * *out.norm_product : est.overlap;
  return est;
}

}  // namespace qtrace
