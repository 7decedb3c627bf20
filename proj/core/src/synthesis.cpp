#include "qtrace/synthesis.hpp"

#include <cmath>
#include <span>

#include "qtrace/errors.hpp"

namespace qtrace {

namespace {

constexpr double kAngleTol = 1e-14;

bool all_negligible(std::span<const double> angles) {
  for (double a : angles) {
    if (std::abs(a) > kAngleTol) return false;
  }
  return true;
}

enum class Axis { Ry, Rz };

// Uniformly controlled rotation: applies R(angles[p]) to `target` for every
// control-prefix value p. Recursion over the leading control with the
// half-sum / half-difference split; X R(t) X = R(-t) for both axes makes the
// CNOT sandwich select the right branch. Whole blocks of ~zero angles emit
// nothing.
void emit_ucr(QuantumCircuit& c, Axis axis, std::span<const int> controls, int target,
              std::span<const double> angles) {
  if (all_negligible(angles)) return;
  if (controls.empty()) {
    c.add(axis == Axis::Ry ? Gate::ry(target, angles[0]) : Gate::rz(target, angles[0]));
    return;
  }
  const std::size_t half = angles.size() / 2;
  std::vector<double> plus(half), minus(half);
  for (std::size_t i = 0; i < half; ++i) {
    plus[i] = 0.5 * (angles[i] + angles[half + i]);
    minus[i] = 0.5 * (angles[i] - angles[half + i]);
  }
  const int c0 = controls.front();
  const auto rest = controls.subspan(1);
  emit_ucr(c, axis, rest, target, plus);
  c.add(Gate::cnot(c0, target));
  emit_ucr(c, axis, rest, target, minus);
  c.add(Gate::cnot(c0, target));
}

}  // namespace

QuantumCircuit synthesize_vector_circuit(const ComplexVector& x) {
  const auto n = static_cast<std::int64_t>(x.size());
  const int q = log2_exact(n);
  if (q < 1) throw DimensionError("synthesis needs at least a 2-dimensional target");

  double nrm = 0.0;
  for (const Complex& z : x) nrm += std::norm(z);
  nrm = std::sqrt(nrm);
  if (nrm == 0.0) throw NumericError("cannot synthesize the zero vector");

  QuantumCircuit c = qc_empty(q);

  // Subtree weights, level q down to 0.
  std::vector<std::vector<double>> w(static_cast<std::size_t>(q) + 1);
  w[static_cast<std::size_t>(q)].resize(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    w[static_cast<std::size_t>(q)][t] = std::norm(x[t]) / (nrm * nrm);
  }
  for (int j = q - 1; j >= 0; --j) {
    auto& cur = w[static_cast<std::size_t>(j)];
    const auto& below = w[static_cast<std::size_t>(j) + 1];
    cur.resize(below.size() / 2);
    for (std::size_t p = 0; p < cur.size(); ++p) cur[p] = below[2 * p] + below[2 * p + 1];
  }

  // Magnitude tree: qubit j splits each prefix's weight between its branches.
  std::vector<int> controls;
  for (int j = 0; j < q; ++j) {
    const auto& below = w[static_cast<std::size_t>(j) + 1];
    std::vector<double> angles(below.size() / 2);
    for (std::size_t p = 0; p < angles.size(); ++p) {
      angles[p] = 2.0 * std::atan2(std::sqrt(below[2 * p + 1]), std::sqrt(below[2 * p]));
    }
    emit_ucr(c, Axis::Ry, controls, j, angles);
    controls.push_back(j);
  }

  // Phase ladder, LSB upward; the leftover common phase is global and dropped.
  std::vector<double> phi(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    phi[t] = (std::abs(x[t]) > 0.0) ? std::arg(x[t]) : 0.0;
  }
  for (int j = q - 1; j >= 0; --j) {
    std::vector<double> alpha(phi.size() / 2), next(phi.size() / 2);
    for (std::size_t p = 0; p < alpha.size(); ++p) {
      alpha[p] = phi[2 * p + 1] - phi[2 * p];
      next[p] = 0.5 * (phi[2 * p + 1] + phi[2 * p]);
    }
    std::vector<int> ctrl(controls.begin(), controls.begin() + j);
    emit_ucr(c, Axis::Rz, ctrl, j, alpha);
    phi = std::move(next);
  }

  // The leftover common phase would normally be dropped as unobservable, but
  // downstream trace encodings take conjugate inner products of two separate
  // preps, where per-circuit phases do not cancel. Realize it exactly:
  // Phase(g) X Phase(g) X = e^{ig} I.
  const double residual = phi[0];
  if (std::abs(residual) > kAngleTol) {
    c.add(Gate::phase(0, residual));
    c.add(Gate::x(0));
    c.add(Gate::phase(0, residual));
    c.add(Gate::x(0));
  }

  return c;
}

MatrixStatePrep synthesize_state_prep(const ComplexMatrix& a) {
  if (!is_power_of_two(a.rows()) || !is_power_of_two(a.cols())) {
    throw DimensionError("synthesis requires power-of-two dimensions");
  }
  if (a.rows() * a.cols() < 2) {
    throw DimensionError("1x1 matrices have no qubits to synthesize onto");
  }
  if (frobenius(a) == 0.0) throw NumericError("cannot synthesize the zero matrix");
  QuantumCircuit c = synthesize_vector_circuit(vec(a));
  return make_matrix_prep(std::move(c), a.rows(), a.cols());
}

}  // namespace qtrace
