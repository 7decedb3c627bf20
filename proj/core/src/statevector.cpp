#include "qtrace/statevector.hpp"

#include <cmath>

#include "qtrace/errors.hpp"

namespace qtrace {

StateVector StateVector::ground(int num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 1) throw DimensionError("state needs at least one qubit");
  ComplexVector amps(std::size_t{1} << num_qubits);
  if (index >= amps.size()) throw DimensionError("basis index out of range");
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector::StateVector(int num_qubits, ComplexVector amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 1) throw DimensionError("state needs at least one qubit");
  if (amps_.size() != (std::size_t{1} << num_qubits)) {
    throw DimensionError("amplitude count does not match qubit count");
  }
  if (std::abs(norm() - 1.0) > 1e-8) throw NumericError("state vector is not normalized");
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

Complex state_overlap(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("overlap: width mismatch");
  Complex acc{};
  for (std::size_t t = 0; t < a.amplitudes().size(); ++t) {
    acc += std::conj(a.amplitudes()[t]) * b.amplitudes()[t];
  }
  return acc;
}

}  // namespace qtrace
