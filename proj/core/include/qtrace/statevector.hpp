#pragma once

#include <cstdint>

#include "qtrace/linalg.hpp"

namespace qtrace {

/// 2^q complex amplitudes with MSB-first indexing: for basis index t with
/// binary expansion b_0 ... b_{q-1}, bit b_0 belongs to qubit 0.
class StateVector {
 public:
  static StateVector ground(int num_qubits);
  static StateVector basis(int num_qubits, std::uint64_t index);
  /// Takes ownership of amplitudes; must have length 2^q and unit norm.
  StateVector(int num_qubits, ComplexVector amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << num_qubits_; }
  const ComplexVector& amplitudes() const { return amps_; }
  ComplexVector& amplitudes() { return amps_; }
  double norm() const;

  /// Bit of qubit `qubit` in basis index `t`.
  int bit(std::uint64_t t, int qubit) const {
    return static_cast<int>((t >> (num_qubits_ - 1 - qubit)) & 1u);
  }

 private:
  int num_qubits_;
  ComplexVector amps_;
};

/// Conjugate inner product <a|b>.
Complex state_overlap(const StateVector& a, const StateVector& b);

}  // namespace qtrace
