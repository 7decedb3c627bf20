#pragma once

#include <array>
#include <string>
#include <vector>

#include "qtrace/linalg.hpp"

namespace qtrace {

enum class GateKind { H, X, S, Sdg, CNOT, Swap, Ry, Rz, Phase, U1q, CU1q };

int gate_arity(GateKind kind);
std::string gate_kind_name(GateKind kind);  // lowercase, matches the JSON encoding

/// 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
  Complex a, b, c, d;
};

Mat2 mat2_mul(const Mat2& x, const Mat2& y);
Mat2 mat2_adjoint(const Mat2& x);
bool mat2_is_unitary(const Mat2& x, double tol = 1e-12);
/// Principal square root of a 2x2 unitary.
Mat2 mat2_sqrt_unitary(const Mat2& x);

/// A typed gate. `params` holds angles (Ry/Rz/Phase) or the row-major
/// re/im pairs of a 2x2 unitary (U1q, and the controlled block of CU1q).
/// Qubit order for two-qubit kinds: CNOT/CU1q are (control, target).
class Gate {
 public:
  static Gate h(int q);
  static Gate x(int q);
  static Gate s(int q);
  static Gate sdg(int q);
  static Gate cnot(int control, int target);
  static Gate swap(int a, int b);
  static Gate ry(int q, double theta);
  static Gate rz(int q, double theta);
  static Gate phase(int q, double lambda);
  static Gate u1q(int q, const Mat2& u);
  static Gate cu1q(int control, int target, const Mat2& u);
  static Gate make(GateKind kind, std::vector<int> qubits, std::vector<double> params);

  GateKind kind() const { return kind_; }
  const std::vector<int>& qubits() const { return qubits_; }
  const std::vector<double>& params() const { return params_; }
  int arity() const { return gate_arity(kind_); }

  /// Same gate moved to new qubits (delta.size() must equal arity()).
  Gate retargeted(const std::vector<int>& delta) const;
  /// Same gate with every qubit index i replaced by wiring[i].
  Gate remapped(const std::vector<int>& wiring) const;
  /// Same gate with every qubit index shifted by offset.
  Gate shifted(int offset) const;

 private:
  Gate(GateKind kind, std::vector<int> qubits, std::vector<double> params);

  GateKind kind_;
  std::vector<int> qubits_;
  std::vector<double> params_;
};

/// The 2x2 matrix of a single-qubit gate, or of the controlled block of CU1q.
Mat2 single_qubit_matrix(const Gate& g);

/// Per-kind closed-form rules. Each returns a gate of the supported set whose
/// matrix is the transpose / conjugate / inverse of the input's.
Gate gate_transpose(const Gate& g);
Gate gate_conjugate(const Gate& g);
Gate gate_inverse(const Gate& g);

}  // namespace qtrace
