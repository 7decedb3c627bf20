#include "qtrace/gate.hpp"

#include <cmath>
#include <stdexcept>

#include "qtrace/errors.hpp"

namespace qtrace {

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Phase:
    case GateKind::U1q:
      return 1;
    case GateKind::CNOT:
    case GateKind::Swap:
    case GateKind::CU1q:
      return 2;
  }
  throw std::logic_error("unknown gate kind");
}

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::CNOT: return "cnot";
    case GateKind::Swap: return "swap";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::Phase: return "phase";
    case GateKind::U1q: return "u1q";
    case GateKind::CU1q: return "cu1q";
  }
  throw std::logic_error("unknown gate kind");
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat2_adjoint(const Mat2& x) {
  return {std::conj(x.a), std::conj(x.c), std::conj(x.b), std::conj(x.d)};
}

bool mat2_is_unitary(const Mat2& x, double tol) {
  const Mat2 p = mat2_mul(mat2_adjoint(x), x);
  return std::abs(p.a - 1.0) <= tol && std::abs(p.b) <= tol && std::abs(p.c) <= tol &&
         std::abs(p.d - 1.0) <= tol;
}

Mat2 mat2_sqrt_unitary(const Mat2& u) {
  const Complex tr = u.a + u.d;
  const Complex det = u.a * u.d - u.b * u.c;
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  const Complex l1 = 0.5 * (tr + disc);
  const Complex l2 = 0.5 * (tr - disc);

  // Scalar case: a unitary with a repeated eigenvalue is lambda * I.
  if (std::abs(l1 - l2) < 1e-12) {
    const Complex s = std::sqrt(l1);
    return {s, 0.0, 0.0, s};
  }

  // Columns of (U - l2 I) span the l1 eigenspace; the orthogonal complement
  // is the l2 eigenspace since U is normal.
  const Complex c0a = u.a - l2, c0b = u.c;
  const Complex c1a = u.b, c1b = u.d - l2;
  Complex va, vb;
  if (std::norm(c0a) + std::norm(c0b) >= std::norm(c1a) + std::norm(c1b)) {
    va = c0a;
    vb = c0b;
  } else {
    va = c1a;
    vb = c1b;
  }
  const double nv = std::sqrt(std::norm(va) + std::norm(vb));
  va /= nv;
  vb /= nv;
  const Complex wa = -std::conj(vb), wb = std::conj(va);

  const Complex s1 = std::sqrt(l1), s2 = std::sqrt(l2);
  // s1 * v v* + s2 * w w*
  return {s1 * va * std::conj(va) + s2 * wa * std::conj(wa),
          s1 * va * std::conj(vb) + s2 * wa * std::conj(wb),
          s1 * vb * std::conj(va) + s2 * wb * std::conj(wa),
          s1 * vb * std::conj(vb) + s2 * wb * std::conj(wb)};
}

namespace {

std::vector<double> mat2_params(const Mat2& u) {
  return {u.a.real(), u.a.imag(), u.b.real(), u.b.imag(),
          u.c.real(), u.c.imag(), u.d.real(), u.d.imag()};
}

Mat2 params_mat2(const std::vector<double>& p) {
  return {{p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]}, {p[6], p[7]}};
}

}  // namespace

Gate::Gate(GateKind kind, std::vector<int> qubits, std::vector<double> params)
    : kind_(kind), qubits_(std::move(qubits)), params_(std::move(params)) {
  if (static_cast<int>(qubits_.size()) != gate_arity(kind_)) {
    throw DimensionError("gate " + gate_kind_name(kind_) + ": wrong number of qubits");
  }
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (qubits_[i] < 0) throw DimensionError("gate qubit index is negative");
    for (std::size_t j = i + 1; j < qubits_.size(); ++j) {
      if (qubits_[i] == qubits_[j]) throw DimensionError("gate qubit indices must be distinct");
    }
  }
  std::size_t expected_params = 0;
  switch (kind_) {
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Phase:
      expected_params = 1;
      break;
    case GateKind::U1q:
    case GateKind::CU1q:
      expected_params = 8;
      break;
    default:
      break;
  }
  if (params_.size() != expected_params) {
    throw DimensionError("gate " + gate_kind_name(kind_) + ": wrong parameter count");
  }
  if (kind_ == GateKind::U1q || kind_ == GateKind::CU1q) {
    if (!mat2_is_unitary(params_mat2(params_))) {
      throw NumericError("u1q entries do not form a unitary matrix (tol 1e-12)");
    }
  }
}

Gate Gate::h(int q) { return Gate(GateKind::H, {q}, {}); }
Gate Gate::x(int q) { return Gate(GateKind::X, {q}, {}); }
Gate Gate::s(int q) { return Gate(GateKind::S, {q}, {}); }
Gate Gate::sdg(int q) { return Gate(GateKind::Sdg, {q}, {}); }
Gate Gate::cnot(int control, int target) { return Gate(GateKind::CNOT, {control, target}, {}); }
Gate Gate::swap(int a, int b) { return Gate(GateKind::Swap, {a, b}, {}); }
Gate Gate::ry(int q, double theta) { return Gate(GateKind::Ry, {q}, {theta}); }
Gate Gate::rz(int q, double theta) { return Gate(GateKind::Rz, {q}, {theta}); }
Gate Gate::phase(int q, double lambda) { return Gate(GateKind::Phase, {q}, {lambda}); }
Gate Gate::u1q(int q, const Mat2& u) { return Gate(GateKind::U1q, {q}, mat2_params(u)); }
Gate Gate::cu1q(int control, int target, const Mat2& u) {
  return Gate(GateKind::CU1q, {control, target}, mat2_params(u));
}
Gate Gate::make(GateKind kind, std::vector<int> qubits, std::vector<double> params) {
  return Gate(kind, std::move(qubits), std::move(params));
}

Gate Gate::retargeted(const std::vector<int>& delta) const {
  return Gate(kind_, delta, params_);
}

Gate Gate::remapped(const std::vector<int>& wiring) const {
  std::vector<int> q(qubits_.size());
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    const int old = qubits_[i];
    if (old < 0 || old >= static_cast<int>(wiring.size())) {
      throw PermutationError("gate remap: wiring does not cover qubit " + std::to_string(old));
    }
    q[i] = wiring[static_cast<std::size_t>(old)];
  }
  return Gate(kind_, std::move(q), params_);
}

Gate Gate::shifted(int offset) const {
  std::vector<int> q(qubits_.size());
  for (std::size_t i = 0; i < qubits_.size(); ++i) q[i] = qubits_[i] + offset;
  return Gate(kind_, std::move(q), params_);
}

Mat2 single_qubit_matrix(const Gate& g) {
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  switch (g.kind()) {
    case GateKind::H:
      return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::S:
      return {1.0, 0.0, 0.0, Complex{0.0, 1.0}};
    case GateKind::Sdg:
      return {1.0, 0.0, 0.0, Complex{0.0, -1.0}};
    case GateKind::Ry: {
      const double t = g.params()[0] / 2.0;
      return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
    }
    case GateKind::Rz: {
      const double t = g.params()[0] / 2.0;
      return {std::exp(Complex{0.0, -t}), 0.0, 0.0, std::exp(Complex{0.0, t})};
    }
    case GateKind::Phase:
      return {1.0, 0.0, 0.0, std::exp(Complex{0.0, g.params()[0]})};
    case GateKind::U1q:
    case GateKind::CU1q:
      return params_mat2(g.params());
    default:
      throw DimensionError("single_qubit_matrix: gate has no 2x2 block");
  }
}

Gate gate_transpose(const Gate& g) {
  switch (g.kind()) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Rz:
    case GateKind::Phase:
    case GateKind::CNOT:
    case GateKind::Swap:
      return g;  // symmetric matrices
    case GateKind::Ry:
      return Gate::ry(g.qubits()[0], -g.params()[0]);
    case GateKind::U1q: {
      const Mat2 u = single_qubit_matrix(g);
      return Gate::u1q(g.qubits()[0], {u.a, u.c, u.b, u.d});
    }
    case GateKind::CU1q: {
      const Mat2 u = single_qubit_matrix(g);
      return Gate::cu1q(g.qubits()[0], g.qubits()[1], {u.a, u.c, u.b, u.d});
    }
  }
  throw std::logic_error("unknown gate kind");
}

Gate gate_conjugate(const Gate& g) {
  switch (g.kind()) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Ry:
    case GateKind::CNOT:
    case GateKind::Swap:
      return g;  // real matrices
    case GateKind::S:
      return Gate::sdg(g.qubits()[0]);
    case GateKind::Sdg:
      return Gate::s(g.qubits()[0]);
    case GateKind::Rz:
      return Gate::rz(g.qubits()[0], -g.params()[0]);
    case GateKind::Phase:
      return Gate::phase(g.qubits()[0], -g.params()[0]);
    case GateKind::U1q: {
      const Mat2 u = single_qubit_matrix(g);
      return Gate::u1q(g.qubits()[0],
                       {std::conj(u.a), std::conj(u.b), std::conj(u.c), std::conj(u.d)});
    }
    case GateKind::CU1q: {
      const Mat2 u = single_qubit_matrix(g);
      return Gate::cu1q(g.qubits()[0], g.qubits()[1],
                        {std::conj(u.a), std::conj(u.b), std::conj(u.c), std::conj(u.d)});
    }
  }
  throw std::logic_error("unknown gate kind");
}

Gate gate_inverse(const Gate& g) { return gate_conjugate(gate_transpose(g)); }

}  // namespace qtrace
