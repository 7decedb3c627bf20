#include "qtrace/matrix_state.hpp"

#include <numeric>
#include <string>

#include "qtrace/errors.hpp"
#include "qtrace/linalg.hpp"

namespace qtrace {

namespace {

std::vector<int> index_range(int first, int last) {
  std::vector<int> v(static_cast<std::size_t>(last - first));
  std::iota(v.begin(), v.end(), first);
  return v;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

std::vector<int> shifted_by(const std::vector<int>& a, int offset) {
  std::vector<int> v = a;
  for (int& x : v) x += offset;
  return v;
}

}  // namespace

MatrixStatePrep make_matrix_prep(QuantumCircuit circuit, std::int64_t rows, std::int64_t cols) {
  const int rq = log2_exact(rows);
  const int cq = log2_exact(cols);
  if (rq + cq != circuit.num_qubits()) {
    throw DimensionError("matrix prep: log2(rows*cols) != circuit width");
  }
  MatrixStatePrep p;
  p.circuit = std::move(circuit);
  p.rows = rows;
  p.cols = cols;
  p.creg = index_range(0, cq);
  p.rreg = index_range(cq, cq + rq);
  return p;
}

MatrixStatePrep identity_prep(std::int64_t n) {
  const int q = log2_exact(n);
  if (q < 1) throw DimensionError("identity prep needs n >= 2");
  QuantumCircuit c = qc_empty(2 * q);
  for (int i = 0; i < q; ++i) c.add(Gate::h(i));
  for (int i = 0; i < q; ++i) c.add(Gate::cnot(i, q + i));
  return make_matrix_prep(std::move(c), n, n);
}

MatrixStatePrep circuit_matrix_prep(const QuantumCircuit& u) {
  const std::int64_t n = std::int64_t{1} << u.num_qubits();
  MatrixStatePrep base = identity_prep(n);
  QuantumCircuit c = qc_compose(base.circuit, u, base.rreg);
  return make_matrix_prep(std::move(c), n, n);
}

MatrixStatePrep conjugate(const MatrixStatePrep& a) {
  MatrixStatePrep out = a;
  out.circuit = qc_conjugate(a.circuit);
  return out;
}

MatrixStatePrep transpose(const MatrixStatePrep& a) {
  // S^R with the two registers exchanged: position list rreg ++ creg.
  QubitPermutation sigma(concat(a.rreg, a.creg));
  QuantumCircuit c = qc_permute_bits(a.circuit, sigma);
  return make_matrix_prep(std::move(c), a.cols, a.rows);
}

MatrixStatePrep vec(const MatrixStatePrep& a) {
  MatrixStatePrep out = a;
  out.rows = a.rows * a.cols;
  out.cols = 1;
  out.creg.clear();
  out.rreg = concat(a.creg, a.rreg);
  return out;
}

MatrixStatePrep rvec(const MatrixStatePrep& a) { return transpose(vec(a)); }

MatrixStatePrep pad_zero_columns(const MatrixStatePrep& a, int k) {
  if (k <= 0) throw DimensionError("pad_zero_columns: k must be positive");
  QuantumCircuit wide = qc_empty(a.num_qubits() + k);
  QuantumCircuit c = qc_compose(wide, a.circuit, index_range(k, k + a.num_qubits()));
  return make_matrix_prep(std::move(c), a.rows, (std::int64_t{1} << k) * a.cols);
}

MatrixStatePrep pad_zero_rows(const MatrixStatePrep& a, int r) {
  if (r <= 0) throw DimensionError("pad_zero_rows: r must be positive");
  const int cq = static_cast<int>(a.creg.size());
  const int q = a.num_qubits();
  // Fresh qubits go between the column and row registers.
  std::vector<int> wiring = concat(index_range(0, cq), index_range(cq + r, q + r));
  QuantumCircuit c = qc_compose(qc_empty(q + r), a.circuit, wiring);
  return make_matrix_prep(std::move(c), (std::int64_t{1} << r) * a.rows, a.cols);
}

MatrixStatePrep pad(const MatrixStatePrep& a, int r, int k) {
  MatrixStatePrep out = a;
  if (k > 0) out = pad_zero_columns(out, k);
  if (r > 0) out = pad_zero_rows(out, r);
  return out;
}

MatrixStatePrep adjoint(const MatrixStatePrep& a) { return conjugate(transpose(a)); }

MatrixStatePrep matrix_vec(const MatrixStatePrep& a, const MatrixStatePrep& b) {
  if (!b.is_column_vector()) throw DimensionError("matrix_vec: b must be a column-vector prep");
  if (b.rows != a.cols) {
    throw DimensionError("matrix_vec: b length " + std::to_string(b.rows) +
                         " does not match cols " + std::to_string(a.cols));
  }
  QuantumCircuit bt = qc_transpose(b.circuit);
  QuantumCircuit c = qc_compose(a.circuit, bt, a.creg);
  return vec(make_matrix_prep(std::move(c), a.rows, a.cols));
}

MatrixStatePrep kronecker(const MatrixStatePrep& a, const MatrixStatePrep& b) {
  return kronecker_many({a, b});
}

MatrixStatePrep kronecker_many(const std::vector<MatrixStatePrep>& inputs) {
  if (inputs.empty()) throw DimensionError("kronecker of an empty list");
  if (inputs.size() == 1) return inputs.front();

  int total = 0;
  for (const auto& p : inputs) total += p.num_qubits();
  QuantumCircuit stacked = qc_empty(total);
  std::vector<int> creg_positions, rreg_positions;
  int offset = 0;
  std::int64_t rows = 1, cols = 1;
  for (const auto& p : inputs) {
    stacked = qc_compose(stacked, p.circuit, index_range(offset, offset + p.num_qubits()));
    creg_positions = concat(creg_positions, shifted_by(p.creg, offset));
    rreg_positions = concat(rreg_positions, shifted_by(p.rreg, offset));
    offset += p.num_qubits();
    rows *= p.rows;
    cols *= p.cols;
  }
  QubitPermutation sigma(concat(creg_positions, rreg_positions));
  QuantumCircuit c = qc_permute_bits(stacked, sigma);
  return make_matrix_prep(std::move(c), rows, cols);
}

MatrixStatePrep overlap(const MatrixStatePrep& psi, const MatrixStatePrep& phi) {
  if (!psi.is_column_vector() || !phi.is_column_vector()) {
    throw DimensionError("overlap: both inputs must be vector preps");
  }
  if (psi.rows != phi.rows) throw DimensionError("overlap: vector lengths differ");
  return matrix_vec(adjoint(psi), phi);
}

}  // namespace qtrace
