#include "qtrace/circuit.hpp"

#include <algorithm>
#include <string>

#include "qtrace/errors.hpp"

namespace qtrace {

QubitPermutation::QubitPermutation(std::vector<int> map) : map_(std::move(map)) {
  const int n = static_cast<int>(map_.size());
  if (n == 0) throw PermutationError("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : map_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw PermutationError("permutation map is not a bijection on {0..q-1}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

QubitPermutation QubitPermutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return QubitPermutation(std::move(m));
}

QubitPermutation QubitPermutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
  return QubitPermutation(std::move(inv));
}

QubitPermutation QubitPermutation::compose(const QubitPermutation& inner) const {
  if (size() != inner.size()) throw PermutationError("compose: size mismatch");
  std::vector<int> m(map_.size());
  for (int i = 0; i < size(); ++i) m[static_cast<std::size_t>(i)] = (*this)(inner(i));
  return QubitPermutation(std::move(m));
}

QuantumCircuit::QuantumCircuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw DimensionError("circuit width must be at least 1");
}

void QuantumCircuit::add(const Gate& g) {
  for (int q : g.qubits()) {
    if (q < 0 || q >= num_qubits_) {
      throw DimensionError("gate qubit " + std::to_string(q) + " out of range for width " +
                           std::to_string(num_qubits_));
    }
  }
  gates_.push_back(g);
}

int QuantumCircuit::depth() const {
  std::vector<int> frontier(static_cast<std::size_t>(num_qubits_), 0);
  int d = 0;
  for (const Gate& g : gates_) {
    int f = 0;
    for (int q : g.qubits()) f = std::max(f, frontier[static_cast<std::size_t>(q)]);
    ++f;
    for (int q : g.qubits()) frontier[static_cast<std::size_t>(q)] = f;
    d = std::max(d, f);
  }
  return d;
}

std::int64_t QuantumCircuit::swap_count() const {
  std::int64_t n = 0;
  for (const Gate& g : gates_) {
    if (g.kind() == GateKind::Swap) ++n;
  }
  return n;
}

QuantumCircuit qc_empty(int q) { return QuantumCircuit(q); }

QuantumCircuit qc_tensor(const QuantumCircuit& q_msb, const QuantumCircuit& w_lsb) {
  QuantumCircuit out(q_msb.num_qubits() + w_lsb.num_qubits());
  for (const Gate& g : q_msb.gates()) out.add(g);
  for (const Gate& g : w_lsb.gates()) out.add(g.shifted(q_msb.num_qubits()));
  return out;
}

QuantumCircuit qc_compose(const QuantumCircuit& w, const QuantumCircuit& q,
                          const std::vector<int>& wiring) {
  const int width = std::max(w.num_qubits(), q.num_qubits());
  if (static_cast<int>(wiring.size()) < q.num_qubits()) {
    throw PermutationError("qc_compose: wiring shorter than q(Q)");
  }
  std::vector<bool> seen(static_cast<std::size_t>(width), false);
  for (std::size_t i = 0; i < wiring.size(); ++i) {
    const int t = wiring[i];
    if (t < 0 || t >= width || seen[static_cast<std::size_t>(t)]) {
      throw PermutationError("qc_compose: wiring is not injective into the output width");
    }
    seen[static_cast<std::size_t>(t)] = true;
  }
  QuantumCircuit out(width);
  for (const Gate& g : w.gates()) out.add(g);
  for (const Gate& g : q.gates()) out.add(g.remapped(wiring));
  return out;
}

QuantumCircuit qc_compose(const QuantumCircuit& w, const QuantumCircuit& q,
                          const QubitPermutation& sigma) {
  return qc_compose(w, q, sigma.map());
}

QuantumCircuit qc_add_gate(const QuantumCircuit& q, const Gate& g, const std::vector<int>& delta) {
  QuantumCircuit out = q;
  out.add(g.retargeted(delta));
  return out;
}

QuantumCircuit qc_transpose(const QuantumCircuit& u) {
  QuantumCircuit out(u.num_qubits());
  for (auto it = u.gates().rbegin(); it != u.gates().rend(); ++it) out.add(gate_transpose(*it));
  return out;
}

QuantumCircuit qc_conjugate(const QuantumCircuit& u) {
  QuantumCircuit out(u.num_qubits());
  for (const Gate& g : u.gates()) out.add(gate_conjugate(g));
  return out;
}

QuantumCircuit qc_inverse(const QuantumCircuit& u) {
  QuantumCircuit out(u.num_qubits());
  for (auto it = u.gates().rbegin(); it != u.gates().rend(); ++it) out.add(gate_inverse(*it));
  return out;
}

QuantumCircuit qc_permute_bits(const QuantumCircuit& w, const QubitPermutation& sigma) {
  if (sigma.size() != w.num_qubits()) {
    throw PermutationError("qc_permute_bits: permutation size must equal circuit width");
  }
  QuantumCircuit w_inv = qc_inverse(w);
  QuantumCircuit composed = qc_compose(qc_empty(w.num_qubits()), w_inv, sigma.inverse());
  return qc_inverse(composed);
}

QuantumCircuit permutation_to_swaps(const QubitPermutation& sigma) {
  // Emit transpositions tau_1 ... tau_T with tau_1 o ... o tau_T = sigma,
  // applied in circuit order tau_T first. Selection style: fix positions left
  // to right on a working copy of sigma.
  QuantumCircuit out(sigma.size());
  std::vector<int> work = sigma.map();
  std::vector<Gate> swaps;
  for (int i = 0; i < sigma.size(); ++i) {
    if (work[static_cast<std::size_t>(i)] == i) continue;
    int j = i + 1;
    while (work[static_cast<std::size_t>(j)] != i) ++j;
    std::swap(work[static_cast<std::size_t>(i)], work[static_cast<std::size_t>(j)]);
    swaps.push_back(Gate::swap(i, j));
  }
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) out.add(*it);
  return out;
}

}  // namespace qtrace
