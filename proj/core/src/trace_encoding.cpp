#include "qtrace/trace_encoding.hpp"

#include <numeric>
#include <string>

#include "qtrace/errors.hpp"

namespace qtrace {

namespace {

void validate_chain(const std::vector<MatrixDims>& dims) {
  if (dims.size() < 4 || dims.size() % 2 != 0) {
    throw DimensionError("trace plan needs an even number of inputs, at least four");
  }
  for (const MatrixDims& d : dims) {
    if (!is_power_of_two(d.rows) || !is_power_of_two(d.cols)) {
      throw DimensionError("trace plan: all dimensions must be powers of two");
    }
  }
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
    if (dims[i].cols != dims[i + 1].rows) {
      throw DimensionError("trace plan: chain breaks between inputs " + std::to_string(i + 1) +
                           " and " + std::to_string(i + 2));
    }
  }
  if (dims.front().rows != dims.back().cols) {
    throw DimensionError("trace plan: product is not square (n_0 != n_2k)");
  }
}

int width_of(const MatrixDims& d) { return log2_exact(d.rows) + log2_exact(d.cols); }

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

// A chain element: either a Kronecker pair of one transposed and one plain
// input, or the transposed pivot. The outermost even element carries the
// transpose on its right factor; every deeper element and the whole odd
// chain carry it on the left. Joins between elements wrap the inner fold as
// a row vector at the outermost even level and as a column vector
// everywhere else (this is what makes the identity close; transposing a
// fold swaps both conventions at once).
struct ChainElement {
  bool is_pair = false;
  int left = 0;   // pair: left factor; pivot: the pivot index
  int right = 0;  // pair: right factor
  bool transpose_left = false;  // pair: which factor is transposed
};

std::vector<ChainElement> chain_elements(const TracePlan& plan, bool even_side) {
  std::vector<ChainElement> elems;
  const auto& pairs = even_side ? plan.even_pairs : plan.odd_pairs;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const bool outermost_even = even_side && j == 0;
    elems.push_back({true, pairs[j].left, pairs[j].right, !outermost_even});
  }
  if (plan.pivot_in_even_chain == even_side) elems.push_back({false, plan.pivot, 0, false});
  return elems;
}

// True when the join BELOW element j (wrapping everything deeper) reads the
// inner fold as a row vector; only the outermost even join does.
bool join_is_rowvec(bool even_side, std::size_t j) { return even_side && j == 0; }

// Tracked register lists of a chain fold, positions local to the layer
// tensor. Mirrors the level-1 ops on index lists only: transpose swaps the
// two lists, kronecker concatenates like with like, rvec moves everything
// into the column list.
struct TrackedRegs {
  std::vector<int> creg;
  std::vector<int> rreg;
};

}  // namespace

TracePlan build_trace_plan(const std::vector<MatrixDims>& dims) {
  validate_chain(dims);
  TracePlan plan;
  plan.k = static_cast<int>(dims.size() / 2);
  plan.pivot = plan.k + 1;
  plan.pivot_in_even_chain = (plan.k % 2 == 1);
  for (int i = 1; i <= plan.k / 2; ++i) {
    plan.even_pairs.push_back({2 * i, 2 * (plan.k + 1 - i)});
  }
  for (int i = 1; i <= (plan.k - 1) / 2; ++i) {
    plan.odd_pairs.push_back({2 * i + 1, 2 * (plan.k - i) + 1});
  }
  plan.l_even = static_cast<int>(plan.even_pairs.size()) + (plan.pivot_in_even_chain ? 1 : 0);
  plan.l_odd = static_cast<int>(plan.odd_pairs.size()) + (plan.pivot_in_even_chain ? 0 : 1);
  return plan;
}

Complex trace_formula_reference(const std::vector<ComplexMatrix>& chain) {
  std::vector<MatrixDims> dims;
  dims.reserve(chain.size());
  for (const auto& a : chain) dims.push_back({a.rows(), a.cols()});
  const TracePlan plan = build_trace_plan(dims);

  auto fold = [&chain, &plan](bool even_side) {
    std::vector<ComplexMatrix> mats;
    for (const ChainElement& e : chain_elements(plan, even_side)) {
      if (!e.is_pair) {
        mats.push_back(transpose(chain[static_cast<std::size_t>(e.left - 1)]));
      } else if (e.transpose_left) {
        mats.push_back(kron(transpose(chain[static_cast<std::size_t>(e.left - 1)]),
                            chain[static_cast<std::size_t>(e.right - 1)]));
      } else {
        mats.push_back(kron(chain[static_cast<std::size_t>(e.left - 1)],
                            transpose(chain[static_cast<std::size_t>(e.right - 1)])));
      }
    }
    ComplexMatrix f = mats.back();
    for (std::size_t j = mats.size() - 1; j-- > 0;) {
      if (join_is_rowvec(even_side, j)) {
        f = kron(mats[j], ComplexMatrix(1, f.rows() * f.cols(), vec(f)));
      } else {
        f = kron(mats[j], ComplexMatrix(f.rows() * f.cols(), 1, vec(f)));
      }
    }
    return f;
  };

  const ComplexMatrix f_even = fold(true);
  const ComplexMatrix f_odd = fold(false);
  const ComplexVector w = matvec(f_even, vec(f_odd));
  const ComplexVector a1 = vec(chain.front());
  if (a1.size() != w.size()) {
    throw DimensionError("trace formula: vec(A_1) length does not match the even fold");
  }
  Complex acc{};
  for (std::size_t t = 0; t < w.size(); ++t) acc += a1[t] * w[t];
  return acc;
}

namespace {

MatrixStatePrep build_u_psi(const std::vector<MatrixStatePrep>& inputs, int phi_width) {
  MatrixStatePrep psi = vec(conjugate(inputs.front()));
  const int pad_r = phi_width - psi.num_qubits();
  if (pad_r < 0) throw DimensionError("mvtrace: psi would be wider than phi");
  if (pad_r > 0) psi = pad_zero_rows(psi, pad_r);
  return psi;
}

std::vector<MatrixDims> dims_of(const std::vector<MatrixStatePrep>& inputs) {
  std::vector<MatrixDims> dims;
  dims.reserve(inputs.size());
  for (const auto& p : inputs) dims.push_back({p.rows, p.cols});
  return dims;
}

int phi_width_of(const std::vector<MatrixDims>& dims) {
  // The even-indexed inputs fully determine the width of u_phi.
  int w = 0;
  for (std::size_t i = 1; i < dims.size(); i += 2) w += width_of(dims[i]);
  return w;
}

}  // namespace

MVTraceOutput mvtrace_prep(const std::vector<MatrixStatePrep>& inputs) {
  const std::vector<MatrixDims> dims = dims_of(inputs);
  const TracePlan plan = build_trace_plan(dims);

  auto fold = [&inputs, &plan](bool even_side) {
    std::vector<MatrixStatePrep> elems;
    for (const ChainElement& e : chain_elements(plan, even_side)) {
      if (!e.is_pair) {
        elems.push_back(transpose(inputs[static_cast<std::size_t>(e.left - 1)]));
      } else if (e.transpose_left) {
        elems.push_back(kronecker(transpose(inputs[static_cast<std::size_t>(e.left - 1)]),
                                  inputs[static_cast<std::size_t>(e.right - 1)]));
      } else {
        elems.push_back(kronecker(inputs[static_cast<std::size_t>(e.left - 1)],
                                  transpose(inputs[static_cast<std::size_t>(e.right - 1)])));
      }
    }
    MatrixStatePrep f = elems.back();
    for (std::size_t j = elems.size() - 1; j-- > 0;) {
      f = kronecker(elems[j], join_is_rowvec(even_side, j) ? rvec(f) : vec(f));
    }
    return f;
  };

  const MatrixStatePrep f_even = fold(true);
  const MatrixStatePrep f_odd = fold(false);

  MVTraceOutput out;
  out.u_phi = matrix_vec(f_even, vec(f_odd));
  out.u_psi = build_u_psi(inputs, out.u_phi.num_qubits());
  return out;
}

MVTraceLayout mvtrace_layer_layout(const TracePlan& plan, const std::vector<MatrixDims>& dims) {
  MVTraceLayout layout;

  auto track = [&](bool even_side) {
    std::vector<int>& emission = even_side ? layout.even_emission : layout.odd_emission;
    std::vector<TrackedRegs> elems;
    int offset = 0;
    auto place = [&](int input_index, bool transposed) {
      const MatrixDims& d = dims[static_cast<std::size_t>(input_index - 1)];
      const int cq = log2_exact(d.cols), rq = log2_exact(d.rows);
      TrackedRegs t;
      std::vector<int> cpos(static_cast<std::size_t>(cq)), rpos(static_cast<std::size_t>(rq));
      std::iota(cpos.begin(), cpos.end(), offset);
      std::iota(rpos.begin(), rpos.end(), offset + cq);
      t.creg = transposed ? rpos : cpos;
      t.rreg = transposed ? cpos : rpos;
      offset += cq + rq;
      emission.push_back(input_index);
      return t;
    };
    for (const ChainElement& e : chain_elements(plan, even_side)) {
      if (!e.is_pair) {
        elems.push_back(place(e.left, true));
      } else {
        TrackedRegs left = place(e.left, e.transpose_left);
        TrackedRegs right = place(e.right, !e.transpose_left);
        elems.push_back({concat(left.creg, right.creg), concat(left.rreg, right.rreg)});
      }
    }
    TrackedRegs f = elems.back();
    for (std::size_t j = elems.size() - 1; j-- > 0;) {
      const TrackedRegs& outer = elems[j];
      if (join_is_rowvec(even_side, j)) {
        // kronecker(outer, rvec(inner)): the inner qubits all join the
        // column register, read creg-then-rreg.
        f = {concat(outer.creg, concat(f.creg, f.rreg)), outer.rreg};
      } else {
        // kronecker(outer, vec(inner)): the inner qubits all join the rows.
        f = {outer.creg, concat(outer.rreg, concat(f.creg, f.rreg))};
      }
    }
    std::vector<int> lambda = concat(f.creg, f.rreg);
    if (even_side) {
      layout.lambda_even = std::move(lambda);
      layout.even_width = offset;
    } else {
      layout.lambda_odd = std::move(lambda);
      layout.odd_width = offset;
    }
  };

  track(true);
  track(false);
  if (layout.odd_width > layout.even_width) {
    throw DimensionError("mvtrace layout: odd layer wider than even layer");
  }
  return layout;
}

QubitPermutation generate_mvtrace_permutation(const TracePlan& plan,
                                              const std::vector<QubitRegisterSet>& regs) {
  if (regs.size() != static_cast<std::size_t>(2 * plan.k)) {
    throw DimensionError("generate_mvtrace_permutation: need registers for all 2k inputs");
  }
  std::vector<MatrixDims> dims;
  dims.reserve(regs.size());
  for (const QubitRegisterSet& r : regs) {
    dims.push_back({std::int64_t{1} << r.rreg.size(), std::int64_t{1} << r.creg.size()});
  }
  const MVTraceLayout layout = mvtrace_layer_layout(plan, dims);

  // sigma = lambda_even o lambda_odd^{-1} on the odd layer's qubits,
  // identity on the rest of the even layer.
  std::vector<int> odd_inv(layout.lambda_odd.size());
  for (std::size_t t = 0; t < layout.lambda_odd.size(); ++t) {
    odd_inv[static_cast<std::size_t>(layout.lambda_odd[t])] = static_cast<int>(t);
  }
  std::vector<int> sigma(static_cast<std::size_t>(layout.even_width));
  std::vector<bool> used(sigma.size(), false);
  for (std::size_t t = 0; t < odd_inv.size(); ++t) {
    const int target = layout.lambda_even[static_cast<std::size_t>(odd_inv[t])];
    sigma[t] = target;
    used[static_cast<std::size_t>(target)] = true;
  }
  int next = 0;
  for (std::size_t t = odd_inv.size(); t < sigma.size(); ++t) {
    while (used[static_cast<std::size_t>(next)]) ++next;
    sigma[t] = next;
    used[static_cast<std::size_t>(next)] = true;
  }
  return QubitPermutation(std::move(sigma));
}

MVTraceOutput mvtrace_prep_optimized(const std::vector<MatrixStatePrep>& inputs) {
  const std::vector<MatrixDims> dims = dims_of(inputs);
  const TracePlan plan = build_trace_plan(dims);
  const MVTraceLayout layout = mvtrace_layer_layout(plan, dims);

  std::vector<QubitRegisterSet> regs;
  regs.reserve(inputs.size());
  for (const auto& p : inputs) regs.push_back({p.rreg, p.creg});
  const QubitPermutation middle = generate_mvtrace_permutation(plan, regs);

  QuantumCircuit layer_even = qc_empty(layout.even_width);
  {
    int offset = 0;
    for (int idx : layout.even_emission) {
      const QuantumCircuit& ci = inputs[static_cast<std::size_t>(idx - 1)].circuit;
      for (const Gate& g : ci.gates()) layer_even.add(g.shifted(offset));
      offset += ci.num_qubits();
    }
  }
  QuantumCircuit layer_odd = qc_empty(layout.odd_width);
  {
    int offset = 0;
    for (int idx : layout.odd_emission) {
      QuantumCircuit t = qc_transpose(inputs[static_cast<std::size_t>(idx - 1)].circuit);
      for (const Gate& g : t.gates()) layer_odd.add(g.shifted(offset));
      offset += t.num_qubits();
    }
  }

  QuantumCircuit composed = qc_compose(layer_even, layer_odd, middle);
  QuantumCircuit normalized = qc_permute_bits(composed, QubitPermutation(layout.lambda_even));

  MVTraceOutput out;
  out.u_phi = make_matrix_prep(std::move(normalized), std::int64_t{1} << layout.even_width, 1);
  out.u_psi = build_u_psi(inputs, layout.even_width);
  return out;
}

}  // namespace qtrace
