#pragma once

#include <optional>
#include <string>

#include "qtrace/matrix_state.hpp"
#include "qtrace/trace_encoding.hpp"

namespace qtrace {

// Matrix JSON: {"rows": m, "cols": n, "data": [[re, im], ...]} with row-major
// data of length m*n. Circuit JSON: {"qubits": q, "gates": [{"kind": ...,
// "qubits": [...], "params": [...]}]} plus an optional {"meta": {"rows",
// "cols"}} block carrying matrix-prep metadata.

ComplexMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const ComplexMatrix& a);
ComplexMatrix read_matrix_json(const std::string& path);
void write_matrix_json(const std::string& path, const ComplexMatrix& a);

struct CircuitFile {
  QuantumCircuit circuit;
  std::optional<MatrixDims> meta;
};

CircuitFile parse_circuit_json(const std::string& text);
std::string circuit_to_json(const QuantumCircuit& c, std::optional<MatrixDims> meta = {});
CircuitFile read_circuit_json(const std::string& path);
void write_circuit_json(const std::string& path, const QuantumCircuit& c,
                        std::optional<MatrixDims> meta = {});

/// OpenQASM 2.0 text for the supported gate set. u1q is lowered to u3 (plus
/// an explicit gadget when a residual global phase must be kept exact) and
/// cu1q to the standard rz/ry/cx form with the control phase as u1.
std::string export_qasm(const QuantumCircuit& c);

/// Parser for the subset export_qasm emits (h, x, s, sdg, ry, rz, u1, u3, cx).
QuantumCircuit import_qasm(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qtrace
