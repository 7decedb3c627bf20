#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtrace/errors.hpp"
#include "qtrace/io.hpp"
#include "qtrace/simulator.hpp"
#include "qtrace/synthesis.hpp"
#include "test_util.hpp"

using namespace qtrace;
using qtest::make_rng;

TEST_CASE("matrix JSON round trip and rejection") {
  auto rng = make_rng(81);
  ComplexMatrix a = qtest::random_matrix(rng, 2, 4);
  ComplexMatrix back = parse_matrix_json(matrix_to_json(a));
  CHECK(back.rows() == 2);
  CHECK(back.cols() == 4);
  CHECK(qtest::max_abs_diff(back.data(), a.data()) == 0.0);

  CHECK_THROWS_AS(parse_matrix_json("not json"), SchemaError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows":2,"cols":2})"), SchemaError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows":2,"cols":2,"data":[[1,0]]})"), SchemaError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows":2,"cols":2,"data":[[1],[2],[3],[4]]})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows":0,"cols":2,"data":[]})"), SchemaError);
}

TEST_CASE("circuit JSON round trip preserves the simulated state") {
  auto rng = make_rng(82);
  QuantumCircuit c = qtest::random_circuit(rng, 3, 12);
  CircuitFile back = parse_circuit_json(circuit_to_json(c, MatrixDims{4, 2}));
  REQUIRE(back.meta.has_value());
  CHECK(back.meta->rows == 4);
  CHECK(back.meta->cols == 2);
  CHECK(back.circuit.gate_count() == c.gate_count());
  CHECK(qtest::max_abs_diff(simulate(back.circuit).amplitudes(), simulate(c).amplitudes()) == 0.0);

  CHECK_THROWS_AS(parse_circuit_json(R"({"qubits":2})"), SchemaError);
  CHECK_THROWS_AS(
      parse_circuit_json(R"({"qubits":2,"gates":[{"kind":"nope","qubits":[0]}]})"), SchemaError);
  CHECK_THROWS_AS(
      parse_circuit_json(R"({"qubits":2,"gates":[{"kind":"cnot","qubits":[0]}]})"), SchemaError);
  // Non-unitary u1q entries are a schema violation.
  CHECK_THROWS_AS(parse_circuit_json(
                      R"({"qubits":1,"gates":[{"kind":"u1q","qubits":[0],
                          "params":[2,0,0,0,0,0,2,0]}]})"),
                  SchemaError);
}

TEST_CASE("QASM export/import round trip, all gate kinds") {
  auto rng = make_rng(83);
  QuantumCircuit c(3);
  c.add(Gate::h(0));
  c.add(Gate::x(1));
  c.add(Gate::s(2));
  c.add(Gate::sdg(0));
  c.add(Gate::ry(1, 0.7));
  c.add(Gate::rz(2, -1.2));
  c.add(Gate::phase(0, 2.1));
  c.add(Gate::cnot(0, 2));
  c.add(Gate::swap(1, 2));
  c.add(Gate::u1q(1, qtest::random_unitary_2x2(rng)));
  c.add(Gate::cu1q(2, 0, qtest::random_unitary_2x2(rng)));

  const std::string qasm = export_qasm(c);
  QuantumCircuit back = import_qasm(qasm);
  CHECK(back.num_qubits() == 3);
  CHECK(qtest::max_abs_diff(simulate(back).amplitudes(), simulate(c).amplitudes()) < 1e-10);

  // Full unitary equality, so the round trip is exact beyond |0> too
  // (global phases are carried by explicit gadgets).
  CHECK(qtest::max_abs_diff(circuit_unitary(back).data(), circuit_unitary(c).data()) < 1e-10);
}

TEST_CASE("QASM round trip on synthesized circuits") {
  auto rng = make_rng(84);
  ComplexMatrix a = qtest::random_matrix(rng, 4, 4);
  MatrixStatePrep p = synthesize_state_prep(a);
  QuantumCircuit back = import_qasm(export_qasm(p.circuit));
  CHECK(qtest::max_abs_diff(simulate(back).amplitudes(), simulate(p.circuit).amplitudes()) <
        1e-10);
}

TEST_CASE("QASM import rejects what we do not emit") {
  CHECK_THROWS_AS(import_qasm("OPENQASM 2.0;\nqreg q[1];\nccx q[0],q[0],q[0];"), SchemaError);
  CHECK_THROWS_AS(import_qasm("OPENQASM 2.0;\nh q[0];"), SchemaError);  // no qreg
  CHECK_THROWS_AS(import_qasm("OPENQASM 2.0;\nqreg q[1];\nh r[0];"), SchemaError);
  CHECK_THROWS_AS(import_qasm("OPENQASM 2.0;\nqreg q[1];\nh q[0]"), SchemaError);  // missing ;
}

TEST_CASE("file IO errors") {
  CHECK_THROWS_AS(read_matrix_json("/nonexistent/path/m.json"), IoError);
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/out.txt", "x"), IoError);
}
