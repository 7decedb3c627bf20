#include "qtrace/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qtrace/errors.hpp"

namespace qtrace {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

GateKind kind_from_name(const std::string& name) {
  if (name == "h") return GateKind::H;
  if (name == "x") return GateKind::X;
  if (name == "s") return GateKind::S;
  if (name == "sdg") return GateKind::Sdg;
  if (name == "cnot") return GateKind::CNOT;
  if (name == "swap") return GateKind::Swap;
  if (name == "ry") return GateKind::Ry;
  if (name == "rz") return GateKind::Rz;
  if (name == "phase") return GateKind::Phase;
  if (name == "u1q") return GateKind::U1q;
  if (name == "cu1q") return GateKind::CU1q;
  throw SchemaError("unknown gate kind '" + name + "'");
}

// ZYZ factorization u = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct Zyz {
  double alpha, beta, gamma, delta;
};

Zyz zyz_decompose(const Mat2& u) {
  const Complex det = u.a * u.d - u.b * u.c;
  const double alpha = 0.5 * std::arg(det);
  const Complex ph = std::exp(Complex{0.0, -alpha});
  const Complex v00 = ph * u.a, v10 = ph * u.c;

  Zyz z{};
  z.alpha = alpha;
  z.gamma = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
  if (std::abs(v10) < 1e-14) {  // diagonal
    z.beta = -2.0 * std::arg(v00);
    z.delta = 0.0;
  } else if (std::abs(v00) < 1e-14) {  // anti-diagonal
    z.beta = 2.0 * std::arg(v10);
    z.delta = 0.0;
  } else {
    z.beta = std::arg(v10) - std::arg(v00);
    z.delta = -std::arg(v00) - std::arg(v10);
  }
  return z;
}

void emit_global_phase(std::ostringstream& out, int q, double rho) {
  if (std::abs(rho) < 1e-15) return;
  out << "u1(" << fmt_double(rho) << ") q[" << q << "];\n";
  out << "x q[" << q << "];\n";
  out << "u1(" << fmt_double(rho) << ") q[" << q << "];\n";
  out << "x q[" << q << "];\n";
}

}  // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("matrix JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw SchemaError("matrix JSON needs rows, cols and data");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() || !j["data"].is_array()) {
    throw SchemaError("matrix JSON field types are wrong");
  }
  const auto rows = j["rows"].get<std::int64_t>();
  const auto cols = j["cols"].get<std::int64_t>();
  if (rows <= 0 || cols <= 0) throw SchemaError("matrix dimensions must be positive");
  if (static_cast<std::int64_t>(j["data"].size()) != rows * cols) {
    throw SchemaError("matrix data length does not match rows*cols");
  }
  ComplexVector data;
  data.reserve(j["data"].size());
  for (const auto& e : j["data"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw SchemaError("matrix entries must be [re, im] pairs");
    }
    data.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  ComplexMatrix m(rows, cols, std::move(data));
  if (!m.all_finite()) throw SchemaError("matrix entries must be finite");
  return m;
}

std::string matrix_to_json(const ComplexMatrix& a) {
  json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  json data = json::array();
  for (const Complex& z : a.data()) data.push_back({z.real(), z.imag()});
  j["data"] = std::move(data);
  return j.dump();
}

CircuitFile parse_circuit_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("circuit JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("qubits") || !j.contains("gates")) {
    throw SchemaError("circuit JSON needs qubits and gates");
  }
  if (!j["qubits"].is_number_integer() || !j["gates"].is_array()) {
    throw SchemaError("circuit JSON field types are wrong");
  }
  const int q = j["qubits"].get<int>();
  if (q < 1) throw SchemaError("circuit needs at least one qubit");

  CircuitFile out{QuantumCircuit(q), {}};
  for (const auto& g : j["gates"]) {
    if (!g.is_object() || !g.contains("kind") || !g.contains("qubits")) {
      throw SchemaError("gate entries need kind and qubits");
    }
    const GateKind kind = kind_from_name(g["kind"].get<std::string>());
    std::vector<int> qubits;
    for (const auto& e : g["qubits"]) qubits.push_back(e.get<int>());
    std::vector<double> params;
    if (g.contains("params")) {
      for (const auto& e : g["params"]) params.push_back(e.get<double>());
    }
    try {
      out.circuit.add(Gate::make(kind, std::move(qubits), std::move(params)));
    } catch (const std::exception& e) {
      throw SchemaError(std::string("bad gate entry: ") + e.what());
    }
  }
  if (j.contains("meta")) {
    const auto& m = j["meta"];
    if (!m.is_object() || !m.contains("rows") || !m.contains("cols")) {
      throw SchemaError("circuit meta needs rows and cols");
    }
    out.meta = MatrixDims{m["rows"].get<std::int64_t>(), m["cols"].get<std::int64_t>()};
  }
  return out;
}

std::string circuit_to_json(const QuantumCircuit& c, std::optional<MatrixDims> meta) {
  json j;
  j["qubits"] = c.num_qubits();
  json gates = json::array();
  for (const Gate& g : c.gates()) {
    json e;
    e["kind"] = gate_kind_name(g.kind());
    e["qubits"] = g.qubits();
    e["params"] = g.params();
    gates.push_back(std::move(e));
  }
  j["gates"] = std::move(gates);
  if (meta) j["meta"] = {{"rows", meta->rows}, {"cols", meta->cols}};
  return j.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed for '" + path + "'");
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

ComplexMatrix read_matrix_json(const std::string& path) {
  return parse_matrix_json(read_text_file(path));
}

void write_matrix_json(const std::string& path, const ComplexMatrix& a) {
  write_text_file(path, matrix_to_json(a) + "\n");
}

CircuitFile read_circuit_json(const std::string& path) {
  return parse_circuit_json(read_text_file(path));
}

void write_circuit_json(const std::string& path, const QuantumCircuit& c,
                        std::optional<MatrixDims> meta) {
  write_text_file(path, circuit_to_json(c, meta) + "\n");
}

std::string export_qasm(const QuantumCircuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate& g : c.gates()) {
    const auto& qs = g.qubits();
    switch (g.kind()) {
      case GateKind::H:
        out << "h q[" << qs[0] << "];\n";
        break;
      case GateKind::X:
        out << "x q[" << qs[0] << "];\n";
        break;
      case GateKind::S:
        out << "s q[" << qs[0] << "];\n";
        break;
      case GateKind::Sdg:
        out << "sdg q[" << qs[0] << "];\n";
        break;
      case GateKind::Ry:
        out << "ry(" << fmt_double(g.params()[0]) << ") q[" << qs[0] << "];\n";
        break;
      case GateKind::Rz:
        out << "rz(" << fmt_double(g.params()[0]) << ") q[" << qs[0] << "];\n";
        break;
      case GateKind::Phase:
        out << "u1(" << fmt_double(g.params()[0]) << ") q[" << qs[0] << "];\n";
        break;
      case GateKind::CNOT:
        out << "cx q[" << qs[0] << "],q[" << qs[1] << "];\n";
        break;
      case GateKind::Swap:
        out << "cx q[" << qs[0] << "],q[" << qs[1] << "];\n";
        out << "cx q[" << qs[1] << "],q[" << qs[0] << "];\n";
        out << "cx q[" << qs[0] << "],q[" << qs[1] << "];\n";
        break;
      case GateKind::U1q: {
        const Zyz z = zyz_decompose(single_qubit_matrix(g));
        out << "u3(" << fmt_double(z.gamma) << "," << fmt_double(z.beta) << ","
            << fmt_double(z.delta) << ") q[" << qs[0] << "];\n";
        emit_global_phase(out, qs[0], z.alpha - 0.5 * (z.beta + z.delta));
        break;
      }
      case GateKind::CU1q: {
        // Controlled-U as u1 on the control plus the rz/ry/cx sandwich.
        const Zyz z = zyz_decompose(single_qubit_matrix(g));
        const int ctl = qs[0], tgt = qs[1];
        if (std::abs(z.alpha) > 1e-15) {
          out << "u1(" << fmt_double(z.alpha) << ") q[" << ctl << "];\n";
        }
        out << "rz(" << fmt_double(0.5 * (z.delta - z.beta)) << ") q[" << tgt << "];\n";
        out << "cx q[" << ctl << "],q[" << tgt << "];\n";
        out << "rz(" << fmt_double(-0.5 * (z.delta + z.beta)) << ") q[" << tgt << "];\n";
        out << "ry(" << fmt_double(-0.5 * z.gamma) << ") q[" << tgt << "];\n";
        out << "cx q[" << ctl << "],q[" << tgt << "];\n";
        out << "ry(" << fmt_double(0.5 * z.gamma) << ") q[" << tgt << "];\n";
        out << "rz(" << fmt_double(z.beta) << ") q[" << tgt << "];\n";
        break;
      }
    }
  }
  return out.str();
}

namespace {

struct QasmOperand {
  std::string reg;
  int index;
};

void strip_ws(std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  s = (first == std::string::npos) ? std::string{} : s.substr(first, last - first + 1);
}

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    strip_ws(item);
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      params.push_back(v);
    } catch (const std::exception&) {
      throw SchemaError("cannot parse QASM parameter '" + item + "'");
    }
  }
  return params;
}

QasmOperand parse_operand(std::string text) {
  strip_ws(text);
  const auto lb = text.find('[');
  const auto rb = text.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb) {
    throw SchemaError("cannot parse QASM operand '" + text + "'");
  }
  return {text.substr(0, lb), std::stoi(text.substr(lb + 1, rb - lb - 1))};
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return {Complex{c, 0.0}, -std::exp(Complex{0.0, lambda}) * s,
          std::exp(Complex{0.0, phi}) * s, std::exp(Complex{0.0, lambda + phi}) * c};
}

}  // namespace

QuantumCircuit import_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int width = -1;
  std::string reg_name;
  std::vector<Gate> gates;

  while (std::getline(in, line)) {
    const auto comment = line.find("//");
    if (comment != std::string::npos) line = line.substr(0, comment);
    strip_ws(line);
    if (line.empty()) continue;
    if (!line.ends_with(";")) throw SchemaError("QASM statement missing ';': " + line);
    line.pop_back();
    strip_ws(line);

    if (line.starts_with("OPENQASM") || line.starts_with("include")) continue;
    if (line.starts_with("qreg")) {
      if (width >= 0) throw SchemaError("only a single qreg is supported");
      const QasmOperand op = parse_operand(line.substr(4));
      reg_name = op.reg;
      width = op.index;
      continue;
    }

    std::string name = line;
    std::vector<double> params;
    const auto lp = line.find('(');
    std::string operand_text;
    if (lp != std::string::npos) {
      const auto rp = line.rfind(')');
      if (rp == std::string::npos || rp < lp) throw SchemaError("unbalanced parens: " + line);
      name = line.substr(0, lp);
      params = parse_params(line.substr(lp + 1, rp - lp - 1));
      operand_text = line.substr(rp + 1);
    } else {
      const auto sp = line.find_first_of(" \t");
      if (sp == std::string::npos) throw SchemaError("gate without operands: " + line);
      name = line.substr(0, sp);
      operand_text = line.substr(sp);
    }
    strip_ws(name);

    std::vector<int> qubits;
    std::stringstream ops(operand_text);
    std::string op_item;
    while (std::getline(ops, op_item, ',')) {
      const QasmOperand op = parse_operand(op_item);
      if (op.reg != reg_name) throw SchemaError("unknown register '" + op.reg + "'");
      qubits.push_back(op.index);
    }

    if (name == "h") gates.push_back(Gate::h(qubits.at(0)));
    else if (name == "x") gates.push_back(Gate::x(qubits.at(0)));
    else if (name == "s") gates.push_back(Gate::s(qubits.at(0)));
    else if (name == "sdg") gates.push_back(Gate::sdg(qubits.at(0)));
    else if (name == "ry") gates.push_back(Gate::ry(qubits.at(0), params.at(0)));
    else if (name == "rz") gates.push_back(Gate::rz(qubits.at(0), params.at(0)));
    else if (name == "u1") gates.push_back(Gate::phase(qubits.at(0), params.at(0)));
    else if (name == "u3")
      gates.push_back(Gate::u1q(qubits.at(0), u3_matrix(params.at(0), params.at(1), params.at(2))));
    else if (name == "cx") gates.push_back(Gate::cnot(qubits.at(0), qubits.at(1)));
    else throw SchemaError("unsupported QASM gate '" + name + "'");
  }

  if (width < 1) throw SchemaError("QASM file declares no qubits");
  QuantumCircuit c(width);
  for (const Gate& g : gates) c.add(g);
  return c;
}

}  // namespace qtrace
