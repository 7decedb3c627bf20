// qtrace: compile multivariate-trace-encoding circuit pairs from matrices
// stored as JSON, estimate traces and polynomial spectral sums against a
// dense oracle, synthesize amplitude-encoding circuits, and export OpenQASM.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qtrace/errors.hpp"
#include "qtrace/estimator.hpp"
#include "qtrace/io.hpp"
#include "qtrace/rootfind.hpp"
#include "qtrace/spectral.hpp"
#include "qtrace/synthesis.hpp"

using nlohmann::json;
using namespace qtrace;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitSchema = 3;
constexpr int kExitDimension = 4;
constexpr int kExitNumeric = 5;
constexpr int kExitRootFinding = 6;

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_complex(Complex z) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

EstimateMode parse_mode(const std::string& name) {
  if (name == "exact") return EstimateMode::Exact;
  if (name == "hadamard") return EstimateMode::Hadamard;
  if (name == "hadamard_imag") return EstimateMode::HadamardImag;
  if (name == "swap") return EstimateMode::Swap;
  throw CLI::ValidationError("--mode", "unknown mode '" + name + "'");
}

void emit_report(const json& j, const std::string& report, const std::string& out_path) {
  std::string text;
  if (report == "json") {
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream ss;
    for (const auto& [key, value] : j.items()) {
      ss << key << ": ";
      if (value.is_object() && value.contains("re")) {
        ss << fmt_complex({value["re"].get<double>(), value["im"].get<double>()});
      } else if (value.is_number_float()) {
        ss << fmt_real(value.get<double>());
      } else {
        ss << value.dump();
      }
      ss << "\n";
    }
    text = ss.str();
  }
  if (!out_path.empty()) {
    write_text_file(out_path, text);
  }
  std::cout << text;
}

struct EstimateTraceArgs {
  std::string matrices;
  std::string mode = "exact";
  std::int64_t shots = 1'000'000;
  std::uint64_t seed = 0;
  std::string report = "text";
  std::string out;
  std::string out_psi;
  std::string out_phi;
};

int run_estimate_trace(const EstimateTraceArgs& args) {
  const std::vector<std::string> paths = split_list(args.matrices);
  if (paths.size() < 2) {
    throw DimensionError("estimate-trace needs at least two matrix files");
  }
  std::vector<ComplexMatrix> matrices;
  for (const std::string& p : paths) matrices.push_back(read_matrix_json(p));
  for (const ComplexMatrix& m : matrices) {
    if (!is_power_of_two(m.rows()) || !is_power_of_two(m.cols())) {
      throw DimensionError("all matrix dimensions must be powers of two");
    }
  }
  for (std::size_t i = 0; i + 1 < matrices.size(); ++i) {
    if (matrices[i].cols() != matrices[i + 1].rows()) {
      throw DimensionError("chain breaks between matrix " + std::to_string(i + 1) + " and " +
                           std::to_string(i + 2));
    }
  }
  if (matrices.front().rows() != matrices.back().cols()) {
    throw DimensionError("product is not square: first rows != last cols");
  }
  // Even count of at least four inputs; appended identities change nothing
  // about the product's trace.
  const std::size_t given = matrices.size();
  while (matrices.size() < 4 || matrices.size() % 2 != 0) {
    matrices.push_back(ComplexMatrix::identity(matrices.back().cols()));
  }

  const Complex oracle = multivariate_trace_oracle(matrices);

  std::vector<MatrixStatePrep> preps;
  double norm_product = 1.0;
  for (const ComplexMatrix& m : matrices) {
    preps.push_back(synthesize_state_prep(m));
    norm_product *= frobenius(m);
  }
  MVTraceOutput compiled = mvtrace_prep_optimized(preps);
  compiled.norm_product = norm_product;

  EstimateOptions opts;
  opts.mode = parse_mode(args.mode);
  opts.shots = args.shots;
  opts.seed = args.seed;
  const TraceEstimate est = estimate_trace(compiled, opts);
  const double abs_error = est.phase_blind
                               ? std::abs(est.trace.real() - std::abs(oracle))
                               : std::abs(est.trace - oracle);

  if (!args.out_psi.empty()) {
    write_circuit_json(args.out_psi, compiled.u_psi.circuit,
                       MatrixDims{compiled.u_psi.rows, compiled.u_psi.cols});
  }
  if (!args.out_phi.empty()) {
    write_circuit_json(args.out_phi, compiled.u_phi.circuit,
                       MatrixDims{compiled.u_phi.rows, compiled.u_phi.cols});
  }

  json j;
  j["command"] = "estimate-trace";
  j["mode"] = args.mode;
  j["matrices"] = given;
  j["estimate"] = complex_json(est.trace);
  j["exact_oracle"] = complex_json(oracle);
  j["abs_error"] = abs_error;
  j["norm_product"] = norm_product;
  j["qubits"] = compiled.u_phi.num_qubits();
  j["gates"] =
      compiled.u_psi.circuit.gate_count() + compiled.u_phi.circuit.gate_count();
  j["depth"] = std::max(compiled.u_psi.circuit.depth(), compiled.u_phi.circuit.depth());
  j["shots"] = args.shots;
  j["seed"] = args.seed;
  if (est.phase_blind) j["phase_blind"] = true;
  emit_report(j, args.report, args.out);
  return 0;
}

struct SpectralArgs {
  std::string matrix;
  std::string coeffs;
  std::string method = "moments";
  std::string mode = "exact";
  std::int64_t shots = 1'000'000;
  std::uint64_t seed = 0;
  std::string report = "text";
  std::string out;
};

int run_spectral_sum(const SpectralArgs& args) {
  const ComplexMatrix a = read_matrix_json(args.matrix);
  if (a.rows() != a.cols()) throw DimensionError("spectral sums need a square matrix");
  if (!is_power_of_two(a.rows())) throw DimensionError("matrix dimension must be a power of two");

  std::vector<Complex> coeffs;
  for (const std::string& c : split_list(args.coeffs)) {
    try {
      std::size_t used = 0;
      const double v = std::stod(c, &used);
      if (used != c.size()) throw std::invalid_argument(c);
      coeffs.emplace_back(v, 0.0);
    } catch (const std::exception&) {
      throw SchemaError("cannot parse coefficient '" + c + "'");
    }
  }
  if (coeffs.empty()) throw DimensionError("need at least one coefficient");

  EstimateOptions opts;
  opts.mode = parse_mode(args.mode);
  opts.shots = args.shots;
  opts.seed = args.seed;

  Complex estimate;
  if (args.method == "moments") {
    estimate = spectral_sum_moments(coeffs, synthesize_state_prep(a), frobenius(a), opts);
  } else if (args.method == "factored") {
    estimate = spectral_sum_factored(coeffs, a, opts);
  } else {
    throw CLI::ValidationError("--method", "unknown method '" + args.method + "'");
  }
  const Complex oracle = trace_polynomial_reference(coeffs, a);

  json j;
  j["command"] = "spectral-sum";
  j["method"] = args.method;
  j["mode"] = args.mode;
  j["degree"] = coeffs.size() - 1;
  j["estimate"] = complex_json(estimate);
  j["exact_oracle"] = complex_json(oracle);
  j["abs_error"] = std::abs(estimate - oracle);
  j["shots"] = args.shots;
  j["seed"] = args.seed;
  emit_report(j, args.report, args.out);
  return 0;
}

struct CircuitSourceArgs {
  std::string matrix;
  std::string circuit;
  std::string out;
  std::string report = "text";
};

// A circuit argument comes either from a circuit JSON file or by
// synthesizing a matrix JSON file.
CircuitFile load_circuit_source(const CircuitSourceArgs& args) {
  if (!args.circuit.empty()) return read_circuit_json(args.circuit);
  if (args.matrix.empty()) {
    throw DimensionError("need --circuit or --matrix");
  }
  const ComplexMatrix a = read_matrix_json(args.matrix);
  MatrixStatePrep p = synthesize_state_prep(a);
  return CircuitFile{p.circuit, MatrixDims{p.rows, p.cols}};
}

int run_synthesize(const CircuitSourceArgs& args) {
  const ComplexMatrix a = read_matrix_json(args.matrix);
  MatrixStatePrep p = synthesize_state_prep(a);
  const std::string text = circuit_to_json(p.circuit, MatrixDims{p.rows, p.cols}) + "\n";
  if (!args.out.empty()) {
    write_text_file(args.out, text);
  } else {
    std::cout << text;
  }
  return 0;
}

int run_export_qasm(const CircuitSourceArgs& args) {
  const CircuitFile file = load_circuit_source(args);
  const std::string qasm = export_qasm(file.circuit);
  if (!args.out.empty()) {
    write_text_file(args.out, qasm);
  } else {
    std::cout << qasm;
  }
  return 0;
}

int run_stats(const CircuitSourceArgs& args) {
  const CircuitFile file = load_circuit_source(args);
  const QuantumCircuit& c = file.circuit;
  json hist = json::object();
  for (const Gate& g : c.gates()) {
    const std::string name = gate_kind_name(g.kind());
    hist[name] = hist.value(name, 0) + 1;
  }
  json j;
  j["command"] = "stats";
  j["qubits"] = c.num_qubits();
  j["gates"] = c.gate_count();
  j["depth"] = c.depth();
  j["swap_count"] = c.swap_count();
  j["histogram"] = hist;
  emit_report(j, args.report, args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix state circuits: multivariate trace estimation and spectral sums"};
  app.require_subcommand(1);

  EstimateTraceArgs trace_args;
  CLI::App* trace_cmd =
      app.add_subcommand("estimate-trace", "estimate Tr(A1...Ak) from matrix JSON files");
  trace_cmd->add_option("--matrices", trace_args.matrices, "comma-separated matrix JSON paths")
      ->required();
  trace_cmd->add_option("--mode", trace_args.mode, "exact|hadamard|hadamard_imag|swap");
  trace_cmd->add_option("--shots", trace_args.shots, "shot count for sampled modes");
  trace_cmd->add_option("--seed", trace_args.seed, "PRNG seed");
  trace_cmd->add_option("--report", trace_args.report, "text|json");
  trace_cmd->add_option("--out", trace_args.out, "also write the report here");
  trace_cmd->add_option("--out-psi", trace_args.out_psi, "write the psi circuit JSON here");
  trace_cmd->add_option("--out-phi", trace_args.out_phi, "write the phi circuit JSON here");

  SpectralArgs spectral_args;
  CLI::App* spectral_cmd =
      app.add_subcommand("spectral-sum", "estimate Tr(p(A)) for a polynomial p");
  spectral_cmd->add_option("--matrix", spectral_args.matrix, "square matrix JSON path")
      ->required();
  spectral_cmd->add_option("--coeffs", spectral_args.coeffs, "c0,c1,... ascending powers")
      ->required();
  spectral_cmd->add_option("--method", spectral_args.method, "moments|factored");
  spectral_cmd->add_option("--mode", spectral_args.mode, "exact|hadamard|hadamard_imag|swap");
  spectral_cmd->add_option("--shots", spectral_args.shots, "shot count for sampled modes");
  spectral_cmd->add_option("--seed", spectral_args.seed, "PRNG seed");
  spectral_cmd->add_option("--report", spectral_args.report, "text|json");
  spectral_cmd->add_option("--out", spectral_args.out, "also write the report here");

  CircuitSourceArgs synth_args;
  CLI::App* synth_cmd =
      app.add_subcommand("synthesize", "amplitude-encoding circuit for a matrix");
  synth_cmd->add_option("--matrix", synth_args.matrix, "matrix JSON path")->required();
  synth_cmd->add_option("--out", synth_args.out, "circuit JSON output path");

  CircuitSourceArgs qasm_args;
  CLI::App* qasm_cmd = app.add_subcommand("export-qasm", "OpenQASM 2.0 for a circuit");
  qasm_cmd->add_option("--circuit", qasm_args.circuit, "circuit JSON path");
  qasm_cmd->add_option("--matrix", qasm_args.matrix, "matrix JSON path (synthesized first)");
  qasm_cmd->add_option("--out", qasm_args.out, "QASM output path");

  CircuitSourceArgs stats_args;
  CLI::App* stats_cmd = app.add_subcommand("stats", "gate statistics of a circuit");
  stats_cmd->add_option("--circuit", stats_args.circuit, "circuit JSON path");
  stats_cmd->add_option("--matrix", stats_args.matrix, "matrix JSON path (synthesized first)");
  stats_cmd->add_option("--report", stats_args.report, "text|json");
  stats_cmd->add_option("--out", stats_args.out, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (trace_cmd->parsed()) return run_estimate_trace(trace_args);
    if (spectral_cmd->parsed()) return run_spectral_sum(spectral_args);
    if (synth_cmd->parsed()) return run_synthesize(synth_args);
    if (qasm_cmd->parsed()) return run_export_qasm(qasm_args);
    if (stats_cmd->parsed()) return run_stats(stats_args);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const RootFindingError& e) {
    std::cerr << "root-finding error: " << e.what() << "\n";
    return kExitRootFinding;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const PermutationError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  }
  return 0;
}
