// qbaker: build, export, evolve, analyse and verify the qubit-shift baker maps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qbaker/analysis.hpp"
#include "qbaker/baker.hpp"
#include "qbaker/circuit.hpp"
#include "qbaker/io.hpp"
#include "qbaker/sampling.hpp"
#include "qbaker/verify.hpp"

namespace {

using namespace qbaker;

constexpr int kDenseCap = 12;
constexpr int kFastCap = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string target = "B";
  int qubits = 0;
  int dot = -1;
  std::string label;
  std::string input;
  std::string map = "Bn";
  std::string route = "transform";
  bool follow_dot = false;
  bool random_product = false;
  int steps = 0;
  std::uint64_t seed = 1999;
  std::string output = "-";
  std::string format = "csv";
  int max_qubits = 20;
  double perturb = 0.0;
  std::vector<int> bench_sizes{4, 6, 8, 10, 12, 16, 20};
  std::string report;
};

// Writes to stdout for "-", otherwise to the named file.
template <typename F>
void emit(const std::string& path, F&& write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output file: " + path);
  write(out);
}

void require_dense(int qubits) {
  if (qubits < 1 || qubits > kDenseCap) throw UsageError("dense commands need 1 <= N <= 12");
}

MatrixXc dense_target(const RunConfig& cfg) {
  require_dense(cfg.qubits);
  const Dimensions dims(cfg.qubits);
  if (cfg.target == "G") {
    if (cfg.dot < 0 || cfg.dot > cfg.qubits) throw UsageError("target G needs 0 <= n <= N");
    return partial_transform(dims, cfg.dot);
  }
  if (cfg.target == "F") return partial_transform(dims, 0);
  if (cfg.target == "B") {
    if (cfg.dot < 1 || cfg.dot > cfg.qubits) throw UsageError("target B needs 1 <= n <= N");
    return baker_dense(dims, cfg.dot);
  }
  if (cfg.target == "U") return displacement_U(dims);
  if (cfg.target == "V") return displacement_V(dims);
  throw UsageError("unknown target: " + cfg.target);
}

DotLabel label_for(const RunConfig& cfg) {
  DotLabel label = DotLabel::parse(cfg.label);
  if (cfg.qubits != 0 && label.qubits() != cfg.qubits) {
    throw UsageError("label " + cfg.label + " does not carry N = " + std::to_string(cfg.qubits) + " bits");
  }
  return label;
}

int cmd_matrix(const RunConfig& cfg) {
  const MatrixXc m = dense_target(cfg);
  const auto format = io::format_from_string(cfg.format);
  emit(cfg.output, [&](std::ostream& out) {
    if (format == io::Format::csv) {
      io::write_matrix_csv(out, m);
    } else {
      out << io::matrix_to_json(m).dump() << '\n';
    }
  });
  return 0;
}

int cmd_state(const RunConfig& cfg) {
  const DotLabel label = label_for(cfg);
  if (label.qubits() > kFastCap) throw UsageError("state export needs N <= 20");
  VectorXc psi;
  if (cfg.route == "transform") {
    psi = dot_state_transform(label);
  } else if (cfg.route == "product") {
    psi = dot_state_product(label);
  } else {
    throw UsageError("unknown route: " + cfg.route);
  }
  const auto format = io::format_from_string(cfg.format);
  emit(cfg.output, [&](std::ostream& out) {
    if (format == io::Format::csv) {
      io::write_state_csv(out, psi);
    } else {
      out << io::state_to_json(psi).dump() << '\n';
    }
  });
  return 0;
}

VectorXc read_input_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file: " + path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    return io::state_from_json(nlohmann::json::parse(in));
  }
  return io::read_state_csv(in);
}

int cmd_evolve(const RunConfig& cfg) {
  if (cfg.steps < 0) throw UsageError("steps must be non-negative");
  VectorXc psi;
  std::optional<DotLabel> tracked;
  int sources = int(!cfg.label.empty()) + int(!cfg.input.empty()) + int(cfg.random_product);
  if (sources != 1) throw UsageError("evolve needs exactly one of --label, --input, --random-product");
  if (!cfg.label.empty()) {
    tracked = label_for(cfg);
    psi = dot_state_transform(*tracked);
  } else if (!cfg.input.empty()) {
    psi = read_input_state(cfg.input);
    if (std::abs(psi.norm() - 1.0) > 1e-8) throw UsageError("input state is not normalized");
  } else {
    if (cfg.qubits < 1) throw UsageError("--random-product needs --N");
    Rng rng(cfg.seed);
    psi = random_product_state(cfg.qubits, rng);
  }
  const int qubits = qubits_for_size(psi.size());
  if (cfg.qubits != 0 && cfg.qubits != qubits) throw UsageError("--N does not match the initial state");
  if (qubits > kFastCap) throw UsageError("evolve needs N <= 20");

  int dot = cfg.dot;
  if (cfg.map == "BN") {
    dot = qubits;
  } else if (cfg.map != "Bn") {
    throw UsageError("unknown map: " + cfg.map + " (expected Bn or BN)");
  }
  if (cfg.follow_dot) {
    if (!tracked) throw UsageError("--follow-dot needs a --label input");
    if (cfg.steps > tracked->dot()) throw UsageError("--follow-dot allows at most n steps");
  } else if (dot < 1 || dot > qubits) {
    throw UsageError("map index n must lie in [1, N]");
  }

  emit(cfg.output, [&](std::ostream& out) {
    if (cfg.random_product) out << "# seed=" << cfg.seed << '\n';
    out << "step,norm,support,max_cut_entropy,label\n";
    auto row = [&](int step) {
      out << step << ',' << io::format_double(psi.norm()) << ',' << position_support(psi, 1e-12).size()
          << ',' << io::format_double(qubits >= 2 ? max_contiguous_cut_entropy(psi) : 0.0) << ','
          << (tracked ? tracked->str() : "") << '\n';
    };
    row(0);
    for (int step = 1; step <= cfg.steps; ++step) {
      const int map_index = cfg.follow_dot ? tracked->dot() : dot;
      apply_baker_fast_inplace(psi, map_index);
      if (tracked && tracked->dot() == map_index) {
        DotLabel next = label_shift(*tracked);
        const double overlap = std::norm(dot_state_transform(next).dot(psi));
        tracked = overlap >= 1.0 - 1e-10 ? std::optional<DotLabel>(std::move(next)) : std::nullopt;
      } else {
        tracked.reset();
      }
      row(step);
    }
  });
  return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
  const auto report = eigenphases(dense_target(cfg));
  emit(cfg.output, [&](std::ostream& out) { io::write_spectrum_csv(out, report); });
  return 0;
}

int cmd_localize(const RunConfig& cfg) {
  const DotLabel label = label_for(cfg);
  if (cfg.dot >= 0 && cfg.dot != label.dot()) throw UsageError("--n does not match the label's dot position");
  if (label.qubits() > kFastCap) throw UsageError("localize needs N <= 20");
  const auto report = check_strict_localization(label);
  emit(cfg.output, [&](std::ostream& out) { out << io::localization_to_json(report).dump(2) << '\n'; });
  return 0;
}

int cmd_circuit(const RunConfig& cfg) {
  if (cfg.qubits < 1 || cfg.qubits > kFastCap) throw UsageError("circuit needs 1 <= N <= 20");
  if (cfg.dot < 1 || cfg.dot > cfg.qubits) throw UsageError("circuit needs 1 <= n <= N");
  const auto circuit = emit_circuit(Dimensions(cfg.qubits), cfg.dot);
  emit(cfg.output, [&](std::ostream& out) { out << io::circuit_to_json(circuit).dump(2) << '\n'; });
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  verify::Options options{cfg.max_qubits, cfg.seed, cfg.perturb};
  std::cout << "seed " << options.seed << ", max-N " << options.max_qubits << '\n';
  std::vector<verify::Criterion> results;
  for (int id = 1; id <= verify::kCriterionCount; ++id) {
    results.push_back(verify::run_criterion(id, options));
    std::cout << verify::summary_line(results.back()) << std::endl;
  }
  const auto report = verify::report_json(results, options);
  if (!cfg.report.empty()) emit(cfg.report, [&](std::ostream& out) { out << report.dump(2) << '\n'; });
  const bool passed = report["passed"].get<bool>();
  std::cout << (passed ? "all checks passed" : "verification FAILED") << '\n';
  return passed ? 0 : 1;
}

int cmd_bench(const RunConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  auto time_best = [](int reps, auto&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
      const auto start = Clock::now();
      f();
      best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
    }
    return best;
  };
  const int dot = cfg.dot < 0 ? 1 : cfg.dot;
  Rng rng(cfg.seed);
  emit(cfg.output, [&](std::ostream& out) {
    out << "# seed=" << cfg.seed << '\n';
    out << "N,n,dense_seconds,fast_seconds,speedup,max_abs_diff\n";
    for (int qubits : cfg.bench_sizes) {
      if (qubits < 1 || qubits > kFastCap) throw UsageError("bench sizes must lie in [1, 20]");
      if (dot > qubits) throw UsageError("bench needs n <= N for every size");
      const VectorXc psi = random_state(qubits, rng);
      VectorXc fast_out;
      const double fast = time_best(3, [&] { fast_out = apply_baker_fast(psi, dot); });
      out << qubits << ',' << dot << ',';
      if (qubits <= kDenseCap) {
        const MatrixXc dense = baker_dense(Dimensions(qubits), dot);
        VectorXc dense_out(psi.size());
        const double slow = time_best(3, [&] { dense_out.noalias() = dense * psi; });
        out << io::format_double(slow) << ',' << io::format_double(fast) << ','
            << io::format_double(slow / fast) << ',' << io::format_double(max_abs_diff(fast_out, dense_out));
      } else {
        out << ',' << io::format_double(fast) << ",,";
      }
      out << '\n';
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit-shift quantum baker's maps: construction, export, analysis and verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_size = [&](CLI::App* sub) {
    sub->add_option("--N", cfg.qubits, "qubit count")->check(CLI::Range(1, 30));
  };
  auto add_dot = [&](CLI::App* sub) { sub->add_option("--n", cfg.dot, "dot position / map index"); };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "output path, - for stdout"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* matrix = app.add_subcommand("matrix", "export a dense G_n, B_n, U, V or F");
  matrix->add_option("--target", cfg.target, "G, B, U, V or F")->check(CLI::IsMember({"G", "B", "U", "V", "F"}));
  add_size(matrix), add_dot(matrix), add_output(matrix), add_format(matrix);
  matrix->get_option("--N")->required();

  auto* state = app.add_subcommand("state", "export a dot-basis state");
  add_size(state), add_output(state), add_format(state);
  state->add_option("--label", cfg.label, "dot label, e.g. 01.10")->required();
  state->add_option("--route", cfg.route, "transform or product")->check(CLI::IsMember({"transform", "product"}));

  auto* evolve = app.add_subcommand("evolve", "iterate a baker map and log per-step diagnostics");
  add_size(evolve), add_dot(evolve), add_output(evolve);
  evolve->add_option("--label", cfg.label, "initial dot label");
  evolve->add_option("--input", cfg.input, "initial amplitudes (index,re,im CSV or JSON)");
  evolve->add_flag("--random-product", cfg.random_product, "seeded random product initial state");
  evolve->add_option("--map", cfg.map, "Bn (use --n) or BN");
  evolve->add_flag("--follow-dot", cfg.follow_dot, "apply B_{current n} so the dot walks right each step");
  evolve->add_option("--steps", cfg.steps, "number of steps");
  evolve->add_option("--seed", cfg.seed, "random seed");

  auto* spectrum = app.add_subcommand("spectrum", "eigenphases and normalized spacings");
  spectrum->add_option("--target", cfg.target, "G, B, U, V or F")->check(CLI::IsMember({"G", "B", "U", "V", "F"}));
  add_size(spectrum), add_dot(spectrum), add_output(spectrum);
  spectrum->get_option("--N")->required();

  auto* localize = app.add_subcommand("localize", "position support and momentum window of a dot state");
  add_size(localize), add_dot(localize), add_output(localize);
  localize->add_option("--label", cfg.label, "dot label")->required();

  auto* circuit = app.add_subcommand("circuit", "lower B_n to a gate list (JSON)");
  add_size(circuit), add_dot(circuit), add_output(circuit);
  circuit->get_option("--N")->required();
  circuit->get_option("--n")->required();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--max-N", cfg.max_qubits, "cap for size sweeps")->check(CLI::Range(1, 20));
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--perturb", cfg.perturb, "fault injection into one G_n entry");
  verify->add_option("--report", cfg.report, "write the JSON report here");

  auto* bench = app.add_subcommand("bench", "time dense matvec against the fast apply");
  bench->add_option("--N", cfg.bench_sizes, "qubit counts")->delimiter(',');
  add_dot(bench), add_output(bench);
  bench->add_option("--seed", cfg.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*matrix) return cmd_matrix(cfg);
    if (*state) return cmd_state(cfg);
    if (*evolve) return cmd_evolve(cfg);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*localize) return cmd_localize(cfg);
    if (*circuit) return cmd_circuit(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*bench) return cmd_bench(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
