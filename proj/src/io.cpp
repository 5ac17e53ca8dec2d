#include "qbaker/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qbaker::io {

using nlohmann::json;

Format format_from_string(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  return fields;
}

std::vector<std::vector<double>> read_numeric_rows(std::istream& in, const std::string& header,
                                                   std::size_t width) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw std::invalid_argument("expected CSV header '" + header + "'");
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_line(line);
    if (fields.size() != width) throw std::invalid_argument("malformed CSV line: " + line);
    std::vector<double> row;
    for (const auto& f : fields) {
      std::size_t used = 0;
      row.push_back(std::stod(f, &used));
      if (used != f.size()) throw std::invalid_argument("malformed number: " + f);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json complex_pair(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

std::complex<double> pair_to_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

void write_matrix_csv(std::ostream& out, const MatrixXc& m) {
  out << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out << r << ',' << c << ',' << format_double(m(r, c).real()) << ','
          << format_double(m(r, c).imag()) << '\n';
    }
  }
}

MatrixXc read_matrix_csv(std::istream& in) {
  const auto rows = read_numeric_rows(in, "row,col,re,im", 4);
  Eigen::Index dim = 0;
  for (const auto& r : rows) dim = std::max({dim, Eigen::Index(r[0]) + 1, Eigen::Index(r[1]) + 1});
  if (static_cast<std::size_t>(dim * dim) != rows.size()) {
    throw std::invalid_argument("matrix CSV does not list every entry of a square matrix");
  }
  MatrixXc m(dim, dim);
  for (const auto& r : rows) m(Eigen::Index(r[0]), Eigen::Index(r[1])) = {r[2], r[3]};
  return m;
}

json matrix_to_json(const MatrixXc& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixXc matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a non-empty array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  MatrixXc m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) throw std::invalid_argument("ragged matrix JSON");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = pair_to_complex(j[r][c]);
  }
  return m;
}

void write_state_csv(std::ostream& out, const VectorXc& state) {
  out << "index,re,im\n";
  for (Eigen::Index j = 0; j < state.size(); ++j) {
    out << j << ',' << format_double(state(j).real()) << ',' << format_double(state(j).imag()) << '\n';
  }
}

VectorXc read_state_csv(std::istream& in) {
  const auto rows = read_numeric_rows(in, "index,re,im", 3);
  VectorXc state = VectorXc::Zero(static_cast<Eigen::Index>(rows.size()));
  std::vector<bool> seen(rows.size(), false);
  for (const auto& r : rows) {
    const auto j = static_cast<Eigen::Index>(r[0]);
    if (j < 0 || j >= state.size() || seen[static_cast<std::size_t>(j)]) {
      throw std::invalid_argument("state CSV indices must be a permutation of 0..size-1");
    }
    seen[static_cast<std::size_t>(j)] = true;
    state(j) = {r[1], r[2]};
  }
  return state;
}

json state_to_json(const VectorXc& state) {
  json amps = json::array();
  for (Eigen::Index j = 0; j < state.size(); ++j) amps.push_back(complex_pair(state(j)));
  return amps;
}

VectorXc state_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("state JSON must be an array");
  VectorXc state(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) state(static_cast<Eigen::Index>(i)) = pair_to_complex(j[i]);
  return state;
}

json circuit_to_json(const GateList& circuit) {
  json gates = json::array();
  for (const auto& g : circuit.gates) {
    json record{{"kind", to_string(g.kind)}, {"targets", g.targets}};
    if (g.kind == GateKind::single_qubit) {
      record["matrix"] = matrix_to_json(g.matrix);
    } else if (g.kind != GateKind::swap) {
      record["angle"] = g.angle;
    }
    gates.push_back(std::move(record));
  }
  return json{{"N", circuit.qubits}, {"gates", std::move(gates)}};
}

GateList circuit_from_json(const json& j) {
  GateList circuit{j.at("N").get<int>(), {}};
  for (const auto& record : j.at("gates")) {
    Gate g{gate_kind_from_string(record.at("kind").get<std::string>()),
           record.at("targets").get<std::vector<int>>(), 0.0, Matrix2c<double>::Identity()};
    if (g.kind == GateKind::single_qubit) {
      const MatrixXc m = matrix_from_json(record.at("matrix"));
      if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("single-qubit matrix must be 2x2");
      g.matrix = m;
    } else if (g.kind != GateKind::swap) {
      g.angle = record.at("angle").get<double>();
    }
    circuit.gates.push_back(std::move(g));
  }
  validate(circuit);
  return circuit;
}

void write_spectrum_csv(std::ostream& out, const SpectrumReport& report) {
  out << "index,phase,spacing\n";
  for (std::size_t i = 0; i < report.phases.size(); ++i) {
    out << i << ',' << format_double(report.phases[i]) << ',' << format_double(report.spacings[i]) << '\n';
  }
}

json localization_to_json(const LocalizationReport& report) {
  return json{{"label", report.label.str()},
              {"N", report.label.qubits()},
              {"n", report.label.dot()},
              {"support", report.support},
              {"off_window_max", report.off_window_max},
              {"uniform_modulus_dev", report.uniform_modulus_dev},
              {"window_mass", report.window_mass}};
}

}  // namespace qbaker::io
