#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "qbaker/analysis.hpp"
#include "qbaker/circuit.hpp"
#include "qbaker/types.hpp"

// Text formats. Doubles are written with 17 significant digits so every
// file re-parses to the in-memory values bit for bit.
namespace qbaker::io {

enum class Format { csv, json };
Format format_from_string(const std::string& name);

/// CSV: header `row,col,re,im` then one line per entry, row-major.
void write_matrix_csv(std::ostream& out, const MatrixXc& m);
MatrixXc read_matrix_csv(std::istream& in);

/// JSON: nested arrays of [re, im].
nlohmann::json matrix_to_json(const MatrixXc& m);
MatrixXc matrix_from_json(const nlohmann::json& j);

/// CSV: header `index,re,im`.
void write_state_csv(std::ostream& out, const VectorXc& state);
VectorXc read_state_csv(std::istream& in);
nlohmann::json state_to_json(const VectorXc& state);
VectorXc state_from_json(const nlohmann::json& j);

/// `{ "N": ..., "gates": [ {"kind": ..., "targets": [...], "angle"|"matrix": ...}, ... ] }`
nlohmann::json circuit_to_json(const GateList& circuit);
GateList circuit_from_json(const nlohmann::json& j);

/// CSV: header `index,phase,spacing`.
void write_spectrum_csv(std::ostream& out, const SpectrumReport& report);

nlohmann::json localization_to_json(const LocalizationReport& report);

std::string format_double(double v);

}  // namespace qbaker::io
