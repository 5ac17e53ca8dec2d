#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace qbaker::verify {

struct Options {
  /// Caps every "for all N <= k" sweep and gates the N = 12 / N = 20 performance checks.
  int max_qubits = 20;
  std::uint64_t seed = 1999;
  /// Noise added to one entry of G_0 (N = 3) in the unitarity check; 0 disables.
  double perturb = 0.0;
};

enum class Bound { at_most, at_least };

struct Measurement {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Bound bound = Bound::at_most;

  bool passed() const;
  /// Distance to the threshold on the passing side; negative means failure.
  double margin() const;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::vector<Measurement> measurements;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const;
};

inline constexpr int kCriterionCount = 12;

/// Runs one acceptance criterion (1..12).
Criterion run_criterion(int id, const Options& options);
std::vector<Criterion> run_all(const Options& options);

nlohmann::json report_json(const std::vector<Criterion>& results, const Options& options);

/// One `[PASS]`/`[FAIL]` line.
std::string summary_line(const Criterion& c);

}  // namespace qbaker::verify
