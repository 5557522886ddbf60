#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cohwit/state.hpp"

namespace cohwit {

// One step of the sequential protocol: the mean value of a single-generator
// witness (weight 1 on one symmetric or antisymmetric generator).
struct WitnessReading {
  bool antisymmetric = false;
  int j = 0;
  int k = 0;
  double mean = 0.0;

  std::string label() const;  // "sym(j,k)" or "anti(j,k)"
};

enum class DetectionVerdict { Coherent, Incoherent, Undetermined };

std::string to_string(DetectionVerdict verdict);

struct DetectionTranscript {
  std::vector<WitnessReading> readings;
  DetectionVerdict verdict = DetectionVerdict::Undetermined;

  int count() const { return static_cast<int>(readings.size()); }
};

// Measures single-generator witnesses in a fixed order -- all symmetric
// generators in lexicographic pair order, then all antisymmetric ones -- and
// stops at the first reading with |mean| > tol, declaring the state
// coherent. A state that survives all d(d-1) readings is declared
// incoherent: every off-diagonal modulus is then at most tol/sqrt(2), and
// conversely any state with some modulus above tol necessarily trips a
// reading. With exact means the Undetermined verdict is never produced; it
// exists for callers that abort the protocol early.
DetectionTranscript detect(const DensityMatrix& state, double tol = kIncoherenceTol);

// Aggregate behaviour of the protocol over seed-deterministic random states.
struct DetectionStatistics {
  int trials = 0;
  int coherent = 0;                     // trials ending in a Coherent verdict
  std::map<int, int> readings_used;     // readings per trial -> trial count
  double mean_readings = 0.0;
};

DetectionStatistics detection_statistics(int dim, int trials, StateKind kind,
                                         std::uint64_t seed, double tol = kIncoherenceTol);

}  // namespace cohwit
