#include "cohwit/detection.hpp"

#include <random>

#include "cohwit/gellmann.hpp"

namespace cohwit {

std::string WitnessReading::label() const {
  return std::string(antisymmetric ? "anti(" : "sym(") + std::to_string(j) + "," +
         std::to_string(k) + ")";
}

std::string to_string(DetectionVerdict verdict) {
  switch (verdict) {
    case DetectionVerdict::Coherent: return "coherent";
    case DetectionVerdict::Incoherent: return "incoherent";
    case DetectionVerdict::Undetermined: return "undetermined";
  }
  return "unknown";
}

DetectionTranscript detect(const DensityMatrix& state, double tol) {
  BlochDecomposition b = decompose(state);
  DetectionTranscript out;

  for (int component = 0; component < 2; ++component)  // symmetric pass, then antisymmetric
    for (auto [j, k] : index_pairs(state.dim())) {
      double mean = b.pair(j, k)(component);
      out.readings.push_back({component == 1, j, k, mean});
      if (std::abs(mean) > tol) {
        out.verdict = DetectionVerdict::Coherent;
        return out;
      }
    }

  out.verdict = DetectionVerdict::Incoherent;
  return out;
}

DetectionStatistics detection_statistics(int dim, int trials, StateKind kind,
                                         std::uint64_t seed, double tol) {
  if (trials < 1) throw std::invalid_argument("detection_statistics: need at least one trial");

  std::mt19937_64 master(seed);
  DetectionStatistics stats;
  stats.trials = trials;
  long total = 0;
  for (int t = 0; t < trials; ++t) {
    DetectionTranscript transcript = detect(random_state(dim, master(), kind), tol);
    if (transcript.verdict == DetectionVerdict::Coherent) ++stats.coherent;
    ++stats.readings_used[transcript.count()];
    total += transcript.count();
  }
  stats.mean_readings = static_cast<double>(total) / trials;
  return stats;
}

}  // namespace cohwit
