#pragma once

#include <cstdint>
#include <vector>

#include "cohwit/state.hpp"
#include "cohwit/witness.hpp"

namespace cohwit {

// Permutation searches enumerate all dim! relabelings; refuse beyond this.
inline constexpr int kMaxEnumerationDim = 8;

// A unitary that maps diagonal states to diagonal states: a relabeling f of
// the basis combined with per-level phases, U = sum_j e^{i lambda_j}
// |f(j)><j|. Conjugating a state by U moves the (j,k) off-diagonal element
// to (f(j), f(k)) and rotates its phase by lambda_j - lambda_k; all moduli,
// and hence the l1-norm of coherence, are preserved.
class IncoherentUnitary {
 public:
  // permutation[j] is the image of level j; phases are the lambda_j. The
  // global phase is fixed by shifting lambda_0 to zero and wrapping the rest
  // into [0, 2*pi). Throws std::invalid_argument unless permutation is a
  // bijection on 0..d-1 and phases has matching length.
  IncoherentUnitary(std::vector<int> permutation, std::vector<double> phases);

  static IncoherentUnitary identity(int dim);

  int dim() const { return static_cast<int>(permutation_.size()); }
  const std::vector<int>& permutation() const { return permutation_; }
  const std::vector<double>& phases() const { return phases_; }
  Matrix matrix() const;

 private:
  std::vector<int> permutation_;
  std::vector<double> phases_;
};

// U rho U^dagger, revalidated.
DensityMatrix apply(const IncoherentUnitary& u, const DensityMatrix& state);

struct OptimizerConfig {
  int starts = 16;          // random phase starts per relabeling
  int max_sweeps = 200;     // coordinate-ascent sweep cap per start
  double tol = 1e-12;       // stop once a full sweep gains no more than this
  int grid_points = 0;      // if > 0 and dim <= 3, seed ascent from a dense phase grid
  std::uint64_t seed = 0;   // generator seed for the random starts
};

// Result of checking whether some relabeling f lines the witness up with the
// state: for every index triple i < j < k whose three off-diagonal elements
// are all nonzero, the witness orientations at the relabeled positions plus
// the element phases must compose consistently. When the check holds for
// states with all off-diagonal elements nonzero, phases exist that make
// every term of the mean value add up fully, so the optimum reaches the
// whole l1-norm of coherence.
struct MatchingVerdict {
  bool holds = false;
  std::vector<int> permutation;  // a certifying relabeling; empty when holds is false
};

MatchingVerdict matching_condition(const NormalizedWitness& w, const DensityMatrix& state,
                                   double angle_tol = kAngleTol,
                                   double support_tol = kMatrixTol);

// Closed form of tr(W U rho U^dagger) for U = (permutation, phases):
//   sum over pairs j<k of |b_jk| cos(theta_{f(j)f(k)} + arg rho_jk
//                                    + lambda_j - lambda_k)
// with |b_jk| = 2 |rho_jk|. phases must have length dim; only differences
// of its entries matter.
double objective_value(const NormalizedWitness& w, const DensityMatrix& state,
                       const std::vector<int>& permutation,
                       const std::vector<double>& phases);

// Maximum witness mean value over all incoherent unitaries, found by exact
// enumeration of relabelings combined with coordinate ascent over phases
// (exact single-phase updates, multi-start, optional grid seeding).
// Deterministic for a fixed config. Throws std::domain_error above
// kMaxEnumerationDim.
struct ActivationResult {
  double best_mean = 0.0;
  std::vector<int> permutation;
  std::vector<double> phases;
  double coherence = 0.0;  // l1-norm of coherence of the input state
  double gap = 0.0;        // coherence - best_mean; zero iff fully activated
  MatchingVerdict matching;
  bool converged = true;   // winning ascent met tol within the sweep cap
  int sweeps = 0;          // sweeps the winning ascent used

  IncoherentUnitary unitary() const { return IncoherentUnitary(permutation, phases); }
};

ActivationResult maximize_mean(const NormalizedWitness& w, const DensityMatrix& state,
                               const OptimizerConfig& config = {});

// Two-player reading of the same search: one side fixes a witness, the
// other answers with the incoherent unitary that maximizes the reading.
double game_payoff(const Witness& w, const DensityMatrix& state, const IncoherentUnitary& u);

struct GameResult {
  double payoff = 0.0;
  std::vector<int> permutation;
  std::vector<double> phases;
  bool converged = true;
  int sweeps = 0;

  IncoherentUnitary unitary() const { return IncoherentUnitary(permutation, phases); }
};

GameResult best_game_strategy(const Witness& w, const DensityMatrix& state,
                              const OptimizerConfig& config = {});

}  // namespace cohwit
