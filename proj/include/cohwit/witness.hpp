#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cohwit/common.hpp"
#include "cohwit/state.hpp"

namespace cohwit {

// A Hermitian observable built purely from the off-diagonal generators,
//   W = sum_{j<k} w^s_{jk} sym(j,k) + w^a_{jk} anti(j,k).
// Its mean value vanishes on every diagonal state, and any state with a
// nonzero mean value must be coherent -- with no false positives, because
// each witness is itself expressible through coherent states.
struct Witness {
  int dim = 0;
  std::vector<Eigen::Vector2d> pairs;  // (symmetric, antisymmetric) weight, lexicographic

  const Eigen::Vector2d& pair(int j, int k) const { return pairs[pair_index(dim, j, k)]; }
  // Dense Hermitian form with zero diagonal; entry (j,k) is w^s - i w^a.
  Matrix matrix() const;
};

// Witness whose weight pairs are all unit vectors (cos t, sin t); the angles
// t are its orientations. Its mean value is bounded by d-1 in modulus and
// never exceeds the l1-norm of coherence of the measured state.
struct NormalizedWitness {
  int dim = 0;
  std::vector<double> orientations;  // in [0, 2*pi), lexicographic pair order

  double orientation(int j, int k) const { return orientations[pair_index(dim, j, k)]; }
  // Orientation for an arbitrarily ordered index pair: swapping j and k
  // keeps the symmetric generator and negates the antisymmetric one, so the
  // angle flips sign.
  double oriented(int m, int n) const;

  Witness witness() const;
  Matrix matrix() const;
};

enum class WitnessDefect { NotSquare, BadDimension, NotHermitian, DiagonalNotZero };

std::string to_string(WitnessDefect defect);

// Rejection of a candidate witness matrix, mirroring StateValidationError.
class WitnessFormError : public std::runtime_error {
 public:
  WitnessFormError(WitnessDefect defect, double deviation);
  WitnessDefect defect() const { return defect_; }
  double deviation() const { return deviation_; }

 private:
  WitnessDefect defect_;
  double deviation_;
};

// Reads the weight pairs off a Hermitian matrix. Succeeds iff every diagonal
// entry vanishes within tol (equivalently: no identity or diagonal-generator
// component); throws WitnessFormError otherwise.
Witness witness_from_matrix(const Matrix& m, double tol = kMatrixTol);

// Witness construction was asked for a state with no coherence to certify.
class IncoherentStateError : public std::runtime_error {
 public:
  IncoherentStateError() : std::runtime_error("state is incoherent: no witness can flag it") {}
};

// Single-component witness for a coherent state: weight 1 on the generator
// whose coefficient has the largest modulus in the state (ties broken by
// lexicographic pair order, symmetric before antisymmetric). The resulting
// mean value is guaranteed nonzero. Throws IncoherentStateError if every
// off-diagonal modulus is at most tol.
Witness construct_for_state(const DensityMatrix& state, double tol = kIncoherenceTol);

// tr(W rho), evaluated independently as a matrix trace and as the dot
// product of weight and state coefficients; throws std::logic_error if the
// two routes disagree beyond rounding.
double mean_value(const Witness& w, const DensityMatrix& state);
double mean_value(const NormalizedWitness& w, const DensityMatrix& state);

struct CoherenceBound {
  double bound = 0.0;  // |<W>|, a certified lower bound on the l1 coherence
  double slack = 0.0;  // l1 coherence minus the bound; nonnegative up to rounding
};

CoherenceBound coherence_lower_bound(const NormalizedWitness& w, const DensityMatrix& state);

// The normalized witness whose orientations align with the state's pair
// coefficients; it is optimal: its mean value equals the l1-norm of
// coherence exactly. Pairs with zero coefficient vector get orientation 0.
NormalizedWitness optimal_witness(const DensityMatrix& state);

// Checks every weight pair for unit norm within tol; fills in the
// orientations if so, nullopt otherwise.
std::optional<NormalizedWitness> as_normalized(const Witness& w, double tol = 1e-9);

// Whether the orientations compose consistently, theta_jk + theta_kl =
// theta_jl (mod 2*pi) for every triple j < k < l. Exactly the witnesses
// whose mean value reaches d-1 on some maximal coherent state.
bool phase_consistent(const NormalizedWitness& w, double tol = kAngleTol);

}  // namespace cohwit
