#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cohwit/common.hpp"

namespace cohwit {

enum class StateDefect { NotSquare, BadDimension, NotHermitian, TraceNotOne, NotPositive };

// Names the enumerator, e.g. "not positive semidefinite".
std::string to_string(StateDefect defect);

// Rejection of a candidate density matrix: which invariant failed and by how
// much the check missed its tolerance.
class StateValidationError : public std::runtime_error {
 public:
  StateValidationError(StateDefect defect, double deviation);
  StateDefect defect() const { return defect_; }
  double deviation() const { return deviation_; }

 private:
  StateDefect defect_;
  double deviation_;
};

// A validated d x d density matrix: Hermitian, unit trace, positive
// semidefinite within tolerance. Immutable once constructed, so every
// instance carries its invariants.
class DensityMatrix {
 public:
  // Sole constructor path; throws StateValidationError on the first failed
  // check, in the order square -> dimension -> Hermitian -> trace -> positive.
  static DensityMatrix validated(const Matrix& m, double tol = kMatrixTol,
                                 double psd_tol = kPsdTol);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }

 private:
  explicit DensityMatrix(Matrix m) : entries_(std::move(m)) {}
  Matrix entries_;
};

// Sum of the moduli of all off-diagonal elements. Ranges over [0, d-1];
// zero exactly for diagonal states, d-1 for maximal coherent ones.
double l1_coherence(const DensityMatrix& state);

// True iff every off-diagonal modulus is at most tol.
bool is_incoherent(const DensityMatrix& state, double tol = kIncoherenceTol);

enum class StateKind { Pure, Mixed, Incoherent, MaximalCoherent };

// Accepts "pure", "mixed", "incoherent", "maximal-coherent"; throws
// std::invalid_argument on anything else.
StateKind parse_state_kind(const std::string& name);

// Seed-deterministic random ensembles for tests and trials. Pure states are
// normalized complex Gaussian vectors; mixed states are trace-normalized
// Gram matrices G G^dagger of square Gaussian G; incoherent states are
// random probability vectors on the diagonal; maximal-coherent states are
// pure with uniform moduli 1/sqrt(d) and independent random phases.
DensityMatrix random_state(int dim, std::uint64_t seed, StateKind kind);

}  // namespace cohwit
