#include "doctest.h"

#include <cmath>

#include "cohwit/state.hpp"
#include "oracles.hpp"

using namespace cohwit;

namespace {

Matrix plus_state() {
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return m;
}

StateDefect defect_of(const Matrix& m) {
  try {
    DensityMatrix::validated(m);
  } catch (const StateValidationError& e) {
    return e.defect();
  }
  FAIL("expected StateValidationError");
  return StateDefect::NotSquare;
}

}  // namespace

TEST_CASE("validation accepts genuine states") {
  CHECK(DensityMatrix::validated(plus_state()).dim() == 2);
  CHECK(DensityMatrix::validated(Matrix::Identity(5, 5) / 5.0).dim() == 5);
}

TEST_CASE("validation pinpoints the failed invariant") {
  CHECK(defect_of(Matrix::Zero(2, 3)) == StateDefect::NotSquare);
  CHECK(defect_of(Matrix::Identity(1, 1)) == StateDefect::BadDimension);

  Matrix asym(2, 2);
  asym << 0.5, 0.2, 0.1, 0.5;
  CHECK(defect_of(asym) == StateDefect::NotHermitian);

  CHECK(defect_of(Matrix::Identity(2, 2)) == StateDefect::TraceNotOne);

  // Hermitian with unit trace but eigenvalues (1 +/- sqrt(5))/2.
  Matrix indefinite(2, 2);
  indefinite << 1.0, 1.0, 1.0, 0.0;
  CHECK(defect_of(indefinite) == StateDefect::NotPositive);
  try {
    DensityMatrix::validated(indefinite);
  } catch (const StateValidationError& e) {
    CHECK(e.deviation() == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("validation tolerances have teeth") {
  Matrix nearly = plus_state();
  nearly(0, 1) += Complex(0.0, 5e-13);  // asymmetry below the default tolerance
  CHECK_NOTHROW(DensityMatrix::validated(nearly));
  CHECK_THROWS_AS(DensityMatrix::validated(nearly, 1e-13), StateValidationError);

  // A nearly pure state whose smallest eigenvalue is a rounding-level
  // negative must pass; the positivity slack exists exactly for this.
  DensityMatrix pure = random_state(6, 3, StateKind::Pure);
  CHECK_NOTHROW(DensityMatrix::validated(pure.matrix()));
}

TEST_CASE("l1 coherence sums off-diagonal moduli") {
  CHECK(l1_coherence(DensityMatrix::validated(plus_state())) == 1.0);
  CHECK(l1_coherence(DensityMatrix::validated(Matrix::Identity(4, 4) / 4.0)) == 0.0);

  for (int dim : {2, 3, 4, 6}) {
    DensityMatrix max = random_state(dim, 5, StateKind::MaximalCoherent);
    CHECK(l1_coherence(max) == doctest::Approx(dim - 1.0).epsilon(1e-12));
    DensityMatrix mixed = random_state(dim, 6, StateKind::Mixed);
    CHECK(l1_coherence(mixed) == doctest::Approx(oracle::l1_coherence(mixed.matrix())));
    CHECK(l1_coherence(mixed) <= dim - 1.0 + 1e-12);
  }
}

TEST_CASE("incoherence test thresholds on the largest off-diagonal modulus") {
  CHECK(is_incoherent(DensityMatrix::validated(Matrix::Identity(3, 3) / 3.0)));
  CHECK_FALSE(is_incoherent(DensityMatrix::validated(plus_state())));

  Matrix faint = Matrix::Identity(2, 2) / 2.0;
  faint(0, 1) = faint(1, 0) = 0.5e-10;
  CHECK(is_incoherent(DensityMatrix::validated(faint)));  // default tol 1e-10
  faint(0, 1) = faint(1, 0) = 2e-10;
  CHECK_FALSE(is_incoherent(DensityMatrix::validated(faint)));
  CHECK(is_incoherent(DensityMatrix::validated(faint), 1e-8));
}

TEST_CASE("state kind names parse strictly") {
  CHECK(parse_state_kind("pure") == StateKind::Pure);
  CHECK(parse_state_kind("mixed") == StateKind::Mixed);
  CHECK(parse_state_kind("incoherent") == StateKind::Incoherent);
  CHECK(parse_state_kind("maximal-coherent") == StateKind::MaximalCoherent);
  CHECK_THROWS_AS(parse_state_kind("thermal"), std::invalid_argument);
  CHECK_THROWS_AS(parse_state_kind("Pure"), std::invalid_argument);
}

TEST_CASE("random states are reproducible and well-formed") {
  for (StateKind kind : {StateKind::Pure, StateKind::Mixed, StateKind::Incoherent,
                         StateKind::MaximalCoherent}) {
    DensityMatrix a = random_state(4, 42, kind);
    DensityMatrix b = random_state(4, 42, kind);
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
    DensityMatrix c = random_state(4, 43, kind);
    CHECK((a.matrix() - c.matrix()).cwiseAbs().maxCoeff() > 1e-3);
  }
  CHECK_THROWS_AS(random_state(1, 0, StateKind::Pure), std::invalid_argument);
}

TEST_CASE("random state kinds deliver their advertised structure") {
  for (int dim : {2, 3, 5}) {
    DensityMatrix pure = random_state(dim, 7, StateKind::Pure);
    CHECK(std::abs((pure.matrix() * pure.matrix()).trace() - Complex(1.0, 0.0)) < 1e-12);

    DensityMatrix mixed = random_state(dim, 8, StateKind::Mixed);
    CHECK((mixed.matrix() * mixed.matrix()).trace().real() < 1.0 - 1e-6);

    DensityMatrix inc = random_state(dim, 9, StateKind::Incoherent);
    CHECK(is_incoherent(inc));
    CHECK(l1_coherence(inc) == 0.0);

    DensityMatrix max = random_state(dim, 10, StateKind::MaximalCoherent);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        CHECK(std::abs(max.matrix()(r, c)) == doctest::Approx(1.0 / dim).epsilon(1e-12));
  }
}
