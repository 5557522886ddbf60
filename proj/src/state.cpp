#include "cohwit/state.hpp"

#include <cmath>
#include <random>

namespace cohwit {

std::string to_string(StateDefect defect) {
  switch (defect) {
    case StateDefect::NotSquare: return "not square";
    case StateDefect::BadDimension: return "dimension must be at least 2";
    case StateDefect::NotHermitian: return "not Hermitian";
    case StateDefect::TraceNotOne: return "trace differs from one";
    case StateDefect::NotPositive: return "not positive semidefinite";
  }
  return "unknown defect";
}

StateValidationError::StateValidationError(StateDefect defect, double deviation)
    : std::runtime_error("invalid density matrix: " + to_string(defect) +
                         " (deviation " + std::to_string(deviation) + ")"),
      defect_(defect),
      deviation_(deviation) {}

DensityMatrix DensityMatrix::validated(const Matrix& m, double tol, double psd_tol) {
  if (m.rows() != m.cols())
    throw StateValidationError(StateDefect::NotSquare,
                               static_cast<double>(std::abs(m.rows() - m.cols())));
  if (m.rows() < 2)
    throw StateValidationError(StateDefect::BadDimension, static_cast<double>(2 - m.rows()));

  double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol) throw StateValidationError(StateDefect::NotHermitian, herm_dev);

  double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol) throw StateValidationError(StateDefect::TraceNotOne, trace_dev);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -psd_tol) throw StateValidationError(StateDefect::NotPositive, -min_eig);

  return DensityMatrix(m);
}

double l1_coherence(const DensityMatrix& state) {
  const Matrix& m = state.matrix();
  double sum = 0.0;
  for (int j = 0; j < state.dim(); ++j)
    for (int k = j + 1; k < state.dim(); ++k) sum += 2.0 * std::abs(m(j, k));
  return sum;
}

bool is_incoherent(const DensityMatrix& state, double tol) {
  const Matrix& m = state.matrix();
  for (int j = 0; j < state.dim(); ++j)
    for (int k = j + 1; k < state.dim(); ++k)
      if (std::abs(m(j, k)) > tol) return false;
  return true;
}

StateKind parse_state_kind(const std::string& name) {
  if (name == "pure") return StateKind::Pure;
  if (name == "mixed") return StateKind::Mixed;
  if (name == "incoherent") return StateKind::Incoherent;
  if (name == "maximal-coherent") return StateKind::MaximalCoherent;
  throw std::invalid_argument("unknown state kind: \"" + name +
                              "\" (expected pure, mixed, incoherent or maximal-coherent)");
}

namespace {

Eigen::VectorXcd gaussian_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int j = 0; j < dim; ++j) v(j) = Complex(gauss(rng), gauss(rng));
  return v;
}

}  // namespace

DensityMatrix random_state(int dim, std::uint64_t seed, StateKind kind) {
  if (dim < 2) throw std::invalid_argument("random_state: dimension must be at least 2");
  std::mt19937_64 rng(seed);
  Matrix m = Matrix::Zero(dim, dim);

  switch (kind) {
    case StateKind::Pure: {
      Eigen::VectorXcd v = gaussian_vector(dim, rng);
      v.normalize();
      m = v * v.adjoint();
      break;
    }
    case StateKind::Mixed: {
      Matrix g(dim, dim);
      for (int c = 0; c < dim; ++c) g.col(c) = gaussian_vector(dim, rng);
      m = g * g.adjoint();
      m /= m.trace();
      break;
    }
    case StateKind::Incoherent: {
      std::exponential_distribution<double> expo(1.0);
      double total = 0.0;
      Eigen::VectorXd p(dim);
      for (int j = 0; j < dim; ++j) total += p(j) = expo(rng);
      for (int j = 0; j < dim; ++j) m(j, j) = p(j) / total;
      break;
    }
    case StateKind::MaximalCoherent: {
      std::uniform_real_distribution<double> angle(0.0, kTwoPi);
      Eigen::VectorXcd v(dim);
      for (int j = 0; j < dim; ++j) v(j) = std::polar(1.0 / std::sqrt(dim), angle(rng));
      m = v * v.adjoint();
      break;
    }
  }
  // Round off asymmetric floating-point noise so validation is exact.
  m = ((m + m.adjoint()) / 2.0).eval();
  return DensityMatrix::validated(m);
}

}  // namespace cohwit
