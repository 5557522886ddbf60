#include "cohwit/witness.hpp"

#include <cmath>

#include "cohwit/gellmann.hpp"

namespace cohwit {

Matrix Witness::matrix() const {
  Matrix m = Matrix::Zero(dim, dim);
  for (auto [j, k] : index_pairs(dim)) {
    const Eigen::Vector2d& w = pair(j, k);
    m(j, k) = Complex(w(0) + 0.0, -w(1) + 0.0);  // + 0.0 folds -0.0 into +0.0
    m(k, j) = Complex(w(0) + 0.0, w(1) + 0.0);
  }
  return m;
}

double NormalizedWitness::oriented(int m, int n) const {
  if (m < n) return orientation(m, n);
  return wrap_angle(-orientation(n, m));
}

Witness NormalizedWitness::witness() const {
  Witness w;
  w.dim = dim;
  w.pairs.reserve(orientations.size());
  for (double t : orientations) w.pairs.emplace_back(std::cos(t), std::sin(t));
  return w;
}

Matrix NormalizedWitness::matrix() const { return witness().matrix(); }

std::string to_string(WitnessDefect defect) {
  switch (defect) {
    case WitnessDefect::NotSquare: return "not square";
    case WitnessDefect::BadDimension: return "dimension must be at least 2";
    case WitnessDefect::NotHermitian: return "not Hermitian";
    case WitnessDefect::DiagonalNotZero: return "diagonal part is nonzero";
  }
  return "unknown defect";
}

WitnessFormError::WitnessFormError(WitnessDefect defect, double deviation)
    : std::runtime_error("invalid witness matrix: " + to_string(defect) + " (deviation " +
                         std::to_string(deviation) + ")"),
      defect_(defect),
      deviation_(deviation) {}

Witness witness_from_matrix(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    throw WitnessFormError(WitnessDefect::NotSquare,
                           static_cast<double>(std::abs(m.rows() - m.cols())));
  if (m.rows() < 2)
    throw WitnessFormError(WitnessDefect::BadDimension, static_cast<double>(2 - m.rows()));

  double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol) throw WitnessFormError(WitnessDefect::NotHermitian, herm_dev);

  double diag_dev = m.diagonal().cwiseAbs().maxCoeff();
  if (diag_dev > tol) throw WitnessFormError(WitnessDefect::DiagonalNotZero, diag_dev);

  Witness w;
  w.dim = static_cast<int>(m.rows());
  w.pairs.reserve(pair_count(w.dim));
  for (auto [j, k] : index_pairs(w.dim)) w.pairs.emplace_back(m(j, k).real(), -m(j, k).imag());
  return w;
}

Witness construct_for_state(const DensityMatrix& state, double tol) {
  if (is_incoherent(state, tol)) throw IncoherentStateError();

  BlochDecomposition b = decompose(state);
  int best_pair = 0;
  int best_component = 0;
  double best = -1.0;
  for (int p = 0; p < pair_count(state.dim()); ++p)
    for (int c = 0; c < 2; ++c)
      if (std::abs(b.pairs[p](c)) > best) {  // strict: first maximum wins ties
        best = std::abs(b.pairs[p](c));
        best_pair = p;
        best_component = c;
      }

  Witness w;
  w.dim = state.dim();
  w.pairs.assign(pair_count(state.dim()), Eigen::Vector2d::Zero());
  w.pairs[best_pair](best_component) = 1.0;
  return w;
}

double mean_value(const Witness& w, const DensityMatrix& state) {
  if (w.dim != state.dim())
    throw std::invalid_argument("mean_value: witness and state dimensions differ");

  BlochDecomposition b = decompose(state);
  double via_coefficients = 0.0;
  double total_weight = 0.0;
  for (int p = 0; p < pair_count(w.dim); ++p) {
    via_coefficients += w.pairs[p].dot(b.pairs[p]);
    total_weight += w.pairs[p].norm();
  }

  double via_trace = (w.matrix() * state.matrix()).trace().real();
  if (std::abs(via_trace - via_coefficients) > kMatrixTol * std::max(1.0, total_weight))
    throw std::logic_error("mean_value: trace and coefficient routes disagree");
  return via_trace;
}

double mean_value(const NormalizedWitness& w, const DensityMatrix& state) {
  return mean_value(w.witness(), state);
}

CoherenceBound coherence_lower_bound(const NormalizedWitness& w, const DensityMatrix& state) {
  CoherenceBound out;
  out.bound = std::abs(mean_value(w, state));
  out.slack = l1_coherence(state) - out.bound;
  return out;
}

NormalizedWitness optimal_witness(const DensityMatrix& state) {
  BlochDecomposition b = decompose(state);
  NormalizedWitness w;
  w.dim = state.dim();
  w.orientations.reserve(b.pairs.size());
  for (const Eigen::Vector2d& v : b.pairs)
    w.orientations.push_back(v.norm() == 0.0 ? 0.0 : wrap_angle(std::atan2(v(1), v(0))));
  return w;
}

std::optional<NormalizedWitness> as_normalized(const Witness& w, double tol) {
  NormalizedWitness n;
  n.dim = w.dim;
  n.orientations.reserve(w.pairs.size());
  for (const Eigen::Vector2d& v : w.pairs) {
    if (std::abs(v.norm() - 1.0) > tol) return std::nullopt;
    n.orientations.push_back(wrap_angle(std::atan2(v(1), v(0))));
  }
  return n;
}

bool phase_consistent(const NormalizedWitness& w, double tol) {
  for (int j = 0; j < w.dim; ++j)
    for (int k = j + 1; k < w.dim; ++k)
      for (int l = k + 1; l < w.dim; ++l) {
        double sum = w.orientation(j, k) + w.orientation(k, l);
        if (circular_distance(sum, w.orientation(j, l)) > tol) return false;
      }
  return true;
}

}  // namespace cohwit
