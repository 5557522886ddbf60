#pragma once

// Reference computations for the tests, kept deliberately independent of the
// library's code paths: plain loops instead of coefficient formulas, literal
// matrix conjugation instead of the closed-form objective, and brute-force
// search instead of coordinate ascent. Slow and simple on purpose.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Sum of off-diagonal moduli, straight off the entries.
inline double l1_coherence(const Matrix& rho) {
  double sum = 0.0;
  for (int r = 0; r < rho.rows(); ++r)
    for (int c = 0; c < rho.cols(); ++c)
      if (r != c) sum += std::abs(rho(r, c));
  return sum;
}

// Re tr(W rho) by explicit double loop.
inline double mean_value(const Matrix& w, const Matrix& rho) {
  Complex trace(0.0, 0.0);
  for (int r = 0; r < w.rows(); ++r)
    for (int c = 0; c < w.cols(); ++c) trace += w(r, c) * rho(c, r);
  return trace.real();
}

// U = sum_j e^{i lam[j]} |perm[j]><j| as a dense matrix.
inline Matrix incoherent_unitary(const std::vector<int>& perm, const std::vector<double>& lam) {
  int d = static_cast<int>(perm.size());
  Matrix u = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) u(perm[j], j) = std::polar(1.0, lam[j]);
  return u;
}

// Mean value after conjugating the state, entirely through matrices.
inline double conjugated_mean(const Matrix& w, const Matrix& rho, const std::vector<int>& perm,
                              const std::vector<double>& lam) {
  Matrix u = incoherent_unitary(perm, lam);
  return mean_value(w, u * rho * u.adjoint());
}

// Pattern search refinement: from a start point, probe +/- step on every
// free phase, halving the step until it is tiny. Climbs to the local
// maximum enclosing the start.
inline double refine_phases(const Matrix& w, const Matrix& rho, const std::vector<int>& perm,
                            std::vector<double> lam, double step) {
  double best = conjugated_mean(w, rho, perm, lam);
  int d = static_cast<int>(lam.size());
  while (step > 1e-13) {
    bool improved = false;
    for (int j = 1; j < d; ++j) {
      for (double delta : {step, -step}) {
        std::vector<double> trial = lam;
        trial[j] += delta;
        double value = conjugated_mean(w, rho, perm, trial);
        if (value > best) {
          best = value;
          lam = std::move(trial);
          improved = true;
        }
      }
    }
    if (!improved) step /= 2.0;
  }
  return best;
}

// Global maximum of the witness mean over incoherent unitaries for dim 2 or
// 3: every relabeling, a dense phase grid to localize the best basin, then
// pattern-search refinement. Matrix arithmetic only.
inline double best_activated_mean(const Matrix& w, const Matrix& rho, int grid = 192) {
  int d = static_cast<int>(rho.rows());
  std::vector<int> perm(d);
  for (int j = 0; j < d; ++j) perm[j] = j;
  std::sort(perm.begin(), perm.end());

  double best = -std::numeric_limits<double>::infinity();
  double step = kTwoPi / grid;
  do {
    double coarse = -std::numeric_limits<double>::infinity();
    std::vector<double> at(d, 0.0);
    if (d == 2) {
      for (int i = 0; i < grid; ++i) {
        double value = conjugated_mean(w, rho, perm, {0.0, i * step});
        if (value > coarse) {
          coarse = value;
          at = {0.0, i * step};
        }
      }
    } else {  // d == 3
      for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
          double value = conjugated_mean(w, rho, perm, {0.0, i * step, j * step});
          if (value > coarse) {
            coarse = value;
            at = {0.0, i * step, j * step};
          }
        }
    }
    best = std::max(best, refine_phases(w, rho, perm, at, step));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oracle
