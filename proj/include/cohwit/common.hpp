#pragma once

#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cohwit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Absolute tolerance for matrix-equality style checks (hermiticity, trace,
// coefficient identities).
inline constexpr double kMatrixTol = 1e-12;

// Slack allowed on the smallest eigenvalue when testing positivity;
// eigensolvers on nearly pure states report tiny negative values.
inline constexpr double kPsdTol = 1e-10;

// Default threshold below which an off-diagonal element counts as zero.
inline constexpr double kIncoherenceTol = 1e-10;

// Tolerance for comparing orientation angles mod 2*pi.
inline constexpr double kAngleTol = 1e-9;

// Maps any angle into [0, 2*pi).
double wrap_angle(double a);

// Minimal distance between two angles on the circle.
double circular_distance(double a, double b);

// Number of index pairs j < k in dimension d.
int pair_count(int dim);

// Position of (j, k), j < k, in the lexicographic pair order shared by all
// modules: (0,1), (0,2), ..., (0,d-1), (1,2), ...
int pair_index(int dim, int j, int k);

// The full lexicographic list of index pairs (j, k), j < k.
std::vector<std::pair<int, int>> index_pairs(int dim);

}  // namespace cohwit
