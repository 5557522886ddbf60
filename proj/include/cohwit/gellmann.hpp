#pragma once

#include <vector>

#include "cohwit/common.hpp"
#include "cohwit/state.hpp"

namespace cohwit {

// Traceless Hermitian generator basis of su(d): one symmetric and one
// antisymmetric generator per index pair plus d-1 diagonal generators.
// Every generator G satisfies tr(G G') = 2 delta_{GG'}; for d = 2 the three
// generators are the Pauli matrices sigma_x, sigma_y, sigma_z.
struct GellMannBasis {
  int dim = 0;
  std::vector<Matrix> symmetric;      // |j><k| + |k><j|, lexicographic pairs
  std::vector<Matrix> antisymmetric;  // -i|j><k| + i|k><j|, lexicographic pairs
  std::vector<Matrix> diagonal;       // index l = 1..d-1, stored at l-1

  const Matrix& sym(int j, int k) const { return symmetric[pair_index(dim, j, k)]; }
  const Matrix& anti(int j, int k) const { return antisymmetric[pair_index(dim, j, k)]; }
};

// Shared immutable basis for a dimension, built once on first use.
// Throws std::invalid_argument for dim < 2.
const GellMannBasis& gellmann_basis(int dim);

// Expansion coefficients of a state over the generator basis,
//   rho = I/d + (1/2) sum_i b_i G_i,
// so b_i = tr(rho G_i). The pair (j,k) entry stores the coefficients of the
// symmetric and antisymmetric generators, (2 Re rho_jk, -2 Im rho_jk).
struct BlochDecomposition {
  int dim = 0;
  std::vector<Eigen::Vector2d> pairs;  // lexicographic pair order
  std::vector<double> diagonal;        // d-1 entries

  const Eigen::Vector2d& pair(int j, int k) const { return pairs[pair_index(dim, j, k)]; }
  // Euclidean length of the pair coefficient vector; equals 2 |rho_jk|.
  double pair_norm(int j, int k) const { return pair(j, k).norm(); }
};

// Requires basis.dim == state.dim; throws std::invalid_argument otherwise.
BlochDecomposition decompose(const GellMannBasis& basis, const DensityMatrix& state);
BlochDecomposition decompose(const DensityMatrix& state);

// Rebuilds I/d + (1/2) sum_i b_i G_i. Hermitian with unit trace by
// construction but not necessarily positive: the result of tampering with
// coefficients must be re-validated before use as a state.
Matrix reconstruct(const BlochDecomposition& coefficients);

}  // namespace cohwit
