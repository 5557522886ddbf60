#include "cohwit/gellmann.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cohwit {

namespace {

GellMannBasis build_basis(int dim) {
  GellMannBasis basis;
  basis.dim = dim;
  basis.symmetric.reserve(pair_count(dim));
  basis.antisymmetric.reserve(pair_count(dim));
  basis.diagonal.reserve(dim - 1);

  const Complex i(0.0, 1.0);
  for (auto [j, k] : index_pairs(dim)) {
    Matrix s = Matrix::Zero(dim, dim);
    s(j, k) = 1.0;
    s(k, j) = 1.0;
    basis.symmetric.push_back(std::move(s));

    Matrix a = Matrix::Zero(dim, dim);
    a(j, k) = -i;
    a(k, j) = i;
    basis.antisymmetric.push_back(std::move(a));
  }

  for (int l = 1; l < dim; ++l) {
    Matrix g = Matrix::Zero(dim, dim);
    double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) g(j, j) = scale;
    g(l, l) = -scale * l;
    basis.diagonal.push_back(std::move(g));
  }
  return basis;
}

}  // namespace

const GellMannBasis& gellmann_basis(int dim) {
  if (dim < 2) throw std::invalid_argument("gellmann_basis: dimension must be at least 2");
  static std::map<int, GellMannBasis> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(dim);
  if (it == cache.end()) it = cache.emplace(dim, build_basis(dim)).first;
  return it->second;
}

BlochDecomposition decompose(const GellMannBasis& basis, const DensityMatrix& state) {
  if (basis.dim != state.dim())
    throw std::invalid_argument("decompose: basis and state dimensions differ");

  const Matrix& rho = state.matrix();
  BlochDecomposition out;
  out.dim = basis.dim;
  out.pairs.reserve(pair_count(basis.dim));
  for (auto [j, k] : index_pairs(basis.dim))
    out.pairs.emplace_back(2.0 * rho(j, k).real(), -2.0 * rho(j, k).imag());

  out.diagonal.reserve(basis.dim - 1);
  double partial = 0.0;  // sum of rho_jj for j < l
  for (int l = 1; l < basis.dim; ++l) {
    partial += rho(l - 1, l - 1).real();
    double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    out.diagonal.push_back(scale * (partial - l * rho(l, l).real()));
  }
  return out;
}

BlochDecomposition decompose(const DensityMatrix& state) {
  return decompose(gellmann_basis(state.dim()), state);
}

Matrix reconstruct(const BlochDecomposition& coefficients) {
  int dim = coefficients.dim;
  if (dim < 2) throw std::invalid_argument("reconstruct: dimension must be at least 2");
  const GellMannBasis& basis = gellmann_basis(dim);

  Matrix m = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  for (int p = 0; p < pair_count(dim); ++p) {
    m += 0.5 * coefficients.pairs[p](0) * basis.symmetric[p];
    m += 0.5 * coefficients.pairs[p](1) * basis.antisymmetric[p];
  }
  for (int l = 1; l < dim; ++l) m += 0.5 * coefficients.diagonal[l - 1] * basis.diagonal[l - 1];
  return m;
}

}  // namespace cohwit
