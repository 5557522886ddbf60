#include "cohwit/common.hpp"

#include <cmath>
#include <stdexcept>

namespace cohwit {

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi || w == 0.0) w = 0.0;  // fold 2*pi from rounding, and -0.0, onto +0.0
  return w;
}

double circular_distance(double a, double b) {
  double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

int pair_count(int dim) {
  if (dim < 2) throw std::invalid_argument("pair_count: dimension must be at least 2");
  return dim * (dim - 1) / 2;
}

int pair_index(int dim, int j, int k) {
  if (j < 0 || k <= j || k >= dim)
    throw std::invalid_argument("pair_index: need 0 <= j < k < dim");
  // Pairs starting at rows 0..j-1 come first, then (j, j+1..k).
  return j * dim - j * (j + 1) / 2 + (k - j - 1);
}

std::vector<std::pair<int, int>> index_pairs(int dim) {
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count(dim));
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k) out.emplace_back(j, k);
  return out;
}

}  // namespace cohwit
