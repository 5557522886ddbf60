#include "cohwit/demo.hpp"

#include <cmath>

namespace cohwit::demo {

DensityMatrix sweep_state(double theta) {
  Eigen::Vector3cd v(std::cos(theta) / std::sqrt(2.0), std::cos(theta) / std::sqrt(2.0),
                     std::sin(theta));
  Matrix m = v * v.adjoint();
  return DensityMatrix::validated((m + m.adjoint()).eval() / 2.0);
}

Witness fixed_witness() {
  Witness w;
  w.dim = 3;
  w.pairs = {Eigen::Vector2d(1.0, 0.0),    // sym weight on (0,1)
             Eigen::Vector2d(0.0, -1.0),   // -anti weight on (0,2)
             Eigen::Vector2d(1.0, 0.0)};   // sym weight on (1,2)
  return w;
}

NormalizedWitness fixed_witness_normalized() {
  NormalizedWitness w;
  w.dim = 3;
  w.orientations = {0.0, 3.0 * std::numbers::pi / 2.0, 0.0};
  return w;
}

double sweep_coherence(double theta) {
  double c = std::cos(theta);
  return c * c + std::sqrt(2.0) * std::sin(2.0 * theta);
}

}  // namespace cohwit::demo
