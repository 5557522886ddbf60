#pragma once

#include "cohwit/state.hpp"
#include "cohwit/witness.hpp"

// Bundled three-level demonstration instance used by the sweep command and
// the tests: a one-parameter family of pure states probed with a fixed
// witness that is deliberately misaligned with every state in the family.
namespace cohwit::demo {

// Pure state cos(t)/sqrt(2) (|0> + |1>) + sin(t) |2>. At t = 0 it is the
// uniform superposition of |0> and |1>; at t = pi/2 it is the basis state
// |2> and carries no coherence.
DensityMatrix sweep_state(double theta);

// sym(0,1) + sym(1,2) - anti(0,2). All three weight pairs are unit vectors,
// with orientations (0, 3*pi/2, 0) -- the anti(0,2) component points away
// from the sweep states' coefficients, so no relabeling or rephasing of the
// basis can make this witness read off the full coherence for t in
// (0, pi/2).
Witness fixed_witness();
NormalizedWitness fixed_witness_normalized();

// l1-norm of coherence of sweep_state: cos(t)^2 + sqrt(2) sin(2t).
double sweep_coherence(double theta);

}  // namespace cohwit::demo
