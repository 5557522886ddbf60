#include "cohwit/activation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace cohwit {

IncoherentUnitary::IncoherentUnitary(std::vector<int> permutation, std::vector<double> phases)
    : permutation_(std::move(permutation)), phases_(std::move(phases)) {
  int d = static_cast<int>(permutation_.size());
  if (d < 2) throw std::invalid_argument("IncoherentUnitary: dimension must be at least 2");
  if (phases_.size() != permutation_.size())
    throw std::invalid_argument("IncoherentUnitary: permutation and phases lengths differ");
  std::vector<char> seen(d, 0);
  for (int v : permutation_) {
    if (v < 0 || v >= d || seen[v])
      throw std::invalid_argument("IncoherentUnitary: not a permutation of 0..dim-1");
    seen[v] = 1;
  }
  double offset = phases_[0];
  for (double& p : phases_) p = wrap_angle(p - offset);
}

IncoherentUnitary IncoherentUnitary::identity(int dim) {
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  return IncoherentUnitary(std::move(perm), std::vector<double>(dim, 0.0));
}

Matrix IncoherentUnitary::matrix() const {
  Matrix u = Matrix::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j) u(permutation_[j], j) = std::polar(1.0, phases_[j]);
  return u;
}

DensityMatrix apply(const IncoherentUnitary& u, const DensityMatrix& state) {
  if (u.dim() != state.dim()) throw std::invalid_argument("apply: dimensions differ");
  Matrix um = u.matrix();
  Matrix m = um * state.matrix() * um.adjoint();
  return DensityMatrix::validated(((m + m.adjoint()) / 2.0).eval());
}

namespace {

// One summand of the phase objective: weight * cos(angle + lam[a] - lam[b]).
struct Term {
  int a = 0;
  int b = 0;
  double weight = 0.0;
  double angle = 0.0;
};

double evaluate(const std::vector<Term>& terms, const std::vector<double>& lam) {
  double g = 0.0;
  for (const Term& t : terms) g += t.weight * std::cos(t.angle + lam[t.a] - lam[t.b]);
  return g;
}

// The mean value of a witness after conjugating the state by (perm, lam),
// written as a sum of cosines over the state's off-diagonal elements. Terms
// whose weight vanishes are dropped.
std::vector<Term> build_terms(int dim, const std::vector<Complex>& pair_weights,
                              const Matrix& rho, const std::vector<int>& perm) {
  std::vector<Term> terms;
  terms.reserve(pair_count(dim));
  for (auto [j, k] : index_pairs(dim)) {
    double modulus = 2.0 * std::abs(rho(j, k));
    if (modulus == 0.0) continue;
    // The element moves to positions (perm[j], perm[k]); read the witness
    // weight there, conjugated when the positions come out reversed.
    Complex w = perm[j] < perm[k] ? pair_weights[pair_index(dim, perm[j], perm[k])]
                                  : std::conj(pair_weights[pair_index(dim, perm[k], perm[j])]);
    if (std::abs(w) == 0.0) continue;
    terms.push_back(
        {j, k, std::abs(w) * modulus, wrap_angle(std::arg(w) + std::arg(rho(j, k)))});
  }
  return terms;
}

struct AscentOutcome {
  double value = 0.0;
  std::vector<double> lam;
  bool converged = false;
  int sweeps = 0;
};

// Cyclic coordinate ascent with exact single-phase updates: with all other
// phases held fixed the objective is a single sinusoid in lam[j], whose
// maximum has a closed form. lam[0] stays pinned at zero throughout.
AscentOutcome ascend(const std::vector<Term>& terms, int dim, std::vector<double> lam,
                     int max_sweeps, double tol) {
  AscentOutcome out;
  double value = evaluate(terms, lam);
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    for (int j = 1; j < dim; ++j) {
      Complex c(0.0, 0.0);
      for (const Term& t : terms) {
        if (t.a == j)
          c += std::polar(t.weight, t.angle - lam[t.b]);
        else if (t.b == j)
          c += std::polar(t.weight, -(t.angle + lam[t.a]));
      }
      // Objective restricted to lam[j] is |c| cos(lam[j] + arg c).
      if (std::abs(c) > 0.0) lam[j] = wrap_angle(-std::arg(c));
    }
    double next = evaluate(terms, lam);
    out.sweeps = sweep;
    bool settled = next - value <= tol;
    value = next;
    if (settled) {
      out.converged = true;
      break;
    }
  }
  out.value = value;
  out.lam = std::move(lam);
  return out;
}

// Aligns a spanning forest of the support graph exactly: every visited edge
// contributes its full weight. On forest supports (in particular any state
// with at most two nonzero off-diagonal elements, and every qubit state)
// this start already attains the global maximum.
std::vector<double> tree_start(const std::vector<Term>& terms, int dim) {
  std::vector<double> lam(dim, 0.0);
  std::vector<std::vector<std::pair<int, double>>> adj(dim);  // (neighbor, lam gap to it)
  for (const Term& t : terms) {
    adj[t.a].emplace_back(t.b, t.angle);  // angle + lam[a] - lam[b] = 0
    adj[t.b].emplace_back(t.a, -t.angle);
  }
  std::vector<char> visited(dim, 0);
  std::vector<int> stack;
  for (int root = 0; root < dim; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    stack.assign(1, root);
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      for (auto [nb, gap] : adj[node])
        if (!visited[nb]) {
          visited[nb] = 1;
          lam[nb] = wrap_angle(lam[node] + gap);
          stack.push_back(nb);
        }
    }
  }
  return lam;
}

// Best grid node of the objective over the phase torus, used to seed the
// ascent. Only worthwhile for one or two free phases; the two-phase scan
// costs n^2 lookups into three precomputed tables.
std::vector<double> grid_start(const std::vector<Term>& terms, int dim, int n) {
  double step = kTwoPi / n;
  if (dim == 2) {
    std::vector<double> lam(2, 0.0);
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      double g = 0.0;
      for (const Term& t : terms) g += t.weight * std::cos(t.angle - i * step);
      if (g > best) {
        best = g;
        lam[1] = i * step;
      }
    }
    return lam;
  }

  // dim == 3: g(i,j) = A[i] + B[j] + C[i-j], tabulated per variable pattern.
  std::vector<double> a(n, 0.0), b(n, 0.0), c2(2 * n, 0.0);
  for (const Term& t : terms) {
    if (t.a == 0 && t.b == 1)
      for (int i = 0; i < n; ++i) a[i] += t.weight * std::cos(t.angle - i * step);
    else if (t.a == 0 && t.b == 2)
      for (int i = 0; i < n; ++i) b[i] += t.weight * std::cos(t.angle - i * step);
    else  // (1,2): offset index by n so i - j + n stays in [1, 2n-1]
      for (int i = 0; i < 2 * n; ++i) c2[i] += t.weight * std::cos(t.angle + (i - n) * step);
  }

  double best = -std::numeric_limits<double>::infinity();
  int best_i = 0, best_j = 0;
  for (int i = 0; i < n; ++i) {
    const double ai = a[i];
    const double* c = c2.data() + i + n;  // c[-j] = c2[i - j + n]
    for (int j = 0; j < n; ++j) {
      double g = ai + b[j] + c[-j];
      if (g > best) {
        best = g;
        best_i = i;
        best_j = j;
      }
    }
  }
  return {0.0, best_i * step, best_j * step};
}

std::vector<Complex> complex_pairs(const Witness& w) {
  std::vector<Complex> out;
  out.reserve(w.pairs.size());
  for (const Eigen::Vector2d& v : w.pairs) out.emplace_back(v(0), v(1));
  return out;
}

struct SearchOutcome {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<int> perm;
  std::vector<double> lam;
  bool converged = true;
  int sweeps = 0;
};

// Exhausts all relabelings; for each, runs the ascent from a fixed start
// set: zero phases, the forest-aligned start, optionally the best grid node,
// and config.starts random draws. Deterministic for a fixed config.
SearchOutcome optimize(int dim, const std::vector<Complex>& pair_weights,
                       const DensityMatrix& state, const OptimizerConfig& config) {
  if (dim > kMaxEnumerationDim)
    throw std::domain_error("relabeling search enumerates dim! cases; dimension capped at " +
                            std::to_string(kMaxEnumerationDim));

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);

  SearchOutcome best;
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Term> terms = build_terms(dim, pair_weights, state.matrix(), perm);

    std::vector<std::vector<double>> starts;
    starts.emplace_back(dim, 0.0);
    starts.push_back(tree_start(terms, dim));
    if (config.grid_points > 0 && dim <= 3)
      starts.push_back(grid_start(terms, dim, config.grid_points));
    for (int s = 0; s < config.starts; ++s) {
      std::vector<double> lam(dim, 0.0);
      for (int j = 1; j < dim; ++j) lam[j] = uniform(rng);
      starts.push_back(std::move(lam));
    }

    for (std::vector<double>& start : starts) {
      AscentOutcome run =
          ascend(terms, dim, std::move(start), config.max_sweeps, config.tol);
      if (run.value > best.value) {
        best.value = run.value;
        best.perm = perm;
        best.lam = std::move(run.lam);
        best.converged = run.converged;
        best.sweeps = run.sweeps;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return best;
}

}  // namespace

MatchingVerdict matching_condition(const NormalizedWitness& w, const DensityMatrix& state,
                                   double angle_tol, double support_tol) {
  if (w.dim != state.dim())
    throw std::invalid_argument("matching_condition: witness and state dimensions differ");
  int dim = state.dim();
  if (dim > kMaxEnumerationDim)
    throw std::domain_error("relabeling search enumerates dim! cases; dimension capped at " +
                            std::to_string(kMaxEnumerationDim));

  const Matrix& rho = state.matrix();
  auto supported = [&](int j, int k) { return 2.0 * std::abs(rho(j, k)) > support_tol; };
  // Angle the (j,k) cosine term must cancel with phase gaps under relabeling f.
  auto alpha = [&](const std::vector<int>& f, int j, int k) {
    return w.oriented(f[j], f[k]) + std::arg(rho(j, k));
  };

  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i < dim; ++i)
      for (int j = i + 1; ok && j < dim; ++j) {
        if (!supported(i, j)) continue;
        for (int k = j + 1; ok && k < dim; ++k) {
          if (!supported(j, k) || !supported(i, k)) continue;
          double lhs = alpha(perm, i, j) + alpha(perm, j, k);
          if (circular_distance(lhs, alpha(perm, i, k)) > angle_tol) ok = false;
        }
      }
    if (ok) return {true, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));

  return {false, {}};
}

double objective_value(const NormalizedWitness& w, const DensityMatrix& state,
                       const std::vector<int>& permutation, const std::vector<double>& phases) {
  if (w.dim != state.dim())
    throw std::invalid_argument("objective_value: witness and state dimensions differ");
  IncoherentUnitary u(permutation, phases);  // validates the relabeling and lengths
  if (u.dim() != state.dim())
    throw std::invalid_argument("objective_value: relabeling dimension differs from state");

  std::vector<Term> terms =
      build_terms(state.dim(), complex_pairs(w.witness()), state.matrix(), permutation);
  return evaluate(terms, phases);  // a common offset in the phases cancels
}

ActivationResult maximize_mean(const NormalizedWitness& w, const DensityMatrix& state,
                               const OptimizerConfig& config) {
  if (w.dim != state.dim())
    throw std::invalid_argument("maximize_mean: witness and state dimensions differ");

  SearchOutcome best = optimize(state.dim(), complex_pairs(w.witness()), state, config);
  ActivationResult result;
  result.best_mean = best.value;
  result.permutation = std::move(best.perm);
  result.phases = std::move(best.lam);
  result.coherence = l1_coherence(state);
  result.gap = result.coherence - result.best_mean;
  result.matching = matching_condition(w, state);
  result.converged = best.converged;
  result.sweeps = best.sweeps;
  return result;
}

double game_payoff(const Witness& w, const DensityMatrix& state, const IncoherentUnitary& u) {
  if (w.dim != state.dim())
    throw std::invalid_argument("game_payoff: witness and state dimensions differ");
  return mean_value(w, apply(u, state));
}

GameResult best_game_strategy(const Witness& w, const DensityMatrix& state,
                              const OptimizerConfig& config) {
  if (w.dim != state.dim())
    throw std::invalid_argument("best_game_strategy: witness and state dimensions differ");

  SearchOutcome best = optimize(state.dim(), complex_pairs(w), state, config);
  GameResult result;
  result.payoff = best.value;
  result.permutation = std::move(best.perm);
  result.phases = std::move(best.lam);
  result.converged = best.converged;
  result.sweeps = best.sweeps;
  return result;
}

}  // namespace cohwit
