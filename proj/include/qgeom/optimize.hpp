#pragma once

// Riemannian descent for f(φ) = ΔA²·ΔB² on the sphere of states.
// ΔA²ΔB² is used instead of ΔAΔB since it has the same minimizers and is
// smooth at eigenstates.

#include <cstdint>
#include <optional>
#include <vector>

#include "qgeom/uncertainty.hpp"

namespace qgeom {

double uncertainty_product_sq(const Observable& a, const Observable& b,
                              const State& phi);

/// Gradient of f with respect to (Re φ, Im φ), packed as ∂/∂Re + i·∂/∂Im,
/// projected onto the horizontal space at φ. df = Re inner(δφ, g).
CVector riemannian_grad(const Observable& a, const Observable& b,
                        const State& phi);

struct DescentOptions {
  int max_iter = 2000;
  double grad_tol = 1e-8;    // relative to pair_scale(A, B)
  double armijo = 1e-4;
  double shrink = 0.5;
  int max_backtracks = 80;
  double certificate_tol = 1e-5;
};

struct OptimizeResult {
  State state;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  // Absent when the final state is an eigenstate of A (X = 0).
  std::optional<MinimalConditionResult> certificate;
  std::vector<double> objective_trace;
  std::uint64_t seed = 0;
  int restart = 0;
};

OptimizeResult minimize_product(const Observable& a, const Observable& b,
                                const State& start,
                                const DescentOptions& opts = {});

struct MultiStartOptions {
  int restarts = 8;
  std::uint64_t seed = 0;
  DescentOptions descent;
};

/// Restart 0 starts from `start` when given; every other restart from a Haar
/// state drawn with derive_seed(seed, k). The lowest final value wins, ties
/// going to the lower restart index.
OptimizeResult minimize_multistart(const Observable& a, const Observable& b,
                                   const std::optional<State>& start,
                                   const MultiStartOptions& opts);

}  // namespace qgeom
