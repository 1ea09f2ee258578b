#pragma once

// Observables as tangent fields X = −i·A⊥·φ on the sphere of states, and the
// uncertainty relations expressed through them.

#include "qgeom/hilbert.hpp"

namespace qgeom {

struct TangentVector {
  State at;
  CVector vec;
};

/// −i·A·φ, or −i·(A − ⟨A⟩)·φ when `center` is set. The centered field is
/// orthogonal to the whole fibre {e^{iα}φ}.
TangentVector tangent_field(const Observable& a, const State& phi, bool center);

/// ΔA as the length of the centered tangent field.
double std_dev(const Observable& a, const State& phi);

/// ΔA ≤ 1e-8·(spectral range of A), with a floor at round-off level.
bool is_eigenstate(const Observable& a, const State& phi);

struct UncertaintyReport {
  double delta_a = 0.0;
  double delta_b = 0.0;
  double area = 0.0;         // parallelogram area of X, Y
  double metric_term = 0.0;  // G(X, Y)
  double commutator_half = 0.0;
  double anticommutator_half = 0.0;
  double identity_residual = 0.0;
  double theta = 0.0;  // in [0, π]; 0 when degenerate
  double robertson_slack = 0.0;
  double schrodinger_slack = 0.0;
  double area_bound_slack = 0.0;

  // Not serialized.
  bool degenerate = false;           // ΔA·ΔB == 0
  double commutator_half_geometric = 0.0;  // |symplectic(X, Y)|
  double scale = 1.0;  // tolerance scale for quantities of order ΔA·ΔB
};

UncertaintyReport relations_report(const Observable& a, const Observable& b,
                                   const State& phi);

struct MinimalConditionResult {
  Complex lambda;
  double residual = 0.0;
  double re_lambda = 0.0;
  bool is_minimal = false;
};

/// Least-squares fit Y ≈ λ·X of the centered fields of B and A. Minimal
/// uncertainty for [A, B] = c·I needs Y ∥ X over C with λ purely imaginary.
MinimalConditionResult minimal_condition(const Observable& a,
                                         const Observable& b, const State& phi,
                                         double tol);

/// Tolerance scale for quantities of order ΔA·ΔB.
double pair_scale(const Observable& a, const Observable& b);

}  // namespace qgeom
