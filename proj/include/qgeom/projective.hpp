#pragma once

// Fubini–Study geometry of rays. Distances are geodesic angles
// arccos|⟨φ,ψ⟩| multiplied by an explicit `scale` (1 gives range [0, π/2];
// 2 is the convention under which the spin-1/2 sum bound reads π/2).

#include <vector>

#include "qgeom/hilbert.hpp"

namespace qgeom {

struct Ray {
  State representative;
};

bool same_ray(const Ray& a, const Ray& b, double tol = 1e-12);

/// Eigenspaces of an observable; degenerate clusters are merged so that
/// distances never depend on the choice of basis inside a cluster.
struct EigenSet {
  std::vector<Eigenspace> eigenspaces;

  static EigenSet of(const Observable& a);
};

double fs_distance(const State& phi, const State& psi, double scale = 1.0);

/// ξ − inner(ξ, φ)·φ: the component orthogonal to the complex line of φ.
CVector horizontal(const CVector& xi, const State& phi);

double dist_to_eigenset(const EigenSet& set, const State& phi,
                        double scale = 1.0);
double dist_to_eigenset(const Observable& a, const State& phi,
                        double scale = 1.0);

/// Smallest principal angle over all pairs of eigenspaces.
double eigenset_distance(const EigenSet& sa, const EigenSet& sb,
                         double scale = 1.0);
double eigenset_distance(const Observable& a, const Observable& b,
                         double scale = 1.0);

struct TriangleReport {
  double d_phi_a = 0.0;
  double d_phi_b = 0.0;
  double d_a_b = 0.0;
  double slack = 0.0;  // d_phi_a + d_phi_b − d_a_b
};

TriangleReport triangle_report(const Observable& a, const Observable& b,
                               const State& phi, double scale = 1.0);

}  // namespace qgeom
