// Acceptance run: one PASS/FAIL line per criterion. Reference values come
// from the oracles below, which avoid the library's tangent-field, Gram and
// circulant code paths.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "qgeom/canonical.hpp"
#include "qgeom/evolution.hpp"
#include "qgeom/optimize.hpp"
#include "qgeom/projective.hpp"
#include "qgeom/random.hpp"
#include "qgeom/realify.hpp"
#include "qgeom/spin.hpp"
#include "qgeom/uncertainty.hpp"

using namespace qgeom;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] AC%d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ⟨A²⟩ − ⟨A⟩² straight from matrix moments.
double variance_by_moments(const CMatrix& a, const CVector& u) {
  const CVector au = a * u;
  const double mean = u.dot(au).real();
  return std::max(0.0, u.dot(a * au).real() - mean * mean);
}

CVector centered_field(const CMatrix& a, const CVector& u) {
  const CVector au = a * u;
  return Complex(0.0, -1.0) * (au - u.dot(au) * u);
}

RVector realify(const CVector& v) {
  RVector r(2 * v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    r(2 * k) = v(k).real();
    r(2 * k + 1) = v(k).imag();
  }
  return r;
}

// Sum of all 2×2 minors squared of the realified pair.
double area_sq_by_minors(const CVector& x, const CVector& y) {
  const RVector rx = realify(x), ry = realify(y);
  double sum = 0.0;
  for (Eigen::Index j = 0; j < rx.size(); ++j) {
    for (Eigen::Index k = j + 1; k < rx.size(); ++k) {
      const double m = rx(j) * ry(k) - rx(k) * ry(j);
      sum += m * m;
    }
  }
  return sum;
}

double product_by_moments(const CMatrix& a, const CMatrix& b, const CVector& v) {
  const CVector u = v / v.norm();
  return variance_by_moments(a, u) * variance_by_moments(b, u);
}

CVector fd_gradient(const CMatrix& a, const CMatrix& b, const CVector& v, double h) {
  CVector g(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    CVector p = v, m = v;
    p(k) += h;
    m(k) -= h;
    const double d_re = (product_by_moments(a, b, p) - product_by_moments(a, b, m)) / (2 * h);
    p = v;
    m = v;
    p(k) += Complex(0.0, h);
    m(k) -= Complex(0.0, h);
    const double d_im = (product_by_moments(a, b, p) - product_by_moments(a, b, m)) / (2 * h);
    g(k) = Complex(d_re, d_im);
  }
  return g;
}

// Distance from a qubit state to the nearest eigenvector of n·σ, read off the
// Bloch vector: cos d = √((1 + |r·n|)/2).
double qubit_dist(const CVector& u, const Eigen::Vector3d& axis) {
  const Complex a = u(0), b = u(1);
  const Eigen::Vector3d r(2.0 * (std::conj(a) * b).real(), 2.0 * (std::conj(a) * b).imag(),
                          std::norm(a) - std::norm(b));
  return std::acos(std::min(1.0, std::sqrt((1.0 + std::abs(r.dot(axis))) / 2.0)));
}

struct Instance {
  Observable a, b;
  State phi;
};

std::vector<Instance> corpus(int count, std::uint64_t seed) {
  constexpr int kDims[] = {2, 3, 4, 8, 16};
  Rng rng(seed);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    const int n = kDims[i % 5];
    Observable a = random_hermitian(n, rng);
    Observable b = random_hermitian(n, rng);
    out.push_back({std::move(a), std::move(b), haar_state(n, rng)});
  }
  return out;
}

void ac1_to_3() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cases = corpus(1000, 42);
  double worst_identity = 0.0, worst_oracle = 0.0;
  double worst_chain1 = 0.0, worst_chain2 = 0.0, worst_cs = 0.0;
  for (const auto& c : cases) {
    const UncertaintyReport r = relations_report(c.a, c.b, c.phi);
    const double s = pair_scale(c.a, c.b);
    const CVector& u = c.phi.amplitudes();
    const double va = variance_by_moments(c.a.matrix(), u);
    const double vb = variance_by_moments(c.b.matrix(), u);
    const CVector x = centered_field(c.a.matrix(), u);
    const CVector y = centered_field(c.b.matrix(), u);
    const double g = (x.dot(y)).real();

    worst_identity = std::max(worst_identity, std::abs(r.identity_residual) / (s * s));
    // Oracle form of the identity: moments vs minors and the real inner product.
    worst_oracle = std::max(worst_oracle,
                            std::abs(va * vb - area_sq_by_minors(x, y) - g * g) / (s * s));
    worst_oracle = std::max(worst_oracle, std::abs(r.delta_a * r.delta_a - va) / s);

    worst_chain1 = std::min(worst_chain1, (r.delta_a * r.delta_b - r.area) / s);
    worst_chain2 = std::min(worst_chain2, r.area_bound_slack / s);
    const double cs = x.squaredNorm() * y.squaredNorm() - std::norm(x.dot(y));
    worst_cs = std::max(worst_cs, std::abs(r.schrodinger_slack - cs) / (s * s));
  }
  const double elapsed = seconds_since(t0);
  report(1, worst_identity <= 1e-10 && worst_oracle <= 1e-10 && elapsed < 10.0,
         "uncertainty identity",
         fmt("max |residual|/scale %.2e, oracle %.2e, %.2f s", worst_identity, worst_oracle,
             elapsed));
  report(2, worst_chain1 >= -1e-10 && worst_chain2 >= -1e-10, "inequality chain",
         fmt("min (dAdB - area)/scale %.2e, min (area - |<[A,B]>|/2)/scale %.2e",
             worst_chain1, worst_chain2));
  report(3, worst_cs <= 1e-10, "Schrodinger slack equals Cauchy-Schwarz gap",
         fmt("max difference/scale %.2e", worst_cs));
}

void ac4() {
  const Observable sx = spin::sigma_x(), sy = spin::sigma_y();
  const UncertaintyReport r = relations_report(sx, sy, State::basis(2, 0));
  const double product = r.delta_a * r.delta_b;
  bool ok = std::abs(product - 1.0) <= 1e-12 && std::abs(r.commutator_half - 1.0) <= 1e-12 &&
            std::abs(product - r.commutator_half) <= 1e-12;

  // Zero product exactly at eigenstates of either, positive elsewhere.
  double worst_eigen = 0.0;
  for (const Observable* o : {&sx, &sy}) {
    const SpectralDecomposition sd = spectral(*o);
    for (int k = 0; k < 2; ++k) {
      const State e = State::normalized(sd.eigenvectors.col(k)).with_phase(0.3 * k);
      const UncertaintyReport re = relations_report(sx, sy, e);
      worst_eigen = std::max(worst_eigen, re.delta_a * re.delta_b);
    }
  }
  Rng rng(4);
  double min_generic = 1e300;
  for (int k = 0; k < 1000; ++k) {
    const State phi = haar_state(2, rng);
    const UncertaintyReport rg = relations_report(sx, sy, phi);
    const double d = std::min(qubit_dist(phi.amplitudes(), {1, 0, 0}),
                              qubit_dist(phi.amplitudes(), {0, 1, 0}));
    if (d > 1e-6) min_generic = std::min(min_generic, rg.delta_a * rg.delta_b);
  }
  ok = ok && worst_eigen <= 1e-15 && min_generic > 0.0;
  report(4, ok, "Pauli equality case",
         fmt("|dAdB - 1| %.2e, max product at eigenstates %.2e, min elsewhere %.2e",
             std::abs(product - 1.0), worst_eigen, min_generic));
}

void ac5() {
  Rng rng(5);
  double worst = 0.0, ratio_lo = 1e300, ratio_hi = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Observable a = random_hermitian(8, rng);
    const State phi = haar_state(8, rng);
    const double delta = std::sqrt(variance_by_moments(a.matrix(), phi.amplitudes()));
    const double e1 = std::abs(projected_speed(a, phi, 1e-4) - delta);
    const double e2 = std::abs(projected_speed(a, phi, 5e-5) - delta);
    worst = std::max(worst, e1);
    ratio_lo = std::min(ratio_lo, e1 / e2);
    ratio_hi = std::max(ratio_hi, e1 / e2);
  }
  report(5, worst <= 1e-6 && ratio_lo >= 3.5 && ratio_hi <= 4.5, "speed law",
         fmt("max |speed - dA| %.2e, halving ratio in [%.3f, %.3f]", worst, ratio_lo,
             ratio_hi));
}

void ac6() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid g(512, 40.0, 1.0);
  const Observable x = position_op(g);
  const Observable p = momentum_op(g);
  const State psi = gaussian(g, 0.0, 0.0, 1.0);
  const UncertaintyReport r = relations_report(x, p, psi);
  const double product = r.delta_a * r.delta_b;

  // Momentum spread from the momentum-space distribution of a plain DFT.
  const int n = g.n();
  const RVector pts = g.points();
  double mean = 0.0, second = 0.0;
  for (int row = 0; row < n; ++row) {
    const double k = 2.0 * M_PI * (row - n / 2) / g.length();
    Complex amp = 0.0;
    for (int j = 0; j < n; ++j) {
      amp += std::polar(1.0 / std::sqrt(n), -k * pts(j)) * psi.amplitudes()(j);
    }
    const double w = std::norm(amp);
    mean += w * g.hbar() * k;
    second += w * g.hbar() * g.hbar() * k * k;
  }
  const double dp_oracle = std::sqrt(second - mean * mean);
  double xm = 0.0, x2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double w = std::norm(psi.amplitudes()(j));
    xm += w * pts(j);
    x2 += w * pts(j) * pts(j);
  }
  const double oracle = std::sqrt(x2 - xm * xm) * dp_oracle;

  const MinimalConditionResult m = minimal_condition(x, p, psi, 1e-6);
  const double elapsed = seconds_since(t0);
  // Lower edge allows a few ulps of round-off below hbar/2.
  const bool ok = product >= 0.5 - 1e-12 && product <= 0.5 + 1e-5 &&
                  std::abs(oracle - product) <= 1e-10 && m.residual <= 1e-5 &&
                  std::abs(m.re_lambda) <= 1e-6 && elapsed < 5.0;
  report(6, ok, "canonical minimum",
         fmt("dx dp - 1/2 = %.2e, residual %.2e, %.2f s", product - 0.5, m.residual, elapsed) +
             fmt(", |Re lambda| %.2e, oracle diff %.2e", std::abs(m.re_lambda),
                 std::abs(oracle - product)));
}

void ac7() {
  MultiStartOptions opts;
  opts.restarts = 8;
  opts.seed = 7;
  const OptimizeResult pauli =
      minimize_multistart(spin::sigma_x(), spin::sigma_y(), std::nullopt, opts);
  const double d = std::min(dist_to_eigenset(spin::sigma_x(), pauli.state),
                            dist_to_eigenset(spin::sigma_y(), pauli.state));

  const Grid g(256, 20.0, 1.0);
  const Observable x = position_op(g);
  const Observable p = momentum_op(g);
  DescentOptions grid_opts;
  grid_opts.max_iter = 2000;
  grid_opts.grad_tol = 1e-6;
  const OptimizeResult grid = minimize_product(p, x, gaussian(g, 0.0, 0.0, 1.3), grid_opts);
  const bool certified = grid.certificate && grid.certificate->is_minimal;

  // A non-Gaussian start: an asymmetric two-bump state. Only the value is
  // checked; the certificate needs more iterations than this budget.
  const RVector pts = g.points();
  CVector bumps(g.n());
  for (int j = 0; j < g.n(); ++j) {
    const double a = pts(j) - 1.0, b = pts(j) + 1.5;
    bumps(j) = std::exp(-a * a / 2.0) + Complex(0.0, 0.6) * std::exp(-b * b / 1.28);
  }
  const OptimizeResult far = minimize_product(p, x, State::normalized(bumps), grid_opts);

  report(7,
         pauli.value <= 1e-8 && d <= 1e-4 && grid.value <= 0.25 + 1e-3 && certified &&
             far.value <= 0.25 + 1e-3,
         "optimizer",
         fmt("Pauli value %.2e at distance %.2e; grid value %.10f", pauli.value, d,
             grid.value) +
             (certified ? " certificate minimal" : " certificate not minimal") +
             fmt("; two-bump start value %.10f", far.value));
}

void ac8() {
  Rng rng(8);
  double worst_slack = 0.0, min_sum = 1e300, worst_oracle = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const State phi = haar_state(2, rng);
    const TriangleReport t1 = triangle_report(spin::sigma_x(), spin::sigma_y(), phi, 1.0);
    const TriangleReport t2 = triangle_report(spin::sigma_x(), spin::sigma_y(), phi, 2.0);
    worst_slack = std::min({worst_slack, t1.slack, t2.slack});
    min_sum = std::min(min_sum, t2.d_phi_a + t2.d_phi_b);
    worst_oracle = std::max(
        {worst_oracle, std::abs(t1.d_phi_a - qubit_dist(phi.amplitudes(), {1, 0, 0})),
         std::abs(t1.d_phi_b - qubit_dist(phi.amplitudes(), {0, 1, 0})),
         std::abs(t1.d_a_b - M_PI / 4)});
  }
  report(8, worst_slack >= -1e-10 && min_sum >= M_PI / 2 - 1e-9 && worst_oracle <= 1e-7,
         "triangle relation",
         fmt("min slack %.2e, min scale-2 sum - pi/2 = %.2e, oracle diff %.2e", worst_slack,
             min_sum - M_PI / 2, worst_oracle));
}

void ac9() {
  Rng rng(9);
  double worst_area = 0.0, worst_product = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const CVector x = gaussian_vector(2, rng);
    const CVector y = gaussian_vector(2, rng);
    const double scale = x.squaredNorm() * y.squaredNorm();
    const double area = parallelogram_area(x, y);

    const RVector rx = realify(x), ry = realify(y);
    auto m = [&](int a, int b) { return rx(a) * ry(b) - rx(b) * ry(a); };
    const double six = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(0, 3) * m(0, 3) +
                       m(1, 2) * m(1, 2) + m(1, 3) * m(1, 3) + m(2, 3) * m(2, 3);
    worst_area = std::max(worst_area, std::abs(six - area * area) / scale);

    const AdaptedCoordinates c = adapted_basis(x, y);
    const double ysq = c.y[0] * c.y[0] + c.y[1] * c.y[1] + c.y[2] * c.y[2] + c.y[3] * c.y[3];
    worst_product = std::max(worst_product, std::abs(c.x[0] * c.x[0] * ysq - scale) / scale);
  }
  report(9, worst_area <= 1e-10 && worst_product <= 1e-10, "coordinate oracles",
         fmt("six-term area %.2e, product formula %.2e", worst_area, worst_product));
}

void ac10() {
  Rng rng(10);
  constexpr int kDims[] = {2, 4, 8};
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = kDims[k % 3];
    const Observable a = random_hermitian(n, rng);
    const Observable b = random_hermitian(n, rng);
    const State phi = haar_state(n, rng);
    const CVector g = riemannian_grad(a, b, phi);
    const CVector fd = fd_gradient(a.matrix(), b.matrix(), phi.amplitudes(), 1e-5);
    worst = std::max(worst, (g - fd).norm() / g.norm());
  }
  report(10, worst <= 1e-5, "gradient check", fmt("max relative error %.2e", worst));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ac1_to_3();
    ac4();
    ac5();
    ac6();
    ac7();
    ac8();
    ac9();
    ac10();
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d failure(s), %.2f s total\n", g_failures, seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
