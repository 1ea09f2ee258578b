#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgeom/projective.hpp"
#include "qgeom/random.hpp"
#include "qgeom/spin.hpp"
#include "qgeom/uncertainty.hpp"
#include "test_util.hpp"

using namespace qgeom;
using namespace qgeom::test;

TEST_CASE("fs_distance examples") {
  const State up = State::basis(2, 0);
  CHECK(fs_distance(up, State::basis(2, 1)) == doctest::Approx(M_PI / 2));
  CHECK(fs_distance(up, plus_x()) == doctest::Approx(M_PI / 4));
  CHECK(fs_distance(up, plus_x(), 2.0) == doctest::Approx(M_PI / 2));
  Rng rng(31);
  const State phi = haar_state(6, rng);
  CHECK(fs_distance(phi, phi.with_phase(1.234)) <= 1e-15);
  CHECK(same_ray(Ray{phi}, Ray{phi.with_phase(-2.0)}));
  CHECK_FALSE(same_ray(Ray{up}, Ray{plus_x()}));
  CHECK_THROWS_AS(fs_distance(up, phi), Error);
}

TEST_CASE("fs_distance metric axioms") {
  Rng rng(32);
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + k % 6;
    const State a = haar_state(n, rng);
    const State b = haar_state(n, rng);
    const State c = haar_state(n, rng);
    const double ab = fs_distance(a, b);
    CHECK(ab == fs_distance(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= M_PI / 2 + 1e-15);
    CHECK(fs_distance(a, c) <= ab + fs_distance(b, c) + 1e-12);
    // arccos form agrees.
    const double overlap = std::min(1.0, std::abs(inner(a.amplitudes(), b.amplitudes())));
    CHECK(std::abs(ab - std::acos(overlap)) <= 1e-10);

    const CMatrix u = random_unitary(n, rng);
    const State ua = State::normalized(u * a.amplitudes());
    const State ub = State::normalized(u * b.amplitudes());
    CHECK(std::abs(fs_distance(ua, ub) - ab) <= 1e-10);
  }
}

TEST_CASE("horizontal projection") {
  const State up = State::basis(2, 0);
  CHECK(horizontal(-I * spin::sigma_z().apply(up.amplitudes()), up).norm() == 0.0);
  CHECK(max_diff(horizontal(vec2(0, 1), up), vec2(0, 1)) == 0.0);
  CHECK(max_diff(horizontal(-I * spin::sigma_x().apply(up.amplitudes()), up),
                 vec2(0, -I)) == 0.0);
  Rng rng(33);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 7;
    const Observable a = random_hermitian(n, rng);
    const State phi = haar_state(n, rng);
    const CVector h = horizontal(-I * a.apply(phi.amplitudes()), phi);
    CHECK(std::abs(inner(h, phi.amplitudes())) <= 1e-12 * a.scale());
    CHECK(max_diff(h, tangent_field(a, phi, true).vec) <= 1e-12 * a.scale());
  }
}

TEST_CASE("dist_to_eigenset") {
  CHECK(dist_to_eigenset(spin::sigma_z(), State::basis(2, 0)) == 0.0);
  CHECK(dist_to_eigenset(spin::sigma_z(), plus_x()) == doctest::Approx(M_PI / 4));
  Rng rng(34);
  CHECK(dist_to_eigenset(spin::identity(4), haar_state(4, rng)) <= 1e-15);

  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 6;
    const Observable a = random_hermitian(n, rng);
    const State phi = haar_state(n, rng);
    // Nondegenerate: minimum over individual eigenvectors.
    const SpectralDecomposition sd = spectral(a);
    double best = M_PI;
    for (int j = 0; j < n; ++j) {
      best = std::min(best, fs_distance(phi, State::normalized(sd.eigenvectors.col(j))));
    }
    CHECK(std::abs(dist_to_eigenset(a, phi) - best) <= 1e-10);
    // Zero exactly on eigenstates, consistent with the std_dev test.
    const State e = State::normalized(sd.eigenvectors.col(k % n));
    CHECK(dist_to_eigenset(a, e) <= 1e-10);
    CHECK(is_eigenstate(a, e));
    CHECK(dist_to_eigenset(a, phi) > 1e-6);
    CHECK_FALSE(is_eigenstate(a, phi));
  }
}

TEST_CASE("degenerate eigenspaces are basis independent") {
  // Any vector in the +1 eigenspace of σz ⊗ I is at distance 0.
  const Observable zi = spin::kron(spin::sigma_z(), spin::identity(2));
  CVector v = CVector::Zero(4);
  v(0) = Complex(0.6, 0.0);
  v(1) = Complex(0.0, 0.8);
  CHECK(dist_to_eigenset(zi, State::from_vector(v)) <= 1e-15);
  CHECK(EigenSet::of(zi).eigenspaces.size() == 2);
}

TEST_CASE("eigenset_distance") {
  CHECK(eigenset_distance(spin::sigma_x(), spin::sigma_y()) ==
        doctest::Approx(M_PI / 4));
  CHECK(eigenset_distance(spin::sigma_z(), spin::sigma_z()) <= 1e-15);
  const Observable zi = spin::kron(spin::sigma_z(), spin::identity(2));
  const Observable ix = spin::kron(spin::identity(2), spin::sigma_x());
  CHECK(eigenset_distance(zi, ix) <= 1e-15);

  Rng rng(35);
  for (int k = 0; k < 30; ++k) {
    const Observable a = random_hermitian(3, rng);
    const Observable b = random_hermitian(3, rng);
    // Brute force over eigenvector pairs (nondegenerate).
    const SpectralDecomposition sa = spectral(a);
    const SpectralDecomposition sb = spectral(b);
    double best = M_PI;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        best = std::min(best, fs_distance(State::normalized(sa.eigenvectors.col(i)),
                                          State::normalized(sb.eigenvectors.col(j))));
    CHECK(std::abs(eigenset_distance(a, b) - best) <= 1e-10);
  }
}

TEST_CASE("triangle_report") {
  SUBCASE("sigma_x, sigma_y at spin up") {
    const TriangleReport r =
        triangle_report(spin::sigma_x(), spin::sigma_y(), State::basis(2, 0));
    CHECK(r.d_phi_a == doctest::Approx(M_PI / 4));
    CHECK(r.d_phi_b == doctest::Approx(M_PI / 4));
    CHECK(r.d_a_b == doctest::Approx(M_PI / 4));
    CHECK(r.slack == doctest::Approx(M_PI / 4));
  }
  SUBCASE("state in S_A") {
    const TriangleReport r =
        triangle_report(spin::sigma_z(), spin::sigma_x(), State::basis(2, 0));
    CHECK(r.d_phi_a == 0.0);
    CHECK(r.slack >= 0.0);
  }
  SUBCASE("spin bound at scale 2") {
    Rng rng(36);
    for (int k = 0; k < 200; ++k) {
      const TriangleReport r =
          triangle_report(spin::sigma_x(), spin::sigma_y(), haar_state(2, rng), 2.0);
      CHECK(r.d_phi_a + r.d_phi_b >= M_PI / 2 - 1e-9);
      CHECK(r.slack >= -1e-10);
    }
  }
  SUBCASE("random observables") {
    Rng rng(37);
    for (int k = 0; k < 100; ++k) {
      const int n = 2 + k % 5;
      const TriangleReport r = triangle_report(random_hermitian(n, rng),
                                               random_hermitian(n, rng),
                                               haar_state(n, rng));
      CHECK(r.slack >= -1e-10);
    }
  }
}

TEST_CASE("speed equals sin(2d) on CP1") {
  for (int k = 0; k <= 40; ++k) {
    const double theta = M_PI * k / 40.0;
    const State phi = State::from_vector(
        vec2(std::cos(theta / 2), std::polar(std::sin(theta / 2), 0.3 * k)));
    const double d = dist_to_eigenset(spin::sigma_z(), phi);
    CHECK(std::abs(std_dev(spin::sigma_z(), phi) - std::sin(2.0 * d)) <= 1e-10);
  }
}
