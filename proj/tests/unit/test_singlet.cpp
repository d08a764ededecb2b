#include <doctest.h>

#include <cmath>

#include "prbox/errors.hpp"
#include "prbox/singlet.hpp"

using namespace prbox;

TEST_SUITE_BEGIN("singlet");

TEST_CASE("sampled directions are unit and deterministic per (seed, shot)") {
    PhiloxRng rng(5, 0, 123);
    const UnitVector3 v = sample_unit_vector(rng);
    CHECK(std::abs(dot(v.vec(), v.vec()) - 1.0) <= 1e-12);

    PhiloxRng again(5, 0, 123);
    const UnitVector3 w = sample_unit_vector(again);
    CHECK(v.vec().x == w.vec().x);
    CHECK(v.vec().y == w.vec().y);
    CHECK(v.vec().z == w.vec().z);
}

TEST_CASE("sphere sampling is balanced per component") {
    // CLT: each component has variance 1/3, so 5 sigma at 10^6 samples is
    // about 2.9e-3; the bound below is looser.
    const int n = 1000000;
    double sx = 0, sy = 0, sz = 0;
    for (int i = 0; i < n; ++i) {
        PhiloxRng rng(11, 0, std::uint64_t(i));
        const Vec3 v = sample_unit_vector(rng).vec();
        sx += v.x;
        sy += v.y;
        sz += v.z;
    }
    CHECK(std::abs(sx / n) < 5e-3);
    CHECK(std::abs(sy / n) < 5e-3);
    CHECK(std::abs(sz / n) < 5e-3);
}

TEST_CASE("hand-traced shot: aligned directions anti-correlate always") {
    const UnitVector3 dir(0, 0, 1);
    const UnitVector3 lambda1(1, 0, 0);
    bool saw_a0 = false, saw_a1 = false;
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        PhiloxRng rng(seed, 0, 0);
        const SimShot shot = simulate_shot(dir, dir, dir, lambda1, rng);
        CHECK(shot.x == 0); // |a.l0| = 1 >= |a.l1| = 0
        CHECK(shot.y == 0); // sign ties resolve equal
        CHECK(shot.r_a * shot.r_b == -1);
        (shot.a ? saw_a1 : saw_a0) = true;
    }
    CHECK(saw_a0);
    CHECK(saw_a1);
}

TEST_CASE("box relation holds on every shot") {
    const UnitVector3 a_dir(1, 2, 3), b_dir(-1, 1, 0);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        PhiloxRng rng(3, 0, i);
        const UnitVector3 l0 = sample_unit_vector(rng);
        const UnitVector3 l1 = sample_unit_vector(rng);
        const SimShot shot = simulate_shot(a_dir, b_dir, l0, l1, rng);
        CHECK(((shot.a + shot.b) % 2) == (shot.x & shot.y));
        CHECK((shot.r_a == 1 || shot.r_a == -1));
        CHECK((shot.r_b == 1 || shot.r_b == -1));
    }
}

TEST_CASE("opposite directions correlate positively on every shot") {
    const UnitVector3 a_dir(0.3, -0.4, 0.87);
    const UnitVector3 b_dir = a_dir.negated();
    for (std::uint64_t i = 0; i < 1000; ++i) {
        PhiloxRng rng(9, 0, i);
        const UnitVector3 l0 = sample_unit_vector(rng);
        const UnitVector3 l1 = sample_unit_vector(rng);
        const SimShot shot = simulate_shot(a_dir, b_dir, l0, l1, rng);
        CHECK(shot.r_a * shot.r_b == 1);
    }
}

TEST_CASE("estimator reproduces -a.b across angles") {
    const std::uint64_t shots = 200000;
    const double tol = 5.0 / std::sqrt(double(shots)) + 1e-3;
    for (int k = 0; k < 12; ++k) {
        const double theta = k * M_PI / 6.0;
        const auto est = estimate_correlation(UnitVector3(0, 0, 1), UnitVector3::in_plane(theta),
                                              shots, 2024);
        CHECK(std::abs(est.mean_product + std::cos(theta)) <= tol);
        CHECK(std::abs(est.mean_r_a) <= tol);
        CHECK(std::abs(est.mean_r_b) <= tol);
        CHECK(est.standard_error <= 1.0 / std::sqrt(double(shots)) + 1e-9);
    }
}

TEST_CASE("estimates are seed-reproducible") {
    const UnitVector3 a(1, 0, 0), b(0, 1, 0);
    const auto e1 = estimate_correlation(a, b, 5000, 77);
    const auto e2 = estimate_correlation(a, b, 5000, 77);
    CHECK(e1.mean_product == e2.mean_product);
    CHECK(e1.mean_r_a == e2.mean_r_a);
    const auto e3 = estimate_correlation(a, b, 5000, 78);
    CHECK(e1.mean_product != e3.mean_product); // overwhelmingly likely
}

TEST_CASE("simulated CHSH: constant and degenerate settings") {
    const UnitVector3 z(0, 0, 1);
    // All four pairs identical and parallel: E = -1 each, CHSH = -2.
    const ChshSettings parallel{{z, z}, {z, z}};
    const SimulatedChsh p = chsh_from_simulation(parallel, 50000, 5);
    CHECK(std::abs(p.chsh + 2.0) < 0.05);

    // Orthogonal everywhere: all correlators vanish.
    const UnitVector3 x_axis(1, 0, 0);
    const ChshSettings orth{{z, z}, {x_axis, x_axis}};
    const SimulatedChsh o = chsh_from_simulation(orth, 50000, 6);
    CHECK(std::abs(o.chsh) < 0.05);
}

TEST_CASE("simulated CHSH approaches 2*sqrt(2) at the optimal settings") {
    const SimulatedChsh r = chsh_from_simulation(optimal_chsh_settings(), 200000, 1);
    CHECK(std::abs(r.chsh - 2.0 * std::sqrt(2.0)) < 0.05);
}

TEST_CASE("degenerate constructions are rejected") {
    CHECK_THROWS_AS(UnitVector3(0, 0, 0), DomainError);
    CHECK_THROWS_AS(estimate_correlation(UnitVector3(0, 0, 1), UnitVector3(0, 0, 1), 0, 0),
                    DomainError);
}

TEST_SUITE_END();
