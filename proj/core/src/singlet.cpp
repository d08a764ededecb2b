#include "prbox/singlet.hpp"

#include <cmath>

#include "prbox/errors.hpp"

namespace prbox {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

UnitVector3::UnitVector3(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!(norm > 0) || !std::isfinite(norm))
        throw DomainError("cannot normalize a zero or non-finite vector");
    v_ = {x / norm, y / norm, z / norm};
    const double check = std::sqrt(dot(v_, v_));
    if (std::abs(check - 1.0) > 1e-12) throw DomainError("unit vector normalization failed");
}

UnitVector3 UnitVector3::negated() const { return UnitVector3(-v_.x, -v_.y, -v_.z); }

UnitVector3 UnitVector3::in_plane(double theta) {
    return UnitVector3(std::sin(theta), 0.0, std::cos(theta));
}

namespace {

inline int sign_of(double v) { return v < 0 ? -1 : +1; } // sign(0) := +1

// Box-Muller pair from two uniforms; u1 is pushed into (0, 1].
inline void gaussian_pair(PhiloxRng& rng, double& g0, double& g1) {
    const double u1 = 1.0 - rng.next_unit();
    const double u2 = rng.next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    g0 = r * std::cos(2.0 * M_PI * u2);
    g1 = r * std::sin(2.0 * M_PI * u2);
}

} // namespace

UnitVector3 sample_unit_vector(PhiloxRng& rng) {
    for (;;) {
        double g0, g1, g2, g3;
        gaussian_pair(rng, g0, g1);
        gaussian_pair(rng, g2, g3);
        const double norm2 = g0 * g0 + g1 * g1 + g2 * g2;
        if (norm2 > 1e-12) return UnitVector3(g0, g1, g2);
        // Vanishingly rare; draw a fresh triple from the same stream.
    }
}

SimShot simulate_shot(const UnitVector3& a_dir, const UnitVector3& b_dir,
                      const UnitVector3& lambda0, const UnitVector3& lambda1, PhiloxRng& rng) {
    SimShot shot{lambda0, lambda1};
    const Vec3& a_hat = a_dir.vec();
    const Vec3& b_hat = b_dir.vec();

    // Alice compares overlaps; ties resolve to x = 0.
    shot.x = (std::abs(dot(a_hat, lambda0.vec())) >= std::abs(dot(a_hat, lambda1.vec()))) ? 0 : 1;
    // Bob compares overlap signs.
    shot.y = (sign_of(dot(b_hat, lambda0.vec())) == sign_of(dot(b_hat, lambda1.vec()))) ? 0 : 1;

    // The shared box: a is a fair bit, b = a + xy.
    shot.a = rng.next_bit();
    shot.b = shot.a ^ (shot.x & shot.y);

    const UnitVector3& lambda_x = (shot.x == 0) ? lambda0 : lambda1;
    const UnitVector3 lambda_alice = shot.a ? lambda_x.negated() : lambda_x;
    shot.r_a = sign_of(dot(a_hat, lambda_alice.vec()));

    const UnitVector3 lambda_bob = shot.b ? lambda0.negated() : lambda0;
    shot.r_b = -sign_of(dot(b_hat, lambda_bob.vec()));
    return shot;
}

CorrelationEstimate estimate_correlation(const UnitVector3& a_dir, const UnitVector3& b_dir,
                                         std::uint64_t shots, std::uint64_t seed,
                                         std::uint32_t stream) {
    if (shots < 1) throw DomainError("estimate_correlation needs at least one shot");
    // +/-1 counts are integers, so accumulation order cannot matter.
    std::int64_t sum_a = 0, sum_b = 0, sum_ab = 0;
    for (std::uint64_t i = 0; i < shots; ++i) {
        PhiloxRng rng(seed, stream, i);
        const UnitVector3 lambda0 = sample_unit_vector(rng);
        const UnitVector3 lambda1 = sample_unit_vector(rng);
        const SimShot shot = simulate_shot(a_dir, b_dir, lambda0, lambda1, rng);
        sum_a += shot.r_a;
        sum_b += shot.r_b;
        sum_ab += shot.r_a * shot.r_b;
    }
    CorrelationEstimate est;
    est.shots = shots;
    est.mean_r_a = double(sum_a) / double(shots);
    est.mean_r_b = double(sum_b) / double(shots);
    est.mean_product = double(sum_ab) / double(shots);
    est.standard_error =
        std::sqrt(std::max(0.0, 1.0 - est.mean_product * est.mean_product) / double(shots));
    return est;
}

ChshSettings optimal_chsh_settings() {
    const double deg = M_PI / 180.0;
    return ChshSettings{
        {UnitVector3::in_plane(0.0), UnitVector3::in_plane(-90.0 * deg)},
        {UnitVector3::in_plane(135.0 * deg), UnitVector3::in_plane(225.0 * deg)},
    };
}

SimulatedChsh chsh_from_simulation(const ChshSettings& settings, std::uint64_t shots_per_setting,
                                   std::uint64_t seed) {
    SimulatedChsh out;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const auto est =
                estimate_correlation(settings.alice[x], settings.bob[y], shots_per_setting, seed,
                                     std::uint32_t(4 * x + y));
            out.correlators[2 * x + y] = est.mean_product;
        }
    out.chsh = out.correlators[0] + out.correlators[1] + out.correlators[2] - out.correlators[3];
    return out;
}

} // namespace prbox
