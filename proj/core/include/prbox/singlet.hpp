#pragma once

#include <array>
#include <cstdint>

#include "prbox/philox.hpp"

namespace prbox {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

double dot(const Vec3& a, const Vec3& b);

/// Unit vector; construction normalizes and requires |norm - 1| <= 1e-12
/// afterwards.
class UnitVector3 {
  public:
    UnitVector3(double x, double y, double z);
    explicit UnitVector3(const Vec3& v) : UnitVector3(v.x, v.y, v.z) {}

    const Vec3& vec() const { return v_; }
    UnitVector3 negated() const;

    /// In the x-z plane: (sin theta, 0, cos theta). Angle in radians.
    static UnitVector3 in_plane(double theta);

  private:
    Vec3 v_;
};

/// Uniform direction on the sphere: three Gaussians (Box-Muller), normalized.
UnitVector3 sample_unit_vector(PhiloxRng& rng);

/// One run of the singlet protocol. The embedded box relation
/// a + b = xy (mod 2) holds by construction.
struct SimShot {
    UnitVector3 lambda0, lambda1;
    int x = 0, y = 0, a = 0, b = 0;
    int r_a = +1, r_b = +1; // signs, in {+1, -1}
};

/// Alice: x = 0 iff |a.l0| >= |a.l1|; lambda_A = (-1)^a lambda_x;
/// r_A = sign(a.lambda_A). Bob: y = 0 iff sign(b.l0) == sign(b.l1);
/// lambda_B = (-1)^b lambda_0; r_B = -sign(b.lambda_B). sign(0) counts as +1,
/// and the box output a is a fair bit from the shot's stream.
SimShot simulate_shot(const UnitVector3& a_dir, const UnitVector3& b_dir,
                      const UnitVector3& lambda0, const UnitVector3& lambda1, PhiloxRng& rng);

struct CorrelationEstimate {
    double mean_r_a = 0, mean_r_b = 0, mean_product = 0;
    std::uint64_t shots = 0;
    double standard_error = 0; // sqrt((1 - mean_product^2) / shots)
};

/// Monte Carlo over fresh lambda pairs; shot i draws from stream
/// (seed, stream, i), so results do not depend on evaluation order.
CorrelationEstimate estimate_correlation(const UnitVector3& a_dir, const UnitVector3& b_dir,
                                         std::uint64_t shots, std::uint64_t seed,
                                         std::uint32_t stream = 0);

struct ChshSettings {
    std::array<UnitVector3, 2> alice;
    std::array<UnitVector3, 2> bob;
};

/// Coplanar settings maximizing E(0,0)+E(0,1)+E(1,0)-E(1,1) for the singlet
/// statistics E = -a.b: Alice at {0, -90} degrees, Bob at {135, 225}.
ChshSettings optimal_chsh_settings();

struct SimulatedChsh {
    std::array<double, 4> correlators; // E(0,0), E(0,1), E(1,0), E(1,1)
    double chsh = 0;
};

/// Four estimate_correlation runs (streams 4x+y), combined with the CHSH
/// signs.
SimulatedChsh chsh_from_simulation(const ChshSettings& settings, std::uint64_t shots_per_setting,
                                   std::uint64_t seed);

} // namespace prbox
