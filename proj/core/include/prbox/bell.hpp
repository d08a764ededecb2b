#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "prbox/behavior.hpp"
#include "prbox/rational.hpp"
#include "prbox/scenario.hpp"

namespace prbox {

/// Linear functional on behaviors: value = sum over cells of coeff * P(cell).
struct BellFunctional {
    Scenario scenario;
    std::vector<Rat> coefficients; // dense, cell-indexed like a behavior table

    Rat value_on(const Behavior& b) const;
};

/// E(0,0) + E(0,1) + E(1,0) - E(1,1) as a cell functional, with the output
/// bit o entering as (-1)^o.
BellFunctional chsh_functional();

/// Correlation coefficient at fixed inputs: outputs map o -> (-1)^o and the
/// per-party signs multiply. Requires binary outputs everywhere.
Rat correlator(const Behavior& b, const Tuple& inputs);

/// CHSH value of a two-party binary behavior.
Rat chsh(const Behavior& b);

// Deterministic (pre-agreed) strategies, enumerated in a fixed order: party
// 0 most significant, and within a party the input-0 output most significant.
std::int64_t deterministic_strategy_count(const Scenario& s);
DeterministicStrategy deterministic_strategy(const Scenario& s, std::int64_t index);

/// Largest strategy count local_max/is_local will enumerate.
inline constexpr std::int64_t kEnumerationCapacity = 10'000'000;

/// Maximum of the functional over all deterministic strategies, by
/// exhaustive enumeration. Throws CapacityError beyond kEnumerationCapacity.
Rat local_max(const BellFunctional& f);

struct LocalityCertificate {
    enum class Verdict { Local, Nonlocal };
    Verdict verdict = Verdict::Local;

    // Local: convex weights over deterministic strategies reproducing the
    // behavior cell-for-cell.
    std::vector<std::pair<DeterministicStrategy, Rat>> decomposition;

    // Nonlocal: a separating functional, its enumerated local bound, and its
    // (strictly larger) value on the behavior.
    BellFunctional functional{Scenario::chsh(), {}};
    Rat local_bound;
    Rat value;
};

/// Exact local-polytope membership: LP feasibility over the deterministic
/// strategies (one weight per strategy, one equality per cell). The returned
/// certificate is re-verified before being returned.
LocalityCertificate is_local(const Behavior& b);

/// Re-checks a certificate against a behavior from scratch: re-mixes a local
/// decomposition cell-for-cell, or re-enumerates the separating functional's
/// local bound. Throws VerificationError if anything fails to hold.
void verify_locality_certificate(const Behavior& b, const LocalityCertificate& cert);

} // namespace prbox
