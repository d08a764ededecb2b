#pragma once

#include "prbox/behavior.hpp"
#include "prbox/rational.hpp"
#include "prbox/ratlp.hpp"

namespace prbox {

/// The three-party behavior P(a,b,b'|x,y,y') with a uniform, b = a + xy and
/// b' = a + xy': a perfect clone of Bob's port. Each (Alice, Bob) pairing is
/// an exact PR box, but the joint (Bob, Bob') marginal leaks x through
/// b + b' = x(y + y').
Behavior perfect_clone_composite();

struct MonogamyOptions {
    /// Keep the (Alice, Bob') marginal pinned to the same isotropic form.
    /// Dropping it frees Bob' entirely and the optimum climbs to 1.
    bool constrain_second_marginal = true;
    /// Additionally force P symmetric under swapping (b, y) <-> (b', y').
    bool swap_symmetry = false;
};

struct MonogamyResult {
    Rat v_star;
    Behavior certificate; // optimal P, re-checked for no-signalling and marginals
};

/// The LP behind max_symmetric_isotropic_extension: variables are the 64
/// cells of P(a,b,b'|x,y,y') in table order plus V; rows are normalization,
/// the full three-party no-signalling lattice, the marginal pinnings, and
/// V <= 1.
LpProblem build_monogamy_lp(const MonogamyOptions& options = {});

/// Maximizes the visibility V such that some no-signalling three-party
/// P(a,b,b'|x,y,y') has its (A,B) marginal -- and, by default, its (A,B')
/// marginal -- equal to the isotropic box at V. Solved exactly; the returned
/// behavior is verified against every constraint before being returned.
MonogamyResult max_symmetric_isotropic_extension(const MonogamyOptions& options = {});

} // namespace prbox
