#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prbox/behavior.hpp"
#include "prbox/scenario.hpp"

namespace prbox {

/// "The designated parties' outputs at the designated inputs XOR to
/// `parity`" -- required to hold with probability 1.
struct ParityConstraint {
    std::vector<int> participants; // ascending party indices
    std::vector<int> inputs;       // one input bit per participant
    int parity = 0;
};

/// The three-party constraint set with rows a0+b0+c1, a0+b1+c0, a1+b0+c0 = 0
/// and a1+b1+c1 = 1.
std::vector<ParityConstraint> ghz_constraints();

/// The three-party set a0+b1 = 0, b0+c1 = 0, c0+a1 = 0, a0+b0+c0 = 0,
/// a1+b1+c1 = 1.
std::vector<ParityConstraint> corr3_constraints();

struct LhvSearchResult {
    bool impossible = false;
    std::int64_t strategies_checked = 0;
    std::optional<DeterministicStrategy> witness; // satisfies every constraint
};

/// Enumerates every deterministic local strategy of the scenario. Perfect
/// (probability-1) constraints must hold for each strategy in a mixture's
/// support, so deterministic enumeration settles the question exactly.
LhvSearchResult check_lhv_impossible(const std::vector<ParityConstraint>& constraints,
                                     const Scenario& scenario);

/// One output bit per (party, input): alpha_x, beta_y, gamma_z.
struct SharedRandomnessTable {
    std::array<std::array<int, 2>, 3> bits{};

    int bit(int party, int input) const { return bits[party][input]; }
};

/// True iff the table alone satisfies the first three GHZ rows.
bool satisfies_ghz_prefix(const SharedRandomnessTable& table);

/// Alice and Bob feed (x, y) into one shared PR box with outputs (a, b);
/// the parties output alpha_x + a, beta_y + b, gamma_z. Requires a table
/// satisfying the first three GHZ rows; then all four rows hold for every
/// input triple and every box bit, since a_x+b_y+c_z = alpha_x+beta_y+gamma_z+xy.
std::array<int, 3> simulate_ghz_with_prbox(int x, int y, int z, const SharedRandomnessTable& table,
                                           std::uint64_t seed);
std::array<int, 3> simulate_ghz_with_prbox_bit(int x, int y, int z,
                                               const SharedRandomnessTable& table,
                                               int box_bit);

// --- Wiring search over single-use pairwise boxes ---

/// A bipartite PR box between two of the three parties. The first listed
/// party's port returns the internal bit r; the other port returns
/// r + (product of the effective inputs), an unused port counting as input 0.
struct PairwiseBox {
    int party0 = 0, party1 = 1;
};

/// What a party does on one external input: either no box, or exactly one
/// incident box queried with a fixed input bit.
struct WiringChoice {
    int box = -1; // index into the box list, -1 = no box
    int box_input = 0;
};

/// Non-adaptive single-round strategy: per party and external input, a
/// wiring choice; the party's output is its shared-randomness bit XOR the
/// box output (when a box is used).
struct WiringStrategy {
    std::array<std::array<WiringChoice, 2>, 3> choices; // [party][input]
    SharedRandomnessTable table;
};

struct WiringSearchReport {
    std::string strategy_class;
    std::vector<PairwiseBox> boxes;
    int constraint_count = 0;
    std::int64_t total_strategies = 0; // enumerated; equals the class count formula
    std::int64_t perfect_count = 0;
    int best_satisfied_constraints = 0;
    std::optional<WiringStrategy> witness; // first perfect strategy, if any
};

/// Exhausts the strategy class against the constraints: every wiring times
/// every shared-randomness table, checked over all input triples and all box
/// randomness. Three binary-input binary-output parties.
WiringSearchReport search_wiring_strategies(const std::vector<ParityConstraint>& constraints,
                                            const std::vector<PairwiseBox>& boxes);

/// corr3 constraints against one single-use box per pair (AB, BC, CA).
WiringSearchReport search_corr3_strategies();

/// Cross-check: the GHZ constraints with a single AB box, where the searcher
/// must find perfect strategies.
WiringSearchReport search_ghz_single_box();

} // namespace prbox
