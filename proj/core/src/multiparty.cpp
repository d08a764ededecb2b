#include "prbox/multiparty.hpp"

#include <algorithm>

#include "prbox/bell.hpp"
#include "prbox/philox.hpp"

namespace prbox {

std::vector<ParityConstraint> ghz_constraints() {
    return {
        {{0, 1, 2}, {0, 0, 1}, 0},
        {{0, 1, 2}, {0, 1, 0}, 0},
        {{0, 1, 2}, {1, 0, 0}, 0},
        {{0, 1, 2}, {1, 1, 1}, 1},
    };
}

std::vector<ParityConstraint> corr3_constraints() {
    return {
        {{0, 1}, {0, 1}, 0},
        {{1, 2}, {0, 1}, 0},
        {{0, 2}, {1, 0}, 0}, // c0 + a1 = 0, listed with ascending parties
        {{0, 1, 2}, {0, 0, 0}, 0},
        {{0, 1, 2}, {1, 1, 1}, 1},
    };
}

namespace {

void validate_constraints(const std::vector<ParityConstraint>& constraints,
                          const Scenario& scenario) {
    for (int p = 0; p < scenario.party_count(); ++p)
        if (scenario.outputs_of(p) != 2)
            throw DomainError("parity constraints need binary outputs everywhere");
    for (const ParityConstraint& c : constraints) {
        if (c.participants.empty() || c.participants.size() != c.inputs.size())
            throw DomainError("parity constraint needs matching participants and inputs");
        if (!std::is_sorted(c.participants.begin(), c.participants.end()) ||
            std::adjacent_find(c.participants.begin(), c.participants.end()) !=
                c.participants.end())
            throw DomainError("parity constraint participants must be strictly ascending");
        for (std::size_t k = 0; k < c.participants.size(); ++k) {
            const int p = c.participants[k];
            if (p < 0 || p >= scenario.party_count())
                throw DomainError("parity constraint participant out of range");
            if (c.inputs[k] < 0 || c.inputs[k] >= scenario.inputs_of(p))
                throw DomainError("parity constraint input out of range");
        }
        if (c.parity != 0 && c.parity != 1)
            throw DomainError("parity constraint target must be a bit");
    }
}

} // namespace

LhvSearchResult check_lhv_impossible(const std::vector<ParityConstraint>& constraints,
                                     const Scenario& scenario) {
    validate_constraints(constraints, scenario);
    const std::int64_t count = deterministic_strategy_count(scenario);
    if (count > kEnumerationCapacity)
        throw CapacityError("deterministic strategy space too large to enumerate");

    LhvSearchResult result;
    result.strategies_checked = count;
    for (std::int64_t i = 0; i < count; ++i) {
        const DeterministicStrategy strategy = deterministic_strategy(scenario, i);
        bool all_hold = true;
        for (const ParityConstraint& c : constraints) {
            int parity = 0;
            for (std::size_t k = 0; k < c.participants.size(); ++k)
                parity ^= strategy[c.participants[k]][c.inputs[k]];
            if (parity != c.parity) {
                all_hold = false;
                break;
            }
        }
        if (all_hold) {
            result.impossible = false;
            result.witness = strategy;
            return result;
        }
    }
    result.impossible = true;
    return result;
}

bool satisfies_ghz_prefix(const SharedRandomnessTable& t) {
    const auto& b = t.bits;
    return ((b[0][0] ^ b[1][0] ^ b[2][1]) == 0) && ((b[0][0] ^ b[1][1] ^ b[2][0]) == 0) &&
           ((b[0][1] ^ b[1][0] ^ b[2][0]) == 0);
}

std::array<int, 3> simulate_ghz_with_prbox_bit(int x, int y, int z,
                                               const SharedRandomnessTable& table, int box_bit) {
    for (int v : {x, y, z})
        if (v != 0 && v != 1) throw DomainError("GHZ inputs must be bits");
    if (box_bit != 0 && box_bit != 1) throw DomainError("box bit must be a bit");
    if (!satisfies_ghz_prefix(table))
        throw DomainError("shared-randomness table must satisfy the first three GHZ rows");
    const int a = box_bit;
    const int b = a ^ (x & y);
    return {table.bit(0, x) ^ a, table.bit(1, y) ^ b, table.bit(2, z)};
}

std::array<int, 3> simulate_ghz_with_prbox(int x, int y, int z, const SharedRandomnessTable& table,
                                           std::uint64_t seed) {
    PhiloxRng rng(seed, /*stream=*/17, /*shot=*/0);
    return simulate_ghz_with_prbox_bit(x, y, z, table, rng.next_bit());
}

// --- Wiring search ---

namespace {

struct WiringEnumerator {
    // Flat list of choices available to one party: entry 0 is "no box",
    // then (incident box, input bit) pairs in box-list order.
    std::array<std::vector<WiringChoice>, 3> menu;

    explicit WiringEnumerator(const std::vector<PairwiseBox>& boxes) {
        for (int p = 0; p < 3; ++p) menu[p].push_back(WiringChoice{-1, 0});
        for (std::size_t k = 0; k < boxes.size(); ++k) {
            for (int bit : {0, 1}) {
                menu[boxes[k].party0].push_back(WiringChoice{static_cast<int>(k), bit});
                menu[boxes[k].party1].push_back(WiringChoice{static_cast<int>(k), bit});
            }
        }
    }

    std::int64_t wiring_count() const {
        std::int64_t n = 1;
        for (int p = 0; p < 3; ++p) n *= static_cast<std::int64_t>(menu[p].size()) *
                                         static_cast<std::int64_t>(menu[p].size());
        return n;
    }

    // Wiring index -> per-party, per-input choices (party 0 / input 0 most
    // significant).
    std::array<std::array<WiringChoice, 2>, 3> decode(std::int64_t index) const {
        std::array<std::array<WiringChoice, 2>, 3> out;
        for (int p = 2; p >= 0; --p)
            for (int x = 1; x >= 0; --x) {
                const auto size = static_cast<std::int64_t>(menu[p].size());
                out[p][x] = menu[p][static_cast<std::size_t>(index % size)];
                index /= size;
            }
        return out;
    }
};

// XOR contributed by the boxes to party p's output at the given input
// triple and box randomness; 0 when the party uses no box there.
int box_part(const std::array<std::array<WiringChoice, 2>, 3>& choices,
             const std::vector<PairwiseBox>& boxes, int party, const std::array<int, 3>& xs,
             unsigned randomness) {
    const WiringChoice& ch = choices[party][xs[party]];
    if (ch.box < 0) return 0;
    const PairwiseBox& box = boxes[ch.box];
    const int r = (randomness >> ch.box) & 1;
    if (party == box.party0) return r;
    // Second port folds in the product of effective inputs; the other end
    // contributes 0 unless it queried this box too.
    const WiringChoice& other = choices[box.party0][xs[box.party0]];
    const int u0 = (other.box == ch.box) ? other.box_input : 0;
    return r ^ (u0 & ch.box_input);
}

} // namespace

WiringSearchReport search_wiring_strategies(const std::vector<ParityConstraint>& constraints,
                                            const std::vector<PairwiseBox>& boxes) {
    const Scenario scenario = Scenario::binary(3);
    validate_constraints(constraints, scenario);
    for (const PairwiseBox& b : boxes)
        if (b.party0 < 0 || b.party0 > 2 || b.party1 < 0 || b.party1 > 2 || b.party0 == b.party1)
            throw DomainError("pairwise box must join two distinct parties");
    if (boxes.size() > 16) throw CapacityError("too many boxes to exhaust their randomness");
    if (constraints.size() > 16) throw CapacityError("too many constraints for the bitmask sweep");

    const WiringEnumerator enumerator(boxes);
    const unsigned randomness_count = 1u << boxes.size();
    const int n_constraints = static_cast<int>(constraints.size());

    WiringSearchReport report;
    report.boxes = boxes;
    report.constraint_count = n_constraints;
    report.strategy_class =
        "non-adaptive single-round wirings: per party and input, no box or one "
        "incident single-use box with a fixed input bit; output = shared bit "
        "XOR box output";
    report.total_strategies = enumerator.wiring_count() * 64; // 2^6 tables

    // Applicable input triples per constraint: participants pinned to the
    // constraint's inputs, everyone else free.
    std::vector<std::vector<std::array<int, 3>>> applicable(n_constraints);
    for (int c = 0; c < n_constraints; ++c) {
        for (int t = 0; t < 8; ++t) {
            std::array<int, 3> xs = {(t >> 2) & 1, (t >> 1) & 1, t & 1};
            bool match = true;
            for (std::size_t k = 0; k < constraints[c].participants.size(); ++k)
                if (xs[constraints[c].participants[k]] != constraints[c].inputs[k]) match = false;
            if (match) applicable[c].push_back(xs);
        }
    }

    std::int64_t enumerated = 0;
    for (std::int64_t w = 0; w < enumerator.wiring_count(); ++w) {
        const auto choices = enumerator.decode(w);

        // For each constraint, the box-randomness contribution to its parity
        // must be one constant over every applicable triple and randomness;
        // only then can a table choice close the gap.
        int constant_mask = 0;               // bit c: contribution is constant
        std::array<int, 16> box_parity{};    // that constant, per constraint
        for (int c = 0; c < n_constraints; ++c) {
            bool first = true, constant = true;
            int value = 0;
            for (const auto& xs : applicable[c]) {
                for (unsigned r = 0; r < randomness_count && constant; ++r) {
                    int parity = 0;
                    for (std::size_t k = 0; k < constraints[c].participants.size(); ++k)
                        parity ^= box_part(choices, boxes, constraints[c].participants[k], xs, r);
                    if (first) {
                        value = parity;
                        first = false;
                    } else if (parity != value) {
                        constant = false;
                    }
                }
                if (!constant) break;
            }
            if (constant) {
                constant_mask |= 1 << c;
                box_parity[c] = value;
            }
        }

        for (int t = 0; t < 64; ++t, ++enumerated) {
            SharedRandomnessTable table;
            for (int p = 0; p < 3; ++p)
                for (int x = 0; x < 2; ++x) table.bits[p][x] = (t >> (2 * p + x)) & 1;

            int satisfied = 0;
            for (int c = 0; c < n_constraints; ++c) {
                if (!((constant_mask >> c) & 1)) continue;
                int table_parity = 0;
                for (std::size_t k = 0; k < constraints[c].participants.size(); ++k)
                    table_parity ^=
                        table.bits[constraints[c].participants[k]][constraints[c].inputs[k]];
                if ((table_parity ^ box_parity[c]) == constraints[c].parity) ++satisfied;
            }
            report.best_satisfied_constraints =
                std::max(report.best_satisfied_constraints, satisfied);
            if (satisfied == n_constraints) {
                ++report.perfect_count;
                if (!report.witness) report.witness = WiringStrategy{choices, table};
            }
        }
    }

    if (enumerated != report.total_strategies)
        throw VerificationError("wiring enumeration count disagrees with the class formula");
    return report;
}

WiringSearchReport search_corr3_strategies() {
    return search_wiring_strategies(corr3_constraints(),
                                    {PairwiseBox{0, 1}, PairwiseBox{1, 2}, PairwiseBox{2, 0}});
}

WiringSearchReport search_ghz_single_box() {
    return search_wiring_strategies(ghz_constraints(), {PairwiseBox{0, 1}});
}

} // namespace prbox
