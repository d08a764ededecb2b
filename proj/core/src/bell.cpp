#include "prbox/bell.hpp"

#include <string>

#include "prbox/ratlp.hpp"

namespace prbox {

Rat BellFunctional::value_on(const Behavior& b) const {
    if (!(b.scenario() == scenario))
        throw DomainError("functional and behavior live in different scenarios");
    Rat acc = 0;
    for (std::int64_t c = 0; c < scenario.cell_count(); ++c)
        acc += coefficients[c] * b.table()[c];
    return acc;
}

BellFunctional chsh_functional() {
    const Scenario s = Scenario::chsh();
    std::vector<Rat> coeffs(s.cell_count());
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const int row_sign = (x == 1 && y == 1) ? -1 : 1;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    coeffs[s.cell_index({x, y}, {a, b})] =
                        Rat(row_sign * (((a + b) % 2 == 0) ? 1 : -1));
        }
    return BellFunctional{s, std::move(coeffs)};
}

Rat correlator(const Behavior& b, const Tuple& inputs) {
    const Scenario& s = b.scenario();
    for (int p = 0; p < s.party_count(); ++p)
        if (s.outputs_of(p) != 2)
            throw DomainError("correlator requires binary outputs for every party");
    const std::int64_t u = s.input_index(inputs);
    Rat acc = 0;
    for (std::int64_t o = 0; o < s.output_tuple_count(); ++o) {
        const Tuple os = s.output_tuple(o);
        int parity = 0;
        for (int v : os) parity ^= v;
        const Rat& p = b.table()[u * s.output_tuple_count() + o];
        acc += parity ? -p : p;
    }
    return acc;
}

Rat chsh(const Behavior& b) {
    if (!(b.scenario() == Scenario::chsh()))
        throw DomainError("CHSH needs two parties with binary inputs and outputs");
    return correlator(b, {0, 0}) + correlator(b, {0, 1}) + correlator(b, {1, 0}) -
           correlator(b, {1, 1});
}

std::int64_t deterministic_strategy_count(const Scenario& s) {
    std::int64_t count = 1;
    for (int p = 0; p < s.party_count(); ++p) {
        for (int x = 0; x < s.inputs_of(p); ++x) {
            count *= s.outputs_of(p);
            if (count > kEnumerationCapacity) return count; // saturating enough for the guard
        }
    }
    return count;
}

DeterministicStrategy deterministic_strategy(const Scenario& s, std::int64_t index) {
    DeterministicStrategy strategy(s.party_count());
    for (int p = s.party_count() - 1; p >= 0; --p) {
        std::vector<int>& outs = strategy[p];
        outs.resize(s.inputs_of(p));
        for (int x = s.inputs_of(p) - 1; x >= 0; --x) {
            outs[x] = static_cast<int>(index % s.outputs_of(p));
            index /= s.outputs_of(p);
        }
    }
    return strategy;
}

namespace {

void check_capacity(const Scenario& s) {
    if (deterministic_strategy_count(s) > kEnumerationCapacity)
        throw CapacityError("deterministic strategy space exceeds " +
                            std::to_string(kEnumerationCapacity));
}

// Functional value on a deterministic strategy without materializing the
// behavior: only the strategy's own output cell contributes per input tuple.
Rat value_on_strategy(const BellFunctional& f, const DeterministicStrategy& strategy) {
    const Scenario& s = f.scenario;
    Rat acc = 0;
    for (std::int64_t u = 0; u < s.input_tuple_count(); ++u) {
        const Tuple xs = s.input_tuple(u);
        Tuple os(s.party_count());
        for (int p = 0; p < s.party_count(); ++p) os[p] = strategy[p][xs[p]];
        acc += f.coefficients[u * s.output_tuple_count() + s.output_index(os)];
    }
    return acc;
}

} // namespace

Rat local_max(const BellFunctional& f) {
    check_capacity(f.scenario);
    const std::int64_t count = deterministic_strategy_count(f.scenario);
    Rat best;
    for (std::int64_t i = 0; i < count; ++i) {
        const Rat v = value_on_strategy(f, deterministic_strategy(f.scenario, i));
        if (i == 0 || v > best) best = v;
    }
    return best;
}

LocalityCertificate is_local(const Behavior& b) {
    const Scenario& s = b.scenario();
    check_capacity(s);
    const std::int64_t n_strategies = deterministic_strategy_count(s);
    const std::int64_t n_cells = s.cell_count();

    // One weight per strategy; one equality per behavior cell. The weights
    // summing to 1 is implied by the per-input normalization of b.
    LpProblem lp;
    lp.num_vars = static_cast<int>(n_strategies);
    lp.objective.assign(lp.num_vars, Rat(0));

    std::vector<std::vector<Rat>> rows(n_cells, std::vector<Rat>(n_strategies, Rat(0)));
    for (std::int64_t i = 0; i < n_strategies; ++i) {
        const DeterministicStrategy strategy = deterministic_strategy(s, i);
        for (std::int64_t u = 0; u < s.input_tuple_count(); ++u) {
            const Tuple xs = s.input_tuple(u);
            Tuple os(s.party_count());
            for (int p = 0; p < s.party_count(); ++p) os[p] = strategy[p][xs[p]];
            rows[u * s.output_tuple_count() + s.output_index(os)][i] = 1;
        }
    }
    for (std::int64_t c = 0; c < n_cells; ++c)
        lp.add_row(std::move(rows[c]), Relation::Equal, b.table()[c]);

    const LpSolution lps = solve_lp(lp);
    LocalityCertificate cert;

    if (lps.status == LpStatus::Optimal) {
        cert.verdict = LocalityCertificate::Verdict::Local;
        for (std::int64_t i = 0; i < n_strategies; ++i)
            if (lps.point[i] != 0)
                cert.decomposition.emplace_back(deterministic_strategy(s, i), lps.point[i]);
    } else if (lps.status == LpStatus::Infeasible) {
        cert.verdict = LocalityCertificate::Verdict::Nonlocal;

        // The Farkas multipliers per cell row are the separating functional;
        // clear denominators so the coefficients are integers.
        std::vector<Rat> coeffs(lps.farkas.begin(), lps.farkas.end());
        Int lcm = 1;
        for (const Rat& c : coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(c));
        for (Rat& c : coeffs) c *= lcm;

        cert.functional = BellFunctional{s, std::move(coeffs)};
        cert.local_bound = local_max(cert.functional); // enumerated, not trusted
        cert.value = cert.functional.value_on(b);
    } else {
        throw VerificationError("locality LP reported an unbounded feasibility problem");
    }

    verify_locality_certificate(b, cert);
    return cert;
}

void verify_locality_certificate(const Behavior& b, const LocalityCertificate& cert) {
    if (cert.verdict == LocalityCertificate::Verdict::Local) {
        if (cert.decomposition.empty())
            throw VerificationError("local certificate has no decomposition");
        std::vector<Behavior> parts;
        std::vector<Rat> weights;
        for (const auto& [strategy, weight] : cert.decomposition) {
            parts.push_back(make_deterministic(b.scenario(), strategy));
            weights.push_back(weight);
        }
        if (!(mix(parts, weights) == b))
            throw VerificationError("local decomposition does not reproduce the behavior");
    } else {
        const Rat bound = local_max(cert.functional);
        if (bound != cert.local_bound)
            throw VerificationError("stated local bound disagrees with enumeration");
        if (!(cert.functional.value_on(b) > bound))
            throw VerificationError("separating functional does not exceed its local bound");
    }
}

} // namespace prbox
