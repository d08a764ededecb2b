#include "prbox/cloning.hpp"

#include <tuple>

#include "prbox/ratlp.hpp"

namespace prbox {

Behavior perfect_clone_composite() {
    const Scenario s = Scenario::binary(3); // parties: Alice, Bob, Bob'
    std::vector<Rat> table(s.cell_count(), Rat(0));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int yp = 0; yp < 2; ++yp)
                for (int a = 0; a < 2; ++a) {
                    const int b = a ^ (x & y);
                    const int bp = a ^ (x & yp);
                    table[s.cell_index({x, y, yp}, {a, b, bp})] = Rat(1, 2);
                }
    return Behavior(s, std::move(table));
}

namespace {

// Cell order of the LP variables matches the behavior table of the
// (a,b,b'|x,y,y') scenario; variable 64 is V.
constexpr int kCells = 64;
constexpr int kVisibility = 64;

std::int64_t cell(const Scenario& s, int x, int y, int yp, int a, int b, int bp) {
    return s.cell_index({x, y, yp}, {a, b, bp});
}

} // namespace

LpProblem build_monogamy_lp(const MonogamyOptions& options) {
    const Scenario s = Scenario::binary(3);

    LpProblem lp;
    lp.num_vars = kCells + 1;
    lp.objective.assign(lp.num_vars, Rat(0));
    lp.objective[kVisibility] = 1; // maximize V

    auto fresh_row = [&]() { return std::vector<Rat>(lp.num_vars, Rat(0)); };

    // Normalization per input triple.
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int yp = 0; yp < 2; ++yp) {
                auto row = fresh_row();
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int bp = 0; bp < 2; ++bp) row[cell(s, x, y, yp, a, b, bp)] = 1;
                lp.add_row(std::move(row), Relation::Equal, Rat(1));
            }

    // Full no-signalling lattice: every proper nonempty subset's marginal is
    // independent of the complement's inputs. Parties are A=0, B=1, B'=2.
    for (unsigned mask = 1; mask < 7; ++mask) {
        std::vector<int> keep, comp;
        for (int p = 0; p < 3; ++p) ((mask >> p) & 1 ? keep : comp).push_back(p);

        const int keep_inputs = 1 << keep.size();
        const int keep_outputs = 1 << keep.size();
        const int comp_inputs = 1 << comp.size();
        const int comp_outputs = 1 << comp.size();

        for (int ku = 0; ku < keep_inputs; ++ku)
            for (int ko = 0; ko < keep_outputs; ++ko)
                for (int cu = 1; cu < comp_inputs; ++cu) {
                    auto row = fresh_row();
                    for (int co = 0; co < comp_outputs; ++co) {
                        int xs[3], os[3];
                        for (std::size_t i = 0; i < keep.size(); ++i) {
                            xs[keep[i]] = (ku >> i) & 1;
                            os[keep[i]] = (ko >> i) & 1;
                        }
                        for (std::size_t i = 0; i < comp.size(); ++i) os[comp[i]] = (co >> i) & 1;

                        for (std::size_t i = 0; i < comp.size(); ++i)
                            xs[comp[i]] = (cu >> i) & 1;
                        row[cell(s, xs[0], xs[1], xs[2], os[0], os[1], os[2])] += 1;

                        for (std::size_t i = 0; i < comp.size(); ++i) xs[comp[i]] = 0;
                        row[cell(s, xs[0], xs[1], xs[2], os[0], os[1], os[2])] -= 1;
                    }
                    lp.add_row(std::move(row), Relation::Equal, Rat(0));
                }
    }

    // Marginal pinning: P_AB(a,b|x,y) = 1/4 + V*k with k = +1/4 when
    // a+b = xy and -1/4 otherwise. No-signalling makes the y' slice
    // irrelevant; y' = 0 is used.
    auto add_marginal_rows = [&](bool second_port) {
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) {
                        auto row = fresh_row();
                        for (int other = 0; other < 2; ++other) {
                            if (second_port)
                                row[cell(s, x, 0, y, a, other, b)] = 1;
                            else
                                row[cell(s, x, y, 0, a, b, other)] = 1;
                        }
                        const bool hit = ((a ^ b) == (x & y));
                        row[kVisibility] = hit ? Rat(-1, 4) : Rat(1, 4);
                        lp.add_row(std::move(row), Relation::Equal, Rat(1, 4));
                    }
    };
    add_marginal_rows(false);
    if (options.constrain_second_marginal) add_marginal_rows(true);

    if (options.swap_symmetry) {
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int yp = 0; yp < 2; ++yp)
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b)
                            for (int bp = 0; bp < 2; ++bp) {
                                if (std::make_tuple(y, b) <= std::make_tuple(yp, bp)) continue;
                                auto row = fresh_row();
                                row[cell(s, x, y, yp, a, b, bp)] += 1;
                                row[cell(s, x, yp, y, a, bp, b)] -= 1;
                                lp.add_row(std::move(row), Relation::Equal, Rat(0));
                            }
    }

    // V <= 1 (nonnegativity of the noise weight).
    {
        auto row = fresh_row();
        row[kVisibility] = 1;
        lp.add_row(std::move(row), Relation::LessEq, Rat(1));
    }
    return lp;
}

MonogamyResult max_symmetric_isotropic_extension(const MonogamyOptions& options) {
    const Scenario s = Scenario::binary(3);
    const LpProblem lp = build_monogamy_lp(options);
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw VerificationError("monogamy LP did not reach an optimum");

    std::vector<Rat> table(sol.point.begin(), sol.point.begin() + kCells);
    MonogamyResult result{sol.optimum, Behavior(s, std::move(table))};

    // Certificate re-checks, all exact.
    if (!check_no_signalling(result.certificate).is_no_signalling)
        throw VerificationError("monogamy optimum is signalling");
    const Behavior iso = make_isotropic(result.v_star);
    if (!(marginal(result.certificate, {0, 1}, {0}) == iso))
        throw VerificationError("monogamy optimum has a wrong (A,B) marginal");
    if (options.constrain_second_marginal &&
        !(marginal(result.certificate, {0, 2}, {0}) == iso))
        throw VerificationError("monogamy optimum has a wrong (A,B') marginal");
    return result;
}

} // namespace prbox
