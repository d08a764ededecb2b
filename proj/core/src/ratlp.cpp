#include "prbox/ratlp.hpp"

#include <string>

namespace prbox {

int LpProblem::add_var(const Rat& objective_coeff, bool nonnegative) {
    objective.resize(num_vars, Rat(0));
    nonneg.resize(num_vars, true);
    objective.push_back(objective_coeff);
    nonneg.push_back(nonnegative);
    return num_vars++;
}

void LpProblem::add_row(std::vector<Rat> coeffs, Relation rel, Rat rhs) {
    coeffs.resize(num_vars, Rat(0));
    rows.push_back(LpConstraint{std::move(coeffs), rel, std::move(rhs)});
}

namespace {

struct Tableau {
    // Columns: structural (free vars split into +/- parts), slacks,
    // artificials; the last entry of each row is the RHS.
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> objrow; // reduced costs; last entry = -objective value
    std::vector<int> basis;  // basic column per row

    int ncols = 0;

    std::vector<int> col_var;  // structural column -> original variable
    std::vector<int> col_sign; // +1 or -1 (negative part of a free variable)
    int n_struct = 0;
    int first_art = 0;
    // Original row k keeps artificial column first_art + k even if the row is
    // later dropped as redundant: that column accumulates the row operations,
    // so its reduced cost always reads off row k's multiplier.

    void pivot(int r, int s) {
        const Rat piv = rows[r][s];
        for (Rat& v : rows[r]) v /= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r || rows[i][s] == 0) continue;
            const Rat f = rows[i][s];
            for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        if (objrow[s] != 0) {
            const Rat f = objrow[s];
            for (int j = 0; j <= ncols; ++j) objrow[j] -= f * rows[r][j];
        }
        basis[r] = s;
    }

    // Bland: lowest-index improving column, lowest-basis-index leaving row.
    // Returns Optimal when no column improves, Unbounded when the chosen
    // column has no positive entry.
    enum class StepResult { Pivoted, Optimal, Unbounded };
    StepResult step(bool allow_artificials, int* unbounded_col = nullptr) {
        int s = -1;
        for (int j = 0; j < ncols; ++j) {
            if (!allow_artificials && j >= first_art) break;
            if (objrow[j] > 0) {
                s = j;
                break;
            }
        }
        if (s < 0) return StepResult::Optimal;

        int r = -1;
        Rat best;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][s] <= 0) continue;
            Rat ratio = rows[i][ncols] / rows[i][s];
            if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
                r = static_cast<int>(i);
                best = ratio;
            }
        }
        if (r < 0) {
            if (unbounded_col) *unbounded_col = s;
            return StepResult::Unbounded;
        }
        pivot(r, s);
        return StepResult::Pivoted;
    }
};

} // namespace

LpSolution solve_lp(const LpProblem& p) {
    if (p.num_vars <= 0) throw DomainError("LP needs at least one variable");
    if (static_cast<int>(p.objective.size()) != p.num_vars)
        throw DomainError("LP objective length does not match variable count");
    if (!p.nonneg.empty() && static_cast<int>(p.nonneg.size()) != p.num_vars)
        throw DomainError("LP nonneg flag list does not match variable count");
    for (const LpConstraint& row : p.rows)
        if (static_cast<int>(row.coeffs.size()) != p.num_vars)
            throw DomainError("LP row length does not match variable count");
    auto is_nonneg = [&](int j) { return p.nonneg.empty() || p.nonneg[j]; };

    const int m = static_cast<int>(p.rows.size());
    Tableau t;

    for (int j = 0; j < p.num_vars; ++j) {
        t.col_var.push_back(j);
        t.col_sign.push_back(+1);
        if (!is_nonneg(j)) {
            t.col_var.push_back(j);
            t.col_sign.push_back(-1);
        }
    }
    t.n_struct = static_cast<int>(t.col_var.size());

    int n_slack = 0;
    for (const LpConstraint& row : p.rows)
        if (row.rel != Relation::Equal) ++n_slack;

    t.first_art = t.n_struct + n_slack;
    t.ncols = t.first_art + m;

    t.rows.assign(m, std::vector<Rat>(t.ncols + 1, Rat(0)));
    t.basis.assign(m, -1);
    std::vector<int> flip(m, 1); // -1 where the row was negated to get rhs >= 0

    int slack_cursor = t.n_struct;
    for (int i = 0; i < m; ++i) {
        const LpConstraint& row = p.rows[i];
        std::vector<Rat>& out = t.rows[i];
        for (int c = 0; c < t.n_struct; ++c)
            out[c] = Rat(t.col_sign[c]) * row.coeffs[t.col_var[c]];
        if (row.rel == Relation::LessEq) out[slack_cursor++] = 1;
        if (row.rel == Relation::GreaterEq) out[slack_cursor++] = -1;
        out[t.ncols] = row.rhs;

        if (out[t.ncols] < 0) {
            for (Rat& v : out) v = -v;
            flip[i] = -1;
        }
        out[t.first_art + i] = 1;
        t.basis[i] = t.first_art + i;
    }

    // Phase 1: maximize -(sum of artificials). objrow[j] = c_j - c_B.T_j with
    // c = -1 on artificials; the initial basis is the artificial identity.
    t.objrow.assign(t.ncols + 1, Rat(0));
    for (int j = 0; j <= t.ncols; ++j) {
        Rat colsum = 0;
        for (int i = 0; i < m; ++i) colsum += t.rows[i][j];
        t.objrow[j] = colsum; // = 0 - (-1)*colsum
    }
    for (int i = 0; i < m; ++i) t.objrow[t.first_art + i] = 0;

    Tableau::StepResult phase1;
    while ((phase1 = t.step(/*allow_artificials=*/true)) == Tableau::StepResult::Pivoted) {
    }
    if (phase1 == Tableau::StepResult::Unbounded)
        throw VerificationError("phase-1 simplex reported an unbounded auxiliary objective");

    LpSolution sol;
    const Rat phase1_value = -t.objrow[t.ncols];
    if (phase1_value < 0) {
        // Infeasible. Multiplier of internal row k is read off its artificial
        // reduced cost: objrow[first_art + k] = -1 - y_k.
        sol.status = LpStatus::Infeasible;
        sol.farkas.assign(m, Rat(0));
        for (int k = 0; k < m; ++k) {
            const Rat y = Rat(-1) - t.objrow[t.first_art + k];
            sol.farkas[k] = Rat(-flip[k]) * y;
        }
        verify_lp_solution(p, sol);
        return sol;
    }

    // Feasible: drive leftover artificials out of the basis; a row that has
    // no non-artificial pivot candidate is redundant and gets dropped (its
    // artificial column stays, it still carries the row's multiplier).
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < t.first_art) {
            ++i;
            continue;
        }
        int s = -1;
        for (int j = 0; j < t.first_art; ++j)
            if (t.rows[i][j] != 0) {
                s = j;
                break;
            }
        if (s >= 0) {
            t.pivot(static_cast<int>(i), s);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + i);
            t.basis.erase(t.basis.begin() + i);
        }
    }

    // Phase 2: real objective, artificial columns frozen (kept only so the
    // duals can be read off their reduced costs at the end).
    std::vector<Rat> cost(t.ncols, Rat(0));
    for (int c = 0; c < t.n_struct; ++c)
        cost[c] = Rat(t.col_sign[c]) * p.objective[t.col_var[c]];
    t.objrow.assign(t.ncols + 1, Rat(0));
    for (int j = 0; j <= t.ncols; ++j) {
        Rat acc = (j < t.ncols) ? cost[j] : Rat(0);
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            acc -= cost[t.basis[i]] * t.rows[i][j];
        t.objrow[j] = acc;
    }

    int unbounded_col = -1;
    Tableau::StepResult res;
    while ((res = t.step(/*allow_artificials=*/false, &unbounded_col)) ==
           Tableau::StepResult::Pivoted) {
    }

    auto extract_point = [&]() {
        std::vector<Rat> x(p.num_vars, Rat(0));
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            if (t.basis[i] < t.n_struct)
                x[t.col_var[t.basis[i]]] += Rat(t.col_sign[t.basis[i]]) * t.rows[i][t.ncols];
        return x;
    };

    if (res == Tableau::StepResult::Unbounded) {
        sol.status = LpStatus::Unbounded;
        sol.point = extract_point();
        sol.ray.assign(p.num_vars, Rat(0));
        if (unbounded_col < t.n_struct)
            sol.ray[t.col_var[unbounded_col]] += Rat(t.col_sign[unbounded_col]);
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            if (t.basis[i] < t.n_struct)
                sol.ray[t.col_var[t.basis[i]]] +=
                    Rat(-t.col_sign[t.basis[i]]) * t.rows[i][unbounded_col];
        verify_lp_solution(p, sol);
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.point = extract_point();
    sol.optimum = -t.objrow[t.ncols];
    sol.dual.assign(m, Rat(0));
    for (int k = 0; k < m; ++k) {
        const Rat y = -t.objrow[t.first_art + k]; // phase-2 artificial cost is 0
        sol.dual[k] = Rat(flip[k]) * y;
    }
    verify_lp_solution(p, sol);
    return sol;
}

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw VerificationError("LP certificate check failed: " + what);
}

} // namespace

void verify_lp_solution(const LpProblem& p, const LpSolution& s) {
    auto is_nonneg = [&](int j) { return p.nonneg.empty() || p.nonneg[j]; };
    const int m = static_cast<int>(p.rows.size());

    auto check_feasible = [&](const std::vector<Rat>& x) {
        require(static_cast<int>(x.size()) == p.num_vars, "point has wrong dimension");
        for (int j = 0; j < p.num_vars; ++j)
            if (is_nonneg(j)) require(x[j] >= 0, "point violates a sign bound");
        for (const LpConstraint& row : p.rows) {
            const Rat v = dot(row.coeffs, x);
            switch (row.rel) {
                case Relation::LessEq: require(v <= row.rhs, "point violates a <= row"); break;
                case Relation::Equal: require(v == row.rhs, "point violates an == row"); break;
                case Relation::GreaterEq: require(v >= row.rhs, "point violates a >= row"); break;
            }
        }
    };

    switch (s.status) {
        case LpStatus::Optimal: {
            check_feasible(s.point);
            require(dot(p.objective, s.point) == s.optimum,
                    "objective at point differs from claimed optimum");
            if (!s.dual.empty()) {
                require(static_cast<int>(s.dual.size()) == m, "dual has wrong dimension");
                Rat ytb = 0;
                for (int i = 0; i < m; ++i) {
                    if (p.rows[i].rel == Relation::LessEq)
                        require(s.dual[i] >= 0, "dual sign on a <= row");
                    if (p.rows[i].rel == Relation::GreaterEq)
                        require(s.dual[i] <= 0, "dual sign on a >= row");
                    ytb += s.dual[i] * p.rows[i].rhs;
                }
                for (int j = 0; j < p.num_vars; ++j) {
                    Rat yta = 0;
                    for (int i = 0; i < m; ++i) yta += s.dual[i] * p.rows[i].coeffs[j];
                    const Rat slack = yta - p.objective[j];
                    if (is_nonneg(j))
                        require(slack >= 0, "dual infeasible on nonnegative variable " +
                                                std::to_string(j) + " (slack " +
                                                rat_to_string(slack) + ")");
                    else
                        require(slack == 0,
                                "dual infeasible on free variable " + std::to_string(j));
                }
                require(ytb == s.optimum, "dual objective differs from optimum");
            }
            break;
        }
        case LpStatus::Infeasible: {
            require(static_cast<int>(s.farkas.size()) == m, "farkas has wrong dimension");
            Rat h = 0;
            for (int i = 0; i < m; ++i) {
                if (p.rows[i].rel == Relation::LessEq)
                    require(s.farkas[i] <= 0, "farkas sign on a <= row");
                if (p.rows[i].rel == Relation::GreaterEq)
                    require(s.farkas[i] >= 0, "farkas sign on a >= row");
                h += s.farkas[i] * p.rows[i].rhs;
            }
            for (int j = 0; j < p.num_vars; ++j) {
                Rat g = 0;
                for (int i = 0; i < m; ++i) g += s.farkas[i] * p.rows[i].coeffs[j];
                if (is_nonneg(j))
                    require(g <= 0, "farkas combination positive on a nonnegative variable");
                else
                    require(g == 0, "farkas combination nonzero on a free variable");
            }
            require(h > 0, "farkas combination does not contradict the system");
            break;
        }
        case LpStatus::Unbounded: {
            check_feasible(s.point);
            require(static_cast<int>(s.ray.size()) == p.num_vars, "ray has wrong dimension");
            for (int j = 0; j < p.num_vars; ++j)
                if (is_nonneg(j)) require(s.ray[j] >= 0, "ray violates a sign bound");
            for (const LpConstraint& row : p.rows) {
                const Rat v = dot(row.coeffs, s.ray);
                switch (row.rel) {
                    case Relation::LessEq: require(v <= 0, "ray increases a <= row"); break;
                    case Relation::Equal: require(v == 0, "ray moves an == row"); break;
                    case Relation::GreaterEq: require(v >= 0, "ray decreases a >= row"); break;
                }
            }
            require(dot(p.objective, s.ray) > 0, "ray does not improve the objective");
            break;
        }
    }
}

} // namespace prbox
