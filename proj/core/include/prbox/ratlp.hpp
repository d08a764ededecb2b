#pragma once

#include <vector>

#include "prbox/rational.hpp"

namespace prbox {

enum class Relation { LessEq, Equal, GreaterEq };

struct LpConstraint {
    std::vector<Rat> coeffs;
    Relation rel = Relation::Equal;
    Rat rhs;
};

/// maximize objective . x  subject to the rows, with x_j >= 0 wherever
/// nonneg[j] is set (variables default to nonnegative).
struct LpProblem {
    int num_vars = 0;
    std::vector<Rat> objective;
    std::vector<LpConstraint> rows;
    std::vector<bool> nonneg; // empty means all nonnegative

    int add_var(const Rat& objective_coeff = Rat(0), bool nonnegative = true);
    void add_row(std::vector<Rat> coeffs, Relation rel, Rat rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

// Certificate conventions, all checked exactly by verify_lp_solution:
//
// Optimal:    `point` satisfies every row and sign bound, and
//             objective.point == optimum. `dual` has one multiplier per row
//             (>= 0 for LessEq, <= 0 for GreaterEq, free for Equal) with
//             dual^T A - objective >= 0 on nonnegative variables, == 0 on
//             free ones, and dual.rhs == optimum.
// Infeasible: `farkas` has one multiplier per row (<= 0 for LessEq, >= 0 for
//             GreaterEq, free for Equal); g = sum_i farkas_i * row_i has
//             g_j <= 0 on nonnegative variables, g_j == 0 on free ones, and
//             farkas.rhs > 0 -- no x can satisfy the system.
// Unbounded:  `point` is feasible and `ray` preserves every row direction
//             (A_i.ray <= 0 / == 0 / >= 0 for LessEq/Equal/GreaterEq),
//             ray_j >= 0 on nonnegative variables, objective.ray > 0.
struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Rat optimum;
    std::vector<Rat> point;
    std::vector<Rat> dual;
    std::vector<Rat> farkas;
    std::vector<Rat> ray;
};

/// Exact two-phase simplex with Bland's rule (lowest-index entering and
/// leaving). Deterministic: identical problems give identical solutions.
LpSolution solve_lp(const LpProblem& p);

/// Re-checks the solution's certificate against the problem using exact
/// arithmetic only. Throws VerificationError on any discrepancy.
void verify_lp_solution(const LpProblem& p, const LpSolution& s);

} // namespace prbox
