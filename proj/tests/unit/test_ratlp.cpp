#include <doctest.h>

#include "prbox/philox.hpp"
#include "prbox/ratlp.hpp"

using namespace prbox;

TEST_SUITE_BEGIN("ratlp");

TEST_CASE("bounded maximization") {
    LpProblem p;
    const int x = p.add_var(Rat(1));
    LpConstraint row{{Rat(1)}, Relation::LessEq, Rat(1)};
    p.rows.push_back(row);
    (void)x;
    const LpSolution s = solve_lp(p);
    CHECK(s.status == LpStatus::Optimal);
    CHECK(s.optimum == Rat(1));
    CHECK(s.point[0] == Rat(1));
    verify_lp_solution(p, s);
}

TEST_CASE("equality constraint") {
    LpProblem p;
    p.add_var(Rat(1));
    p.add_var(Rat(1));
    p.add_row({Rat(1), Rat(1)}, Relation::Equal, Rat(1));
    const LpSolution s = solve_lp(p);
    CHECK(s.status == LpStatus::Optimal);
    CHECK(s.optimum == Rat(1));
}

TEST_CASE("infeasible system yields a checkable Farkas certificate") {
    LpProblem p;
    p.add_var(Rat(0));
    p.add_row({Rat(1)}, Relation::LessEq, Rat(0));
    p.add_row({Rat(1)}, Relation::GreaterEq, Rat(1));
    const LpSolution s = solve_lp(p);
    CHECK(s.status == LpStatus::Infeasible);
    CHECK(s.farkas.size() == 2);
    verify_lp_solution(p, s); // would throw on a broken certificate
}

TEST_CASE("unbounded problem yields a ray") {
    LpProblem p;
    p.add_var(Rat(1));
    p.add_row({Rat(1)}, Relation::GreaterEq, Rat(0));
    const LpSolution s = solve_lp(p);
    CHECK(s.status == LpStatus::Unbounded);
    verify_lp_solution(p, s);
}

TEST_CASE("free variables split correctly") {
    LpProblem p;
    p.add_var(Rat(-1), /*nonnegative=*/false); // minimize x, x free
    p.add_row({Rat(1)}, Relation::GreaterEq, Rat(-5));
    const LpSolution s = solve_lp(p);
    CHECK(s.status == LpStatus::Optimal);
    CHECK(s.point[0] == Rat(-5));
    CHECK(s.optimum == Rat(5));
}

TEST_CASE("duplicate and dependent rows keep certificates valid") {
    // Regression: redundant rows are dropped internally, yet the dual must
    // still cover every original row.
    LpProblem p;
    p.add_var(Rat(1));
    p.add_var(Rat(2));
    p.add_row({Rat(1), Rat(1)}, Relation::Equal, Rat(1));
    p.add_row({Rat(1), Rat(1)}, Relation::Equal, Rat(1));
    p.add_row({Rat(2), Rat(2)}, Relation::Equal, Rat(2));
    p.add_row({Rat(1), Rat(0)}, Relation::LessEq, Rat(1));
    const LpSolution s = solve_lp(p);
    CHECK(s.status == LpStatus::Optimal);
    CHECK(s.optimum == Rat(2));
    verify_lp_solution(p, s);
}

TEST_CASE("negative right-hand sides are flipped internally") {
    LpProblem p;
    p.add_var(Rat(-1), false);
    p.add_row({Rat(-1)}, Relation::LessEq, Rat(-2)); // -x <= -2, i.e. x >= 2
    const LpSolution s = solve_lp(p);
    CHECK(s.status == LpStatus::Optimal);
    CHECK(s.point[0] == Rat(2));
    CHECK(s.optimum == Rat(-2));
}

TEST_CASE("determinism") {
    LpProblem p;
    for (int i = 0; i < 4; ++i) p.add_var(Rat(i + 1));
    p.add_row({Rat(1), Rat(1), Rat(1), Rat(1)}, Relation::LessEq, Rat(10));
    p.add_row({Rat(1), Rat(2), Rat(0), Rat(1)}, Relation::LessEq, Rat(7));
    const LpSolution a = solve_lp(p);
    const LpSolution b = solve_lp(p);
    CHECK(a.status == b.status);
    CHECK(a.optimum == b.optimum);
    CHECK(a.point == b.point);
    CHECK(a.dual == b.dual);
}

TEST_CASE("random problems self-verify") {
    // solve_lp verifies internally; this exercises many shapes anyway.
    PhiloxRng rng(2024, 50, 0);
    for (int trial = 0; trial < 40; ++trial) {
        LpProblem p;
        const int n = 2 + int(rng.next_u64() % 4);
        for (int j = 0; j < n; ++j)
            p.add_var(Rat(Int(rng.next_u64() % 7) - 3), rng.next_bit() == 0);
        const int m = 1 + int(rng.next_u64() % 5);
        for (int i = 0; i < m; ++i) {
            std::vector<Rat> row(n);
            for (auto& c : row) c = Rat(Int(rng.next_u64() % 9) - 4);
            const auto rel = static_cast<Relation>(rng.next_u64() % 3);
            p.add_row(std::move(row), rel, Rat(Int(rng.next_u64() % 11) - 5));
        }
        const LpSolution s = solve_lp(p);
        verify_lp_solution(p, s);
    }
}

TEST_CASE("malformed problems are rejected") {
    LpProblem p;
    CHECK_THROWS_AS(solve_lp(p), DomainError); // no variables
    p.add_var(Rat(1));
    p.rows.push_back(LpConstraint{{Rat(1), Rat(2)}, Relation::Equal, Rat(0)});
    CHECK_THROWS_AS(solve_lp(p), DomainError); // row length mismatch
}

TEST_SUITE_END();
