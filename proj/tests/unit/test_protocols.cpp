#include <doctest.h>

#include <algorithm>
#include <set>

#include "prbox/errors.hpp"
#include "prbox/philox.hpp"
#include "prbox/protocols.hpp"

using namespace prbox;

TEST_SUITE_BEGIN("protocols");

TEST_CASE("PR box instance: relation, marginals, single use") {
    for (int r : {0, 1}) {
        for (int x : {0, 1})
            for (int y : {0, 1}) {
                PRBoxInstance box(r);
                const int a = box.query_alice(x);
                const int b = box.query_bob(y);
                CHECK((a ^ b) == (x & y));
                CHECK(a == r); // first port returns the internal bit
            }
        // Bob-first order satisfies the same relation.
        for (int x : {0, 1})
            for (int y : {0, 1}) {
                PRBoxInstance box(r);
                const int b = box.query_bob(y);
                const int a = box.query_alice(x);
                CHECK((a ^ b) == (x & y));
            }
    }

    PRBoxInstance box(0);
    box.query_alice(1);
    CHECK_THROWS_AS(box.query_alice(0), DomainError);
    box.query_bob(0);
    CHECK_THROWS_AS(box.query_bob(1), DomainError);
    CHECK_THROWS_AS(PRBoxInstance(0).query_alice(2), DomainError);
}

TEST_CASE("OT: output equals the chosen secret in all 16 internal cases") {
    for (int x0 : {0, 1})
        for (int x1 : {0, 1})
            for (int c : {0, 1})
                for (int r : {0, 1}) {
                    const OtTranscript t = run_ot_with_bit(x0, x1, c, r);
                    const int chosen = c ? x1 : x0;
                    CHECK(t.output == chosen);
                    CHECK(t.bits_communicated == 1);
                    CHECK(t.x == (x0 ^ x1));
                    CHECK(t.m == (t.a ^ x0));
                    CHECK(t.y == c);
                }
}

TEST_CASE("OT obliviousness: Bob's view is independent of the unchosen secret") {
    for (int c : {0, 1})
        for (int chosen : {0, 1}) {
            std::multiset<std::pair<int, int>> views[2];
            for (int unchosen : {0, 1}) {
                const int x0 = c ? unchosen : chosen;
                const int x1 = c ? chosen : unchosen;
                for (int r : {0, 1}) {
                    const OtTranscript t = run_ot_with_bit(x0, x1, c, r);
                    views[unchosen].insert({t.m, t.b});
                }
            }
            CHECK(views[0] == views[1]);   // same distribution either way
            CHECK(views[0].size() == 2);   // both internal bits occur...
            std::set<std::pair<int, int>> distinct(views[0].begin(), views[0].end());
            CHECK(distinct.size() == 2);   // ...and give distinct, equiprobable views
        }
}

TEST_CASE("OT: Bob's output bit alone is uniform before the message arrives") {
    for (int x0 : {0, 1})
        for (int x1 : {0, 1})
            for (int c : {0, 1}) {
                std::set<int> b_values;
                for (int r : {0, 1}) b_values.insert(run_ot_with_bit(x0, x1, c, r).b);
                CHECK(b_values == std::set<int>{0, 1});
            }
}

TEST_CASE("OT seeded runs are reproducible") {
    const OtTranscript a = run_ot(0, 1, 1, 42);
    const OtTranscript b = run_ot(0, 1, 1, 42);
    CHECK(a.a == b.a);
    CHECK(a.output == 1);
}

TEST_CASE("IPCC exhaustive at small n") {
    // n = 1, x = y = 1: a + b = 1 for both internal bits.
    for (int r : {0, 1}) {
        const IpccTranscript t = run_ip_cc_with_bits({1}, {1}, {r});
        CHECK(t.f == 1);
        CHECK(t.bits_communicated == 1);
    }

    // All 4^3 string pairs at n = 3, all 8 internal-bit patterns.
    for (int xs_code = 0; xs_code < 8; ++xs_code)
        for (int ys_code = 0; ys_code < 8; ++ys_code)
            for (int bits_code = 0; bits_code < 8; ++bits_code) {
                std::vector<int> xs, ys, bits;
                int expected = 0;
                for (int k = 0; k < 3; ++k) {
                    xs.push_back((xs_code >> k) & 1);
                    ys.push_back((ys_code >> k) & 1);
                    bits.push_back((bits_code >> k) & 1);
                    expected ^= xs[k] & ys[k];
                }
                const IpccTranscript t = run_ip_cc_with_bits(xs, ys, bits);
                CHECK(t.f == expected);
                CHECK(t.bits_communicated == 1);
                for (int k = 0; k < 3; ++k)
                    CHECK((t.round_a[k] ^ t.round_b[k]) == (xs[k] & ys[k]));
            }
}

TEST_CASE("IPCC matches the direct inner product on random long strings") {
    PhiloxRng rng(13, 60, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 128;
        std::vector<int> xs(n), ys(n);
        int expected = 0;
        for (std::size_t k = 0; k < n; ++k) {
            xs[k] = rng.next_bit();
            ys[k] = rng.next_bit();
            expected ^= xs[k] & ys[k];
        }
        const IpccTranscript t = run_ip_cc(xs, ys, trial);
        CHECK(t.f == expected);
        CHECK(t.bits_communicated == 1);
    }
}

TEST_CASE("IPCC rejects mismatched or empty strings") {
    CHECK_THROWS_AS(run_ip_cc({0, 1}, {1}, 0), DomainError);
    CHECK_THROWS_AS(run_ip_cc({}, {}, 0), DomainError);
    CHECK_THROWS_AS(run_ip_cc({2}, {1}, 0), DomainError);
}

TEST_SUITE_END();
