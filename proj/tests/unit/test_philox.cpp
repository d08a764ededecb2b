#include <doctest.h>

#include <cmath>
#include <set>

#include "prbox/philox.hpp"

using namespace prbox;

TEST_SUITE_BEGIN("philox");

TEST_CASE("known-answer vectors from the reference implementation") {
    // Random123 kat_vectors, philox4x32 with 10 rounds.
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) ==
          std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                     {0xffffffffu, 0xffffffffu}) ==
          std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                     {0xa4093822u, 0x299f31d0u}) ==
          std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("same address, same stream") {
    PhiloxRng a(42, 3, 1000), b(42, 3, 1000);
    for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct shots and streams decorrelate") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t shot = 0; shot < 64; ++shot) {
        PhiloxRng rng(7, 0, shot);
        seen.insert(rng.next_u64());
    }
    for (std::uint32_t stream = 0; stream < 64; ++stream) {
        PhiloxRng rng(7, stream, 0);
        seen.insert(rng.next_u64());
    }
    CHECK(seen.size() == 127); // the (stream 0, shot 0) draw appears twice
}

TEST_CASE("unit doubles stay in [0,1)") {
    PhiloxRng rng(1, 0, 0);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_SUITE_END();
