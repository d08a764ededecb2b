#pragma once

#include <cstdint>
#include <vector>

#include "prbox/philox.hpp"

namespace prbox {

/// One shared PR box: each port may be queried exactly once, outputs satisfy
/// a + b = xy (mod 2) for the queried inputs, and each port alone is a fair
/// coin. The first queried port returns the internal bit; the second folds in
/// the input product.
class PRBoxInstance {
  public:
    PRBoxInstance(std::uint64_t seed, std::uint64_t instance);
    /// Fixed internal bit; used by exhaustive checks.
    explicit PRBoxInstance(int internal_bit);

    int query_alice(int x);
    int query_bob(int y);

    int internal_bit() const { return r_; }

  private:
    int r_ = 0;
    int alice_input_ = -1, bob_input_ = -1; // -1 = not queried yet
    bool alice_used_ = false, bob_used_ = false;
};

/// Full record of one oblivious-transfer run built from one PR box plus one
/// communicated bit.
struct OtTranscript {
    int x0 = 0, x1 = 0, c = 0;
    int x = 0; // Alice's box input, x0 + x1
    int a = 0; // Alice's box output
    int m = 0; // the communicated bit, a + x0
    int y = 0; // Bob's box input, = c
    int b = 0; // Bob's box output
    int output = 0; // m + b = x_c
    int bits_communicated = 1;
};

OtTranscript run_ot(int x0, int x1, int c, std::uint64_t seed);
/// Same protocol with the box's internal bit pinned (for exhaustive checks).
OtTranscript run_ot_with_bit(int x0, int x1, int c, int internal_bit);

/// Inner-product communication-complexity run: n single-use boxes, one
/// communicated bit, f = sum x_k y_k (mod 2).
struct IpccTranscript {
    std::vector<int> xs, ys;
    std::vector<int> round_a, round_b;
    int sum_a = 0; // A, the communicated bit
    int sum_b = 0;
    int f = 0;     // A + B
    int bits_communicated = 1;
};

IpccTranscript run_ip_cc(const std::vector<int>& xs, const std::vector<int>& ys,
                         std::uint64_t seed);
/// Internal box bits pinned per round (for exhaustive checks).
IpccTranscript run_ip_cc_with_bits(const std::vector<int>& xs, const std::vector<int>& ys,
                                   const std::vector<int>& internal_bits);

} // namespace prbox
