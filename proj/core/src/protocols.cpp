#include "prbox/protocols.hpp"

#include <string>

#include "prbox/errors.hpp"

namespace prbox {

namespace {

// Streams 16+ are reserved for protocol boxes; the singlet simulator uses
// the low stream ids.
constexpr std::uint32_t kProtocolStream = 16;

int checked_bit(int v, const char* name) {
    if (v != 0 && v != 1) throw DomainError(std::string(name) + " must be a bit");
    return v;
}

} // namespace

PRBoxInstance::PRBoxInstance(std::uint64_t seed, std::uint64_t instance) {
    PhiloxRng rng(seed, kProtocolStream, instance);
    r_ = rng.next_bit();
}

PRBoxInstance::PRBoxInstance(int internal_bit) : r_(checked_bit(internal_bit, "internal bit")) {}

int PRBoxInstance::query_alice(int x) {
    checked_bit(x, "box input x");
    if (alice_used_) throw DomainError("PR box port already used (Alice side)");
    alice_used_ = true;
    alice_input_ = x;
    if (bob_input_ >= 0) return r_ ^ (x & bob_input_); // second query folds in xy
    return r_;
}

int PRBoxInstance::query_bob(int y) {
    checked_bit(y, "box input y");
    if (bob_used_) throw DomainError("PR box port already used (Bob side)");
    bob_used_ = true;
    bob_input_ = y;
    if (alice_input_ >= 0) return r_ ^ (alice_input_ & y);
    return r_;
}

namespace {

OtTranscript run_ot_on(int x0, int x1, int c, PRBoxInstance box) {
    checked_bit(x0, "x0");
    checked_bit(x1, "x1");
    checked_bit(c, "c");
    OtTranscript t;
    t.x0 = x0;
    t.x1 = x1;
    t.c = c;
    t.x = x0 ^ x1;
    t.a = box.query_alice(t.x);
    t.m = t.a ^ x0; // the single communicated bit
    t.y = c;
    t.b = box.query_bob(t.y);
    t.output = t.m ^ t.b;
    t.bits_communicated = 1;
    return t;
}

} // namespace

OtTranscript run_ot(int x0, int x1, int c, std::uint64_t seed) {
    return run_ot_on(x0, x1, c, PRBoxInstance(seed, 0));
}

OtTranscript run_ot_with_bit(int x0, int x1, int c, int internal_bit) {
    return run_ot_on(x0, x1, c, PRBoxInstance(internal_bit));
}

namespace {

IpccTranscript run_ip_cc_on(const std::vector<int>& xs, const std::vector<int>& ys,
                            const std::vector<PRBoxInstance>& boxes) {
    if (xs.size() != ys.size() || xs.empty())
        throw DomainError("inner-product strings must be nonempty and of equal length");
    IpccTranscript t;
    t.xs = xs;
    t.ys = ys;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        checked_bit(xs[k], "x_k");
        checked_bit(ys[k], "y_k");
        PRBoxInstance box = boxes[k]; // fresh single-use box per round
        const int a = box.query_alice(xs[k]);
        const int b = box.query_bob(ys[k]);
        t.round_a.push_back(a);
        t.round_b.push_back(b);
        t.sum_a ^= a;
        t.sum_b ^= b;
    }
    t.f = t.sum_a ^ t.sum_b;
    t.bits_communicated = 1; // Alice sends only sum_a
    return t;
}

} // namespace

IpccTranscript run_ip_cc(const std::vector<int>& xs, const std::vector<int>& ys,
                         std::uint64_t seed) {
    std::vector<PRBoxInstance> boxes;
    boxes.reserve(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) boxes.emplace_back(seed, k);
    return run_ip_cc_on(xs, ys, boxes);
}

IpccTranscript run_ip_cc_with_bits(const std::vector<int>& xs, const std::vector<int>& ys,
                                   const std::vector<int>& internal_bits) {
    if (internal_bits.size() != xs.size())
        throw DomainError("need one internal bit per round");
    std::vector<PRBoxInstance> boxes;
    boxes.reserve(xs.size());
    for (int bit : internal_bits) boxes.emplace_back(bit);
    return run_ip_cc_on(xs, ys, boxes);
}

} // namespace prbox
