#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "prbox/errors.hpp"

namespace prbox {

// All probabilities, functional coefficients and LP entries are exact
// rationals. Normalization and no-signalling are equality checks, never
// tolerance checks.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Canonical "p/q" form ("p" when the denominator is 1).
inline std::string rat_to_string(const Rat& r) { return r.str(); }

/// Parses "p", "p/q" or "-p/q". Rejects anything else, including q = 0.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) throw DomainError("bad rational literal: " + text);
            return Rat(Int(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw DomainError("bad rational literal: " + text);
        Int q(den);
        if (q == 0) throw DomainError("zero denominator in rational literal: " + text);
        return Rat(Int(num), q);
    } catch (const std::exception& e) {
        throw DomainError(std::string("bad rational literal '") + text + "': " + e.what());
    }
}

} // namespace prbox
