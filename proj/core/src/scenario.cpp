#include "prbox/scenario.hpp"

namespace prbox {

Scenario::Scenario(std::vector<int> inputs_per_party, std::vector<int> outputs_per_party)
    : inputs_(std::move(inputs_per_party)), outputs_(std::move(outputs_per_party)) {
    if (inputs_.empty() || inputs_.size() != outputs_.size())
        throw DomainError("scenario needs matching, nonempty input/output alphabet lists");
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
        if (inputs_[i] < 1 || outputs_[i] < 1)
            throw DomainError("alphabet sizes must be >= 1");
        input_count_ *= inputs_[i];
        output_count_ *= outputs_[i];
    }
}

std::int64_t Scenario::input_index(const Tuple& xs) const {
    if (static_cast<int>(xs.size()) != party_count())
        throw DomainError("input tuple has wrong arity");
    std::int64_t idx = 0;
    for (int p = 0; p < party_count(); ++p) {
        if (xs[p] < 0 || xs[p] >= inputs_[p]) throw DomainError("input symbol out of range");
        idx = idx * inputs_[p] + xs[p];
    }
    return idx;
}

std::int64_t Scenario::output_index(const Tuple& os) const {
    if (static_cast<int>(os.size()) != party_count())
        throw DomainError("output tuple has wrong arity");
    std::int64_t idx = 0;
    for (int p = 0; p < party_count(); ++p) {
        if (os[p] < 0 || os[p] >= outputs_[p]) throw DomainError("output symbol out of range");
        idx = idx * outputs_[p] + os[p];
    }
    return idx;
}

Tuple Scenario::input_tuple(std::int64_t index) const {
    Tuple xs(party_count());
    for (int p = party_count() - 1; p >= 0; --p) {
        xs[p] = static_cast<int>(index % inputs_[p]);
        index /= inputs_[p];
    }
    return xs;
}

Tuple Scenario::output_tuple(std::int64_t index) const {
    Tuple os(party_count());
    for (int p = party_count() - 1; p >= 0; --p) {
        os[p] = static_cast<int>(index % outputs_[p]);
        index /= outputs_[p];
    }
    return os;
}

Scenario Scenario::binary(int parties) {
    if (parties < 1) throw DomainError("party count must be >= 1");
    return Scenario(std::vector<int>(parties, 2), std::vector<int>(parties, 2));
}

} // namespace prbox
