#pragma once

#include <cstdint>
#include <vector>

#include "prbox/errors.hpp"

namespace prbox {

/// Party-indexed tuple of input or output symbols (values are alphabet indices).
using Tuple = std::vector<int>;

/// Finite-alphabet measurement scenario: how many parties, and how many
/// inputs/outputs each party has.
class Scenario {
  public:
    Scenario(std::vector<int> inputs_per_party, std::vector<int> outputs_per_party);

    int party_count() const { return static_cast<int>(inputs_.size()); }
    int inputs_of(int party) const { return inputs_.at(party); }
    int outputs_of(int party) const { return outputs_.at(party); }
    const std::vector<int>& inputs_per_party() const { return inputs_; }
    const std::vector<int>& outputs_per_party() const { return outputs_; }

    // Row-major index math, party 0 most significant. The cell order
    // (input-tuple major, output-tuple minor) is part of the file format.
    std::int64_t input_tuple_count() const { return input_count_; }
    std::int64_t output_tuple_count() const { return output_count_; }
    std::int64_t cell_count() const { return input_count_ * output_count_; }

    std::int64_t input_index(const Tuple& xs) const;
    std::int64_t output_index(const Tuple& os) const;
    Tuple input_tuple(std::int64_t index) const;
    Tuple output_tuple(std::int64_t index) const;

    std::int64_t cell_index(const Tuple& xs, const Tuple& os) const {
        return input_index(xs) * output_count_ + output_index(os);
    }

    bool operator==(const Scenario& other) const = default;

    /// Two parties, binary inputs and outputs everywhere.
    static Scenario chsh() { return Scenario({2, 2}, {2, 2}); }
    /// n parties, binary inputs and outputs everywhere.
    static Scenario binary(int parties);

  private:
    std::vector<int> inputs_;
    std::vector<int> outputs_;
    std::int64_t input_count_ = 1;
    std::int64_t output_count_ = 1;
};

} // namespace prbox
