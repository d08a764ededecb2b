#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "prbox/rational.hpp"
#include "prbox/scenario.hpp"

namespace prbox {

/// Per-party input -> output maps; strategy[p][x] is party p's output on input x.
using DeterministicStrategy = std::vector<std::vector<int>>;

/// A multipartite conditional probability table P(outputs | inputs) with
/// exact rational entries. Immutable after construction; construction
/// enforces nonnegativity and exact per-input normalization.
class Behavior {
  public:
    Behavior(Scenario scenario, std::vector<Rat> table);

    const Scenario& scenario() const { return scenario_; }
    const std::vector<Rat>& table() const { return table_; }

    const Rat& prob(const Tuple& inputs, const Tuple& outputs) const {
        return table_[scenario_.cell_index(inputs, outputs)];
    }
    const Rat& prob_at(std::int64_t cell) const { return table_[cell]; }

    bool operator==(const Behavior& other) const {
        return scenario_ == other.scenario_ && table_ == other.table_;
    }

  private:
    Scenario scenario_;
    std::vector<Rat> table_;
};

// --- Constructors for the boxes under study ---

/// The PR box: P(a,b|x,y) = 1/2 when a+b = xy (mod 2), else 0.
Behavior make_pr_box();

/// Visibility-v mixture of the PR box with uniform noise:
/// P(a,b|x,y) = (v/2)[a+b=xy] + (1-v)/4. Requires 0 <= v <= 1.
Behavior make_isotropic(const Rat& v);

/// Point distribution on the strategy's output tuple for every input tuple.
Behavior make_deterministic(const Scenario& scenario, const DeterministicStrategy& strategy);

/// Uniform distribution over outputs for every input tuple.
Behavior make_uniform(const Scenario& scenario);

// --- Algebra ---

/// Cell-wise convex combination. Weights must be nonnegative and sum to 1;
/// all behaviors must share one scenario.
Behavior mix(const std::vector<Behavior>& behaviors, const std::vector<Rat>& weights);

/// Independent composition on the concatenated party list.
Behavior product(const Behavior& left, const Behavior& right);

/// Restriction to `keep` (ascending party indices), summing out the other
/// parties' outputs at the inputs fixed by `others_inputs` (indexed by
/// discarded party, ascending).
Behavior marginal(const Behavior& b, const std::vector<int>& keep, const Tuple& others_inputs);

// --- No-signalling ---

struct NsViolation {
    std::vector<int> subset;      // kept parties, ascending
    Tuple subset_inputs;          // their inputs
    Tuple subset_outputs;         // the marginal cell that differs
    Tuple complement_inputs_ref;  // complement inputs of the reference marginal
    Tuple complement_inputs_alt;  // complement inputs where it differs
    Rat prob_ref;
    Rat prob_alt;
    Rat discrepancy;              // prob_alt - prob_ref
};

struct NoSignallingReport {
    bool is_no_signalling = true;
    std::vector<NsViolation> violations;
};

/// Compares, for every proper nonempty party subset, its marginal across all
/// input assignments of the complement. Exact; reports every discrepancy.
NoSignallingReport check_no_signalling(const Behavior& b);

// --- Text serialization ---
//
// Header `scenario: n=<parties> inputs=<list> outputs=<list>`, then one line
// per nonzero cell: `x0,x1,... | a0,a1,... : p/q`. Cells appear in index
// order; zero cells may be omitted. Parsing rejects non-normalized tables.

std::string to_text(const Behavior& b);
Behavior behavior_from_text(const std::string& text);
Behavior read_behavior(std::istream& in);

} // namespace prbox
