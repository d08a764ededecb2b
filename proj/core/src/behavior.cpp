#include "prbox/behavior.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace prbox {

Behavior::Behavior(Scenario scenario, std::vector<Rat> table)
    : scenario_(std::move(scenario)), table_(std::move(table)) {
    if (static_cast<std::int64_t>(table_.size()) != scenario_.cell_count())
        throw DomainError("behavior table size does not match the scenario");
    const std::int64_t n_out = scenario_.output_tuple_count();
    for (std::int64_t u = 0; u < scenario_.input_tuple_count(); ++u) {
        Rat row_sum = 0;
        for (std::int64_t o = 0; o < n_out; ++o) {
            const Rat& p = table_[u * n_out + o];
            if (p < 0) throw DomainError("negative probability in behavior table");
            row_sum += p;
        }
        if (row_sum != 1)
            throw DomainError("behavior table not normalized at input tuple " +
                              std::to_string(u) + " (sum " + rat_to_string(row_sum) + ")");
    }
}

Behavior make_pr_box() {
    const Scenario s = Scenario::chsh();
    std::vector<Rat> table(s.cell_count(), Rat(0));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a) {
                const int b = a ^ (x & y);
                table[s.cell_index({x, y}, {a, b})] = Rat(1, 2);
            }
    return Behavior(s, std::move(table));
}

Behavior make_isotropic(const Rat& v) {
    if (v < 0 || v > 1) throw DomainError("isotropic visibility must lie in [0, 1]");
    const Scenario s = Scenario::chsh();
    std::vector<Rat> table(s.cell_count());
    const Rat noise = (1 - v) / 4;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const bool hit = ((a ^ b) == (x & y));
                    table[s.cell_index({x, y}, {a, b})] = noise + (hit ? v / 2 : Rat(0));
                }
    return Behavior(s, std::move(table));
}

Behavior make_deterministic(const Scenario& scenario, const DeterministicStrategy& strategy) {
    if (static_cast<int>(strategy.size()) != scenario.party_count())
        throw DomainError("deterministic strategy must cover every party");
    for (int p = 0; p < scenario.party_count(); ++p) {
        if (static_cast<int>(strategy[p].size()) != scenario.inputs_of(p))
            throw DomainError("deterministic strategy must be total over party " +
                              std::to_string(p) + "'s inputs");
        for (int o : strategy[p])
            if (o < 0 || o >= scenario.outputs_of(p))
                throw DomainError("deterministic strategy output out of range");
    }
    std::vector<Rat> table(scenario.cell_count(), Rat(0));
    for (std::int64_t u = 0; u < scenario.input_tuple_count(); ++u) {
        const Tuple xs = scenario.input_tuple(u);
        Tuple os(scenario.party_count());
        for (int p = 0; p < scenario.party_count(); ++p) os[p] = strategy[p][xs[p]];
        table[u * scenario.output_tuple_count() + scenario.output_index(os)] = Rat(1);
    }
    return Behavior(scenario, std::move(table));
}

Behavior make_uniform(const Scenario& scenario) {
    const Rat p(1, scenario.output_tuple_count());
    return Behavior(scenario, std::vector<Rat>(scenario.cell_count(), p));
}

Behavior mix(const std::vector<Behavior>& behaviors, const std::vector<Rat>& weights) {
    if (behaviors.empty() || behaviors.size() != weights.size())
        throw DomainError("mix needs matching, nonempty behavior and weight lists");
    Rat total = 0;
    for (const Rat& w : weights) {
        if (w < 0) throw DomainError("mix weights must be nonnegative");
        total += w;
    }
    if (total != 1) throw DomainError("mix weights must sum to 1");
    const Scenario& s = behaviors.front().scenario();
    for (const Behavior& b : behaviors)
        if (!(b.scenario() == s)) throw DomainError("mix requires a common scenario");
    std::vector<Rat> table(s.cell_count(), Rat(0));
    for (std::size_t k = 0; k < behaviors.size(); ++k)
        for (std::int64_t c = 0; c < s.cell_count(); ++c)
            table[c] += weights[k] * behaviors[k].table()[c];
    return Behavior(s, std::move(table));
}

Behavior product(const Behavior& left, const Behavior& right) {
    std::vector<int> ins = left.scenario().inputs_per_party();
    std::vector<int> outs = left.scenario().outputs_per_party();
    ins.insert(ins.end(), right.scenario().inputs_per_party().begin(),
               right.scenario().inputs_per_party().end());
    outs.insert(outs.end(), right.scenario().outputs_per_party().begin(),
                right.scenario().outputs_per_party().end());
    const Scenario s(ins, outs);

    const int nl = left.scenario().party_count();
    std::vector<Rat> table(s.cell_count());
    for (std::int64_t u = 0; u < s.input_tuple_count(); ++u) {
        const Tuple xs = s.input_tuple(u);
        const Tuple xl(xs.begin(), xs.begin() + nl);
        const Tuple xr(xs.begin() + nl, xs.end());
        for (std::int64_t o = 0; o < s.output_tuple_count(); ++o) {
            Tuple os = s.output_tuple(o);
            const Tuple ol(os.begin(), os.begin() + nl);
            const Tuple orr(os.begin() + nl, os.end());
            table[u * s.output_tuple_count() + o] = left.prob(xl, ol) * right.prob(xr, orr);
        }
    }
    return Behavior(s, std::move(table));
}

namespace {

// Enumerates all input assignments of the given parties (ascending indices).
std::vector<Tuple> assignments(const Scenario& s, const std::vector<int>& parties) {
    std::vector<Tuple> out;
    std::int64_t count = 1;
    for (int p : parties) count *= s.inputs_of(p);
    for (std::int64_t idx = 0; idx < count; ++idx) {
        Tuple t(parties.size());
        std::int64_t rest = idx;
        for (int k = static_cast<int>(parties.size()) - 1; k >= 0; --k) {
            t[k] = static_cast<int>(rest % s.inputs_of(parties[k]));
            rest /= s.inputs_of(parties[k]);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<int> complement_of(const Scenario& s, const std::vector<int>& keep) {
    std::vector<int> comp;
    std::size_t k = 0;
    for (int p = 0; p < s.party_count(); ++p) {
        if (k < keep.size() && keep[k] == p)
            ++k;
        else
            comp.push_back(p);
    }
    return comp;
}

// Marginal table of the kept parties at fixed complement inputs; indexed by
// (kept input index) * (kept output count) + (kept output index).
std::vector<Rat> marginal_table(const Behavior& b, const std::vector<int>& keep,
                                const std::vector<int>& comp, const Tuple& comp_inputs,
                                const Scenario& kept_scenario) {
    const Scenario& s = b.scenario();
    std::vector<Rat> out(kept_scenario.cell_count(), Rat(0));
    std::int64_t comp_out_count = 1;
    for (int p : comp) comp_out_count *= s.outputs_of(p);

    for (std::int64_t ku = 0; ku < kept_scenario.input_tuple_count(); ++ku) {
        const Tuple kept_in = kept_scenario.input_tuple(ku);
        Tuple xs(s.party_count());
        for (std::size_t i = 0; i < keep.size(); ++i) xs[keep[i]] = kept_in[i];
        for (std::size_t i = 0; i < comp.size(); ++i) xs[comp[i]] = comp_inputs[i];
        for (std::int64_t ko = 0; ko < kept_scenario.output_tuple_count(); ++ko) {
            const Tuple kept_out = kept_scenario.output_tuple(ko);
            Rat sum = 0;
            for (std::int64_t ci = 0; ci < comp_out_count; ++ci) {
                Tuple os(s.party_count());
                for (std::size_t i = 0; i < keep.size(); ++i) os[keep[i]] = kept_out[i];
                std::int64_t rest = ci;
                for (int k = static_cast<int>(comp.size()) - 1; k >= 0; --k) {
                    os[comp[k]] = static_cast<int>(rest % s.outputs_of(comp[k]));
                    rest /= s.outputs_of(comp[k]);
                }
                sum += b.prob(xs, os);
            }
            out[ku * kept_scenario.output_tuple_count() + ko] = sum;
        }
    }
    return out;
}

Scenario sub_scenario(const Scenario& s, const std::vector<int>& keep) {
    std::vector<int> ins, outs;
    for (int p : keep) {
        ins.push_back(s.inputs_of(p));
        outs.push_back(s.outputs_of(p));
    }
    return Scenario(ins, outs);
}

} // namespace

Behavior marginal(const Behavior& b, const std::vector<int>& keep, const Tuple& others_inputs) {
    const Scenario& s = b.scenario();
    if (keep.empty()) throw DomainError("marginal needs a nonempty party subset");
    if (!std::is_sorted(keep.begin(), keep.end()) ||
        std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw DomainError("marginal party subset must be strictly ascending");
    if (keep.front() < 0 || keep.back() >= s.party_count())
        throw DomainError("marginal party subset out of range");

    const std::vector<int> comp = complement_of(s, keep);
    if (others_inputs.size() != comp.size())
        throw DomainError("marginal needs one input per discarded party");
    for (std::size_t i = 0; i < comp.size(); ++i)
        if (others_inputs[i] < 0 || others_inputs[i] >= s.inputs_of(comp[i]))
            throw DomainError("marginal input assignment out of range");

    Scenario kept = sub_scenario(s, keep);
    std::vector<Rat> table = marginal_table(b, keep, comp, others_inputs, kept);
    return Behavior(std::move(kept), std::move(table));
}

NoSignallingReport check_no_signalling(const Behavior& b) {
    const Scenario& s = b.scenario();
    const int n = s.party_count();
    NoSignallingReport report;

    // Every proper nonempty subset against every complement input assignment.
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> keep;
        for (int p = 0; p < n; ++p)
            if (mask & (1u << p)) keep.push_back(p);
        const std::vector<int> comp = complement_of(s, keep);
        const Scenario kept = sub_scenario(s, keep);

        const std::vector<Tuple> comp_assignments = assignments(s, comp);
        if (comp_assignments.size() <= 1) continue;

        const std::vector<Rat> ref = marginal_table(b, keep, comp, comp_assignments[0], kept);
        for (std::size_t ci = 1; ci < comp_assignments.size(); ++ci) {
            const std::vector<Rat> alt =
                marginal_table(b, keep, comp, comp_assignments[ci], kept);
            for (std::int64_t cell = 0; cell < kept.cell_count(); ++cell) {
                if (alt[cell] == ref[cell]) continue;
                NsViolation v;
                v.subset = keep;
                v.subset_inputs = kept.input_tuple(cell / kept.output_tuple_count());
                v.subset_outputs = kept.output_tuple(cell % kept.output_tuple_count());
                v.complement_inputs_ref = comp_assignments[0];
                v.complement_inputs_alt = comp_assignments[ci];
                v.prob_ref = ref[cell];
                v.prob_alt = alt[cell];
                v.discrepancy = alt[cell] - ref[cell];
                report.violations.push_back(std::move(v));
            }
        }
    }
    report.is_no_signalling = report.violations.empty();
    return report;
}

// --- Serialization ---

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<int> split_ints(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw DomainError("empty entry in integer list");
            if (cur.size() > 9) throw DomainError("integer entry out of range: " + cur);
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            cur += ch;
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            throw DomainError(std::string("unexpected character in integer list: ") + ch);
        }
    }
    return out;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

std::string to_text(const Behavior& b) {
    const Scenario& s = b.scenario();
    std::ostringstream os;
    os << "scenario: n=" << s.party_count() << " inputs=" << join_ints(s.inputs_per_party())
       << " outputs=" << join_ints(s.outputs_per_party()) << "\n";
    for (std::int64_t u = 0; u < s.input_tuple_count(); ++u)
        for (std::int64_t o = 0; o < s.output_tuple_count(); ++o) {
            const Rat& p = b.table()[u * s.output_tuple_count() + o];
            if (p == 0) continue;
            os << join_ints(s.input_tuple(u)) << " | " << join_ints(s.output_tuple(o)) << " : "
               << rat_to_string(p) << "\n";
        }
    return os.str();
}

Behavior behavior_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_behavior(in);
}

Behavior read_behavior(std::istream& in) {
    std::string line;
    std::optional<Scenario> scenario;
    std::vector<Rat> table;
    std::vector<bool> seen;

    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;

        if (!scenario) {
            if (line.rfind("scenario:", 0) != 0)
                throw DomainError("behavior text must start with a scenario header");
            const std::string rest = line.substr(9);
            std::istringstream hs(rest);
            std::string field;
            int n = -1;
            std::vector<int> ins, outs;
            while (hs >> field) {
                if (field.rfind("n=", 0) == 0) {
                    const std::vector<int> parsed = split_ints(field.substr(2));
                    if (parsed.size() != 1) throw DomainError("malformed party count: " + field);
                    n = parsed[0];
                } else if (field.rfind("inputs=", 0) == 0)
                    ins = split_ints(field.substr(7));
                else if (field.rfind("outputs=", 0) == 0)
                    outs = split_ints(field.substr(8));
                else
                    throw DomainError("unknown scenario header field: " + field);
            }
            if (n < 1 || static_cast<int>(ins.size()) != n || static_cast<int>(outs.size()) != n)
                throw DomainError("malformed scenario header: " + line);
            scenario = Scenario(ins, outs);
            table.assign(scenario->cell_count(), Rat(0));
            seen.assign(scenario->cell_count(), false);
            continue;
        }

        const auto bar = line.find('|');
        const auto colon = line.rfind(':');
        if (bar == std::string::npos || colon == std::string::npos || colon < bar)
            throw DomainError("malformed behavior cell line: " + line);
        const Tuple xs = split_ints(strip(line.substr(0, bar)));
        const Tuple os = split_ints(strip(line.substr(bar + 1, colon - bar - 1)));
        const Rat p = parse_rat(strip(line.substr(colon + 1)));
        const std::int64_t cell = scenario->cell_index(xs, os);
        if (seen[cell]) throw DomainError("duplicate behavior cell: " + line);
        seen[cell] = true;
        table[cell] = p;
    }
    if (!scenario) throw DomainError("empty behavior text");
    return Behavior(*scenario, std::move(table)); // constructor enforces normalization
}

} // namespace prbox
