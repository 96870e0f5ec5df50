#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "pp/protocol.hpp"

namespace pp {

// Fires t at c. Throws NotEnabled if c does not cover t's left pair.
Config fire(const Protocol& p, const Config& c, const Transition& t);

bool enabled(const Config& c, const Transition& t);

// Net per-state agent change; entries of a single transition lie in [-2, 2]
// and every displacement sums to zero.
using Displacement = std::vector<Int>;

Displacement displacement(const Protocol& p, const Transition& t);

// Parikh image of a transition sequence, stored densely over the protocol's
// canonical transition order.
struct TransitionMultiset {
    std::vector<Nat> mult;

    TransitionMultiset() = default;
    explicit TransitionMultiset(std::size_t t_count) : mult(t_count) {}

    Nat size() const;
    bool empty() const { return size() == 0; }

    friend bool operator==(const TransitionMultiset&, const TransitionMultiset&) = default;
};

TransitionMultiset parikh(const Protocol& p, const std::vector<Transition>& sigma);

Displacement displacement(const Protocol& p, const TransitionMultiset& pi);

// The potential step C => C + delta(pi). Throws NegativeCount if some
// coordinate of the result is negative; intermediate feasibility is not
// checked, by definition of the potential step.
Config apply_parikh(const Protocol& p, const Config& c, const TransitionMultiset& pi);

// Turns a potential step into an actual execution when c is 2|pi|-saturated.
// Throws NotSaturated otherwise; no scheduling search is attempted.
std::vector<Transition> realize(const Protocol& p, const Config& c, const TransitionMultiset& pi);

// Execution witnesses: plain step lists, concatenation, and a Repeat schema
// whose soundness rests on the monotonicity of executions. Repeat(body, m,
// base, consume, produce) maps base + m*consume to base + m*produce provided
// replay(base + consume, body) = base + produce.
struct Witness;
using WitnessPtr = std::shared_ptr<const Witness>;

struct StepsWitness {
    std::vector<Transition> steps;
};

struct ConcatWitness {
    std::vector<WitnessPtr> parts;
};

struct RepeatWitness {
    WitnessPtr body;
    Nat count;
    Config base;
    Config consume;
    Config produce;
};

struct Witness {
    std::variant<StepsWitness, ConcatWitness, RepeatWitness> node;
};

WitnessPtr make_steps(std::vector<Transition> steps);
WitnessPtr make_concat(std::vector<WitnessPtr> parts);
WitnessPtr make_repeat(WitnessPtr body, Nat count, Config base, Config consume, Config produce);

Config replay(const Protocol& p, const Config& c, const Witness& w);
Config replay(const Protocol& p, const Config& c, const WitnessPtr& w);

}  // namespace pp
