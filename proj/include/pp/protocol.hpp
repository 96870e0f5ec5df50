#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pp/basics.hpp"

namespace pp {

// A configuration is a multiset over the protocol's states, stored densely by
// state index. Counts are arbitrary precision. Vector arithmetic may produce
// negative entries transiently; callers check non-negativity where required.
struct Config {
    std::vector<Int> counts;

    Config() = default;
    explicit Config(std::size_t n) : counts(n) {}

    std::size_t dim() const { return counts.size(); }
    Int& operator[](std::size_t q) { return counts[q]; }
    const Int& operator[](std::size_t q) const { return counts[q]; }

    Int size() const;
    bool nonnegative() const;
    bool is_zero() const;
    std::vector<int> support() const;

    friend bool operator==(const Config&, const Config&) = default;
    friend auto operator<=>(const Config& a, const Config& b) {
        return a.counts <=> b.counts;
    }
};

Config operator+(const Config& a, const Config& b);
Config operator-(const Config& a, const Config& b);
Config operator*(const Int& k, const Config& c);
Config& operator+=(Config& a, const Config& b);

// a(q) <= b(q) for all q
bool leq(const Config& a, const Config& b);

Config unit_config(std::size_t n, int state, const Int& count = 1);

// A transition maps an unordered pair of states to an unordered pair.
// Both pairs are kept normalized (p <= q, r <= s).
struct Transition {
    int p, q;  // left pair
    int r, s;  // right pair

    Transition() : p(0), q(0), r(0), s(0) {}
    Transition(int p_, int q_, int r_, int s_);

    bool is_identity() const { return p == r && q == s; }

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct Protocol {
    std::vector<std::string> states;
    std::vector<Transition> transitions;  // sorted, duplicate-free
    Config leaders;
    int input_state = 0;  // target of the single input variable x
    std::vector<int> output;  // 0/1 per state

    std::size_t state_count() const { return states.size(); }
    bool leaderless() const { return leaders.is_zero(); }
    void sort_transitions();
    int transition_index(const Transition& t) const;  // -1 if absent
    bool pair_complete() const;

    friend bool operator==(const Protocol&, const Protocol&) = default;
};

struct NormalizeResult {
    Protocol protocol;
    std::vector<std::string> removed_states;
};

// Completes missing pair transitions with identities; optionally removes
// states not coverable from the input together with their transitions.
NormalizeResult normalize_protocol(const Protocol& p, bool strip_uncoverable = false);

// leaders + sum of input agents. Throws TooSmall if the result has size < 2.
Config initial_configuration(const Protocol& p, const Nat& input);

// 0, 1, or -1 for undefined.
int output_of(const Protocol& p, const Config& c);

struct CoverableStates {
    std::vector<char> states;  // indicator per state
    bool exact;                // false for the leader lower approximation
};

CoverableStates coverable_states(const Protocol& p);

}  // namespace pp
