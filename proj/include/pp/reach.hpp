#pragma once

#include <map>
#include <optional>

#include "pp/semantics.hpp"

namespace pp {

// Exact reachability graph at fixed population size. Node counts fit in
// machine integers because transitions preserve the total size.
struct ReachGraph {
    std::vector<std::vector<long long>> nodes;  // discovery (BFS) order
    std::vector<std::vector<std::pair<int, int>>> edges;  // node -> (transition idx, target)
    std::map<std::vector<long long>, int> index;
    int root = 0;
    bool complete = true;

    int find(const std::vector<long long>& key) const {
        auto it = index.find(key);
        return it == index.end() ? -1 : it->second;
    }
};

std::vector<long long> to_key(const Config& c);
Config from_key(const std::vector<long long>& key);

ReachGraph reachable_configs(const Protocol& p, const Config& c, const Limits& limits = {});

// Per-node stability analysis over a complete fixed-size graph.
struct GraphAnalysis {
    std::vector<char> stable;           // b-stable nodes
    std::vector<char> can_reach_stable; // nodes that can reach a b-stable node
};

GraphAnalysis analyze_stability(const Protocol& p, const ReachGraph& g, int b);

bool is_stable(const Protocol& p, const Config& c, int b, const Limits& limits = {});

// Minimal basis of an upward-closed set of N^Q, as a pairwise-incomparable
// antichain of configurations.
using Antichain = std::vector<Config>;

// Minimal basis of Pre*(up(targets)): the configurations from which some
// element above a target is coverable. Runs over N^Q; the size >= 2
// constraint on configurations is applied only at membership queries.
Antichain backward_coverability(const Protocol& p, const Antichain& targets,
                                const Limits& limits = {});

bool in_upward_closure(const Config& c, const Antichain& basis);

enum class IdealForm { paperCylinder, downCylinder };

// (B, S): paperCylinder denotes B + N^S, downCylinder denotes the set of C
// with C(q) <= B(q) for q outside S. In canonical form B is zero on S.
struct Ideal {
    IdealForm form = IdealForm::downCylinder;
    Config bound;
    std::vector<char> free;  // indicator of S

    friend bool operator==(const Ideal&, const Ideal&) = default;
};

bool ideal_member(const Config& c, const Ideal& i);

struct IdealDecomposition {
    std::vector<Ideal> ideals;
    char polarity = 'S';  // '0', '1', or 'S'

    bool member(const Config& c) const;
    Nat norm() const;  // max infinity-norm over bounds
};

IdealDecomposition stable_set_ideals(const Protocol& p, char which, const Limits& limits = {});

struct Verdict {
    bool accept = false;
    // counterexample on rejection
    Nat input;
    Config config;
    int wanted_output = -1;
};

// Exact threshold verification over the input range [2, max_input]: every
// configuration reachable from IC(i) must be able to reach the stable set
// for output [i >= eta].
Verdict verify_threshold(const Protocol& p, const Nat& eta, long max_input,
                         const Limits& limits = {});

}  // namespace pp
