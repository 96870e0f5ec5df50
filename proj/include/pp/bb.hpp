#pragma once

#include "pp/generators.hpp"
#include "pp/pump.hpp"

namespace pp {

enum class ProtocolClass { ComputesThreshold, NonThreshold, DoesNotCompute, Undecided };

struct ClassifyResult {
    ProtocolClass verdict = ProtocolClass::Undecided;
    Nat eta;             // threshold, when established
    Nat bound_a;         // certificate-accepted upper bound, 0 if unavailable
    bool fully_certified = false;  // exact checks covered all of [2, bound_a]
};

// Normalizes (stripping uncoverable states), tries to certify an upper bound,
// then decides per-input behaviour exactly over [2, min(bound, cutoff)].
// A "computes x >= eta" verdict with fully_certified unset means the decided
// inputs match a threshold and the bound exists, but the scan stopped short
// of it.
ClassifyResult classify_protocol(const Protocol& p, const Limits& limits = {},
                                 long cutoff = 12);

struct BBEntry {
    Protocol protocol;  // normalized form that was analysed
    ClassifyResult result;
};

struct BBReport {
    unsigned n = 0;
    std::optional<std::pair<Protocol, Nat>> best;  // largest certified threshold
    std::vector<BBEntry> table;
    std::size_t computes = 0;
    std::size_t non_threshold = 0;
    std::size_t does_not_compute = 0;
    std::size_t undecided = 0;
};

// Exhaustive over the canonical enumeration; verdicts that are not fully
// certified are demoted to Undecided.
BBReport busy_beaver_search(unsigned n, const Limits& limits = {}, bool deterministic = true);

}  // namespace pp
