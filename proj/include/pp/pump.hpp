#pragma once

#include <map>
#include <optional>
#include <string>

#include "pp/dioph.hpp"
#include "pp/reach.hpp"

namespace pp {

enum class CertVariant { withLeaders, leaderless };

// A replayable pumping certificate. A valid certificate proves that any
// threshold eta the protocol computes satisfies eta <= a.
//
// withLeaders:  IC(a) ->* E (witness "toE"), E + N^S stable,
//               E + b*x ->* E + D_b (witness "pump"), D_b in N^S.
// leaderless:   IC(a) ->* D ->* E (witnesses "toD", "DtoE"), E + N^S stable,
//               IC(b) => D_b via pi, D_b in N^S, D 2|pi|-saturated.
struct Certificate {
    CertVariant variant = CertVariant::leaderless;
    Nat a;
    Nat b;
    std::vector<char> S;  // indicator per state
    Config E;
    Config D_b;
    // leaderless only
    Config D;
    TransitionMultiset pi;
    std::map<std::string, WitnessPtr> witnesses;
};

struct CheckResult {
    bool accepted = false;
    std::string condition;  // first violated condition on rejection
};

// Independent verifier; shares no state with the builders.
CheckResult check_certificate(const Protocol& p, const Certificate& cert,
                              const Limits& limits = {});

// Theoretical constants. beta and theta are powers of two whose exponents
// grow factorially, so they are kept as exponents and only materialized on
// demand.
struct Constants {
    unsigned n = 0;
    std::size_t transition_count = 0;
    Nat xi;              // 2(2|T|+1)^n
    Nat beta_exponent;   // beta = 2^(2(2n+1)!+1)
    Nat theta_exponent;  // theta = 2^((2n+2)!)
    bool final_bound_ok = false;  // xi * n * beta * 3^n <= theta

    Nat beta() const;   // throws LimitExceeded when too large to materialize
    Nat theta() const;
    Nat final_bound() const;  // xi * n * beta * 3^n
};

Constants theoretical_constants(const Protocol& p);

// The final-bound inequality for n states and the given transition count,
// decided exactly on exponents (no materialization).
bool final_bound_holds(unsigned n, std::size_t transition_count);

// Worst-case transition count of an n-state protocol: every pair may map to
// every pair.
std::size_t max_transition_count(unsigned n);

// A transition with both left states in supp and a right state outside supp.
// Deterministic: first in canonical order. Throws NoEscape if none exists.
Transition find_escaping_transition(const Protocol& p, const std::vector<char>& supp);

struct Saturation {
    unsigned j = 0;                   // escape steps; support grows each step
    std::vector<Transition> sigma;    // |sigma| = (3^j - 1)/2
    Config result;                    // replay(IC(3^j), sigma), 1-saturated
};

// Inductive sigma' = sigma^3 t construction over a growing support.
// Requires a leaderless protocol whose states are all coverable.
Saturation saturation_sequence(const Protocol& p);

struct ChainEntry {
    Config c;          // stable configuration reached from IC(i)
    WitnessPtr step;   // previous c + x ->* this c (null for the first entry)
    WitnessPtr full;   // IC(i) ->* c
};

// Entries for i in [2, i_max]; entry k corresponds to input k+2.
std::vector<ChainEntry> stabilization_chain(const Protocol& p, long i_max,
                                            const Limits& limits = {});

// Dickson-style search over the stabilization chain for C_k <= C_l sharing a
// stable ideal with C_l - C_k in N^S. nullopt when no pair exists below i_max.
std::optional<Certificate> pump_search_leaders(const Protocol& p, long i_max,
                                               const Limits& limits = {});

struct Concentration {
    Ideal ideal;     // stable ideal containing E
    Config E;        // k * E(off S) <= |E|
    WitnessPtr witness;  // D ->* E
};

// Finds a stable configuration reachable from D that is (1/k)-concentrated in
// the free states of some ideal of the stable-set decomposition. witness_to_D
// must replay IC(|D|) to D.
Concentration concentrate(const Protocol& p, const Nat& k, const Config& D,
                          const WitnessPtr& witness_to_D, const Limits& limits = {});

// Full leaderless pipeline: saturation, scaling via Repeat witnesses,
// concentration at small scale, basis extraction for the pump part.
Certificate build_leaderless_certificate(const Protocol& p, const Limits& limits = {});

// Parikh image of everything a witness fires; Repeat bodies are weighted by
// their count.
TransitionMultiset witness_parikh(const Protocol& p, const WitnessPtr& w);

}  // namespace pp
