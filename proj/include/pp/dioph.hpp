#pragma once

#include "pp/semantics.hpp"

namespace pp {

// Homogeneous system A*y >= 0 over natural-valued y.
struct DiophSystem {
    std::vector<std::vector<Int>> rows;  // one row per inequality
    std::size_t vars = 0;

    bool satisfied(const std::vector<Nat>& m) const;
};

struct HilbertBasis {
    std::vector<std::vector<Nat>> elements;  // lexicographically sorted
};

// Complete set of minimal nonzero solutions, via level-wise completion with
// dominance pruning. Deterministic lexicographic output order.
HilbertBasis hilbert_basis(const DiophSystem& sys, const Limits& limits = {});

// (1 + max row absolute sum)^e; 1 for the empty system.
Nat pottier_bound(const DiophSystem& sys);

// One row per non-input state, one column per transition, entry delta(t)(q).
DiophSystem realisable_system(const Protocol& p);

// Pottier constant xi = 2(2|T|+1)^|Q|, or the deterministic-protocol variant
// 2(|Q|+2)^|Q|.
Nat pottier_constant(const Protocol& p, bool deterministic_variant = false);

struct RealisableBasisElement {
    TransitionMultiset pi;
    Nat input_size;  // minimal i >= 2 with IC(i) + delta(pi) >= 0
    Config result;   // IC(i) + delta(pi)
};

std::vector<RealisableBasisElement> realisable_basis(const Protocol& p, const Limits& limits = {});

// Multiplicities over basis elements summing to m. Throws NotASolution /
// NoDecomposition (the latter signals a broken basis).
std::vector<Nat> decompose_solution(const std::vector<Nat>& m, const DiophSystem& sys,
                                    const HilbertBasis& basis);

struct AllEmptyResult {
    Nat input_size;           // j <= xi
    TransitionMultiset theta; // |theta| <= xi/2
    Config reached;           // in N^S, with IC(j) => reached via theta
};

// Extracts a small potential step into N^S from a (1/xi)-concentrated
// potential reach, by decomposing pi into realisable-basis parts and picking
// one with positive input and no agents outside S.
AllEmptyResult allempty_extract(const Protocol& p, const Nat& input, const TransitionMultiset& pi,
                                const std::vector<char>& S, const Limits& limits = {});

}  // namespace pp
