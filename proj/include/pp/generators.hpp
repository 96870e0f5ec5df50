#pragma once

#include <functional>

#include "pp/protocol.hpp"

namespace pp {

// The flock-of-birds family: unary counting up to 2^k with 2^k+1 states.
Protocol flock_unary(unsigned k);

// The succinct power-of-two variant: states {0} + powers of two up to 2^k.
Protocol flock_binary(unsigned k);

struct EnumOptions {
    bool deterministic = true;  // one transition per pair
    unsigned max_states = 3;
};

// Yields all leaderless single-variable protocols with exactly n states, up to
// state renamings fixing the input state. Emitted protocols are normalized.
// The callback returns false to stop enumeration early.
void enumerate_protocols(unsigned n, const EnumOptions& opts,
                         const std::function<bool(const Protocol&)>& yield);

}  // namespace pp
