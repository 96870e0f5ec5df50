#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace pp {

// Arbitrary-precision integers. Nat is used where values are non-negative
// by invariant; the underlying type is the same signed cpp_int so that
// intermediate arithmetic (displacements, subtractions) stays exact.
using Int = boost::multiprecision::cpp_int;
using Nat = boost::multiprecision::cpp_int;

enum class ErrorCode {
    NotEnabled,
    TooSmall,
    NegativeCount,
    NotSaturated,
    RepeatMismatch,
    LimitExceeded,
    InputStateRemoved,
    NoEscape,
    NoStableReached,
    NotASolution,
    NoDecomposition,
    PreconditionFailed,
    NotFound,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Exploration limits shared by the search-based operations. Hitting a limit
// raises Error(LimitExceeded) unless the operation documents a partial result.
struct Limits {
    std::size_t max_nodes = 2'000'000;     // BFS node cap
    std::size_t max_antichain = 100'000;   // backward coverability cap
    std::size_t max_frontier = 5'000'000;  // Hilbert completion cap
    long max_input = 1'000'000;            // input range cap
};

// value <= 2^exponent, without materialising 2^exponent.
bool le_pow2(const Nat& value, const Nat& exponent);

Nat factorial(unsigned n);
Nat pow_nat(const Nat& base, unsigned exp);

}  // namespace pp
