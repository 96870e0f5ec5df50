#include "pp/basics.hpp"

namespace pp {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotEnabled: return "NotEnabled";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NegativeCount: return "NegativeCount";
        case ErrorCode::NotSaturated: return "NotSaturated";
        case ErrorCode::RepeatMismatch: return "RepeatMismatch";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::InputStateRemoved: return "InputStateRemoved";
        case ErrorCode::NoEscape: return "NoEscape";
        case ErrorCode::NoStableReached: return "NoStableReached";
        case ErrorCode::NotASolution: return "NotASolution";
        case ErrorCode::NoDecomposition: return "NoDecomposition";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

bool le_pow2(const Nat& value, const Nat& exponent) {
    if (value <= 0) return true;
    if (exponent < 0) return false;
    // bits = msb index + 1; value < 2^bits and value >= 2^(bits-1).
    const Nat bits = static_cast<unsigned long>(boost::multiprecision::msb(value)) + 1;
    if (bits <= exponent) return true;
    if (bits == exponent + 1) {
        // value <= 2^exponent iff value is exactly 2^exponent.
        if (exponent > 1'000'000'000) return false;  // a power of two this large never arises here
        Nat p = pow_nat(2, exponent.convert_to<unsigned>());
        return value == p;
    }
    return false;
}

Nat factorial(unsigned n) {
    Nat r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Nat pow_nat(const Nat& base, unsigned exp) {
    Nat r = 1;
    Nat b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

}  // namespace pp
