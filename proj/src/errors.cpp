#include "pbm/errors.hpp"

namespace pbm {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::CycleDetected: return "CycleDetected";
        case Errc::NotAnIdeal: return "NotAnIdeal";
        case Errc::SpaceTooLarge: return "SpaceTooLarge";
        case Errc::NotFullCount: return "NotFullCount";
        case Errc::NotAChain: return "NotAChain";
        case Errc::NonUnitBlocks: return "NonUnitBlocks";
        case Errc::NonUniformBlocks: return "NonUniformBlocks";
        case Errc::DivisibilityFails: return "DivisibilityFails";
        case Errc::NotLinear: return "NotLinear";
        case Errc::SingletonCode: return "SingletonCode";
        case Errc::BadCardinality: return "BadCardinality";
        case Errc::Overflow: return "Overflow";
        case Errc::Parse: return "Parse";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "count addition overflows 64 bits");
    return r;
}

Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "count product overflows 64 bits");
    return r;
}

Count checked_sub(Count a, Count b) {
    if (b > a) throw Error(Errc::Overflow, "count subtraction underflows");
    return a - b;
}

Count checked_pow(Count base, unsigned exponent) {
    Count r = 1;
    for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace pbm
