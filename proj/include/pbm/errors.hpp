#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pbm {

enum class Errc {
    DimensionMismatch,
    IndexOutOfRange,
    OutOfRange,
    CycleDetected,
    NotAnIdeal,
    SpaceTooLarge,
    NotFullCount,
    NotAChain,
    NonUnitBlocks,
    NonUniformBlocks,
    DivisibilityFails,
    NotLinear,
    SingletonCode,
    BadCardinality,
    Overflow,
    Parse,
    InvalidArgument,
};

const char* to_string(Errc code) noexcept;

/// Every library failure is reported as an Error carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Exact counts. Arithmetic on Count goes through the checked helpers below;
/// an overflow throws Errc::Overflow instead of wrapping.
using Count = std::uint64_t;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
Count checked_sub(Count a, Count b);
Count checked_pow(Count base, unsigned exponent);

}  // namespace pbm
