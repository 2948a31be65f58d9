#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmk {

enum class ErrorCode {
    // input / gcm
    InvalidInput,
    DiagonalNotTwo,
    PositiveOffDiagonal,
    AsymmetricZero,
    OneSidedEdge,
    NotAdmissible,
    ZeroVector,
    NotSymmetrizable,
    IndexOutOfRange,
    // root systems and characters
    NotFiniteType,
    NotDominant,
    NegativeMultiplicity,
    NotWeylInvariant,
    // grading
    UnsupportedLength,
    CriterionNotSatisfied,
    // lie engine
    OutOfTruncation,
    SurjectivityFailure,
    UnsupportedType,
    // koszul
    DimensionOverflow,
    NotContained,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace kmk
