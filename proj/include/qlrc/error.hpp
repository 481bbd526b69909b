#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlrc {

enum class ErrorCode {
    InvalidArgument,
    NotPrime,
    ReducibleModulus,
    FieldTooLarge,
    ZeroInverse,
    FieldMismatch,
    DivisionByZeroPoly,
    DuplicateNode,
    NotSubgroup,
    NotSubspace,
    NotSubfield,
    DomainNotClosed,
    NotRegularOrbit,
    DegenerateSet,
    BadDimension,
    LocalityTooSmall,
    RankDeficient,
    OrthogonalityFailure,
    LengthMismatch,
    BlockIncomplete,
    NotAglProvenance,
    TooLarge,
    NotRegular,
    NotSymmetricGeneratingSet,
    NoConvergence,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qlrc
