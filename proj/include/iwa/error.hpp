#pragma once

#include <stdexcept>
#include <string>

namespace iwa {

enum class ErrorKind {
    InvalidInput,
    SupersingularInput,
    OrdinaryInput,
    BadReduction,
    RamifiedPrime,
    RamifiedBadPrime,
    RamifiedTwist,
    NonSplitPrime,
    SignMismatch,
    ResourceLimit,
    EigenspaceNotRankOne,
    NormalizationAmbiguous,
    NoNonvanishingTwist,
    PrecisionExhausted,
    NormCompatibilityFailed,
    NonRationalResult,
    LoadFailure,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace iwa
