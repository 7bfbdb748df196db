#include "iwa/error.hpp"

namespace iwa {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SupersingularInput: return "SupersingularInput";
    case ErrorKind::OrdinaryInput: return "OrdinaryInput";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::RamifiedPrime: return "RamifiedPrime";
    case ErrorKind::RamifiedBadPrime: return "RamifiedBadPrime";
    case ErrorKind::RamifiedTwist: return "RamifiedTwist";
    case ErrorKind::NonSplitPrime: return "NonSplitPrime";
    case ErrorKind::SignMismatch: return "SignMismatch";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::EigenspaceNotRankOne: return "EigenspaceNotRankOne";
    case ErrorKind::NormalizationAmbiguous: return "NormalizationAmbiguous";
    case ErrorKind::NoNonvanishingTwist: return "NoNonvanishingTwist";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NormCompatibilityFailed: return "NormCompatibilityFailed";
    case ErrorKind::NonRationalResult: return "NonRationalResult";
    case ErrorKind::LoadFailure: return "LoadFailure";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace iwa
