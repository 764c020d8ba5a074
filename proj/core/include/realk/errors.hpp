#pragma once

#include <stdexcept>
#include <string>

// Domain error hierarchy. Every failure mode a caller can act on gets its
// own type; everything derives from Error so the CLI can map "domain error"
// to a single exit code.

namespace realk {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// intlinalg
struct ContainmentViolation : Error { using Error::Error; };

// groups
struct TooLarge : Error { using Error::Error; };

// chartab
struct FormatError : Error { using Error::Error; };
struct OrthogonalityViolation : Error { using Error::Error; };
struct DegenerateEigenspaces : Error { using Error::Error; };

// realrep
struct NonIntegralIndicator : Error { using Error::Error; };
struct PairingFailure : Error { using Error::Error; };
struct OddQuaternionicDim : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotAssociative : Error { using Error::Error; };
struct NotSemisimple : Error { using Error::Error; };
struct InfiniteUnsupported : Error { using Error::Error; };

// kcalc
struct PeriodMismatch : Error { using Error::Error; };
struct TorsionUnsupported : Error { using Error::Error; };

// realspace
struct NotFree : Error { using Error::Error; };
struct MixedInvolutionUnsupported : Error { using Error::Error; };

// weyl
struct ZeroParameter : Error { using Error::Error; };

// catalog
struct PartitionViolation : Error { using Error::Error; };
struct MismatchReport : Error { using Error::Error; };

}  // namespace realk
