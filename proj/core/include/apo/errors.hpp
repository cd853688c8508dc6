#pragma once

#include <stdexcept>

namespace apo {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeExceeded : Error { using Error::Error; };
struct SingularNodes : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };
struct NotDegenerate : Error { using Error::Error; };
struct ExtrapolationUnstable : Error { using Error::Error; };
struct MaskViolation : Error { using Error::Error; };
struct NotEvenCase : Error { using Error::Error; };
struct NonRealAmplitude : Error { using Error::Error; };

}  // namespace apo
