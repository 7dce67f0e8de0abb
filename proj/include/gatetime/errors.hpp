#pragma once

#include <stdexcept>
#include <string>

namespace gatetime {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// linalg
struct NotHermitian : Error { using Error::Error; };

// gates
struct NotUnitary : Error { using Error::Error; };
struct NotSpecial : Error { using Error::Error; };
struct UnknownGate : Error { using Error::Error; };

// bell
struct NumericalInconsistency : Error { using Error::Error; };

// weyl
struct RootsOutOfRange : Error { using Error::Error; };
struct ComplexRoots : Error { using Error::Error; };
struct AmbiguousClass : Error { using Error::Error; };
struct InvalidInvariants : Error { using Error::Error; };

// kak
struct DegenerateSpectrum : Error { using Error::Error; };
struct ReconstructionFailed : Error { using Error::Error; };
struct MoveSetExhausted : Error { using Error::Error; };

// pulse
struct SynthesisFailed : Error { using Error::Error; };

// oracle
struct NoCandidateMatches : Error { using Error::Error; };

// file formats
struct FormatError : Error { using Error::Error; };

} // namespace gatetime
