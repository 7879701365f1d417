#pragma once

#include <stdexcept>
#include <string>

namespace phdiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PHDIV_DEFINE_ERROR(Name)                  \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    }

// geometry
PHDIV_DEFINE_ERROR(ZeroVectorError);
PHDIV_DEFINE_ERROR(DimensionMismatch);
PHDIV_DEFINE_ERROR(NegativeDistance);
PHDIV_DEFINE_ERROR(NonFinite);
PHDIV_DEFINE_ERROR(AsymmetryError);
PHDIV_DEFINE_ERROR(NonzeroDiagonal);
PHDIV_DEFINE_ERROR(InvalidInput);

// persistence
PHDIV_DEFINE_ERROR(FiltrationDimError);
PHDIV_DEFINE_ERROR(SizeLimit);

// diversity / projection
PHDIV_DEFINE_ERROR(NegativeOrder);
PHDIV_DEFINE_ERROR(WindowOrderError);
PHDIV_DEFINE_ERROR(EigenFailure);

// selection
PHDIV_DEFINE_ERROR(TooFewPoints);
PHDIV_DEFINE_ERROR(InsufficientClassMembers);

#undef PHDIV_DEFINE_ERROR

}  // namespace phdiv
