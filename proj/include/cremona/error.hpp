#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

// Base class for every failure the library reports deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CREMONA_DEFINE_ERROR(NAME)                                            \
    struct NAME : Error {                                                     \
        using Error::Error;                                                   \
    }

// field construction / arithmetic
CREMONA_DEFINE_ERROR(NonPrimeError);
CREMONA_DEFINE_ERROR(ReducibleModulusError);
CREMONA_DEFINE_ERROR(UnsupportedSizeError);
CREMONA_DEFINE_ERROR(DivisionByZeroError);
CREMONA_DEFINE_ERROR(DescriptorMismatchError);
CREMONA_DEFINE_ERROR(WrongCharacteristicError);

// polynomials
CREMONA_DEFINE_ERROR(UnknownVariableError);
CREMONA_DEFINE_ERROR(NotUnivariateError);
CREMONA_DEFINE_ERROR(ParseError);

// linear algebra over fields
CREMONA_DEFINE_ERROR(SingularMatrixError);
CREMONA_DEFINE_ERROR(NotUnipotentError);
CREMONA_DEFINE_ERROR(BudgetExceededError);

// birational maps
CREMONA_DEFINE_ERROR(DegenerateFiberError);
CREMONA_DEFINE_ERROR(WrongBaseError);
CREMONA_DEFINE_ERROR(NotSquarefreeError);
CREMONA_DEFINE_ERROR(NotHomogeneousError);
CREMONA_DEFINE_ERROR(NonInvertibleLinearPartError);
CREMONA_DEFINE_ERROR(NotBinaryFormError);

// Picard lattice
CREMONA_DEFINE_ERROR(DimensionMismatchError);
CREMONA_DEFINE_ERROR(WrongNError);
CREMONA_DEFINE_ERROR(UnsupportedNError);
CREMONA_DEFINE_ERROR(PreconditionError);

// surfaces
CREMONA_DEFINE_ERROR(NotOnSurfaceError);
CREMONA_DEFINE_ERROR(NoUnitChartError);
CREMONA_DEFINE_ERROR(NoAlphaInFieldError);
CREMONA_DEFINE_ERROR(WrongShapeError);

// claim engine
CREMONA_DEFINE_ERROR(UnknownClaimError);
CREMONA_DEFINE_ERROR(BadParameterError);

#undef CREMONA_DEFINE_ERROR

} // namespace cremona
