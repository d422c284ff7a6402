#pragma once

#include <stdexcept>
#include <string>

namespace ambig {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define AMBIG_DEFINE_ERROR(Name)                  \
    struct Name : Error {                         \
        explicit Name(const std::string& what)    \
            : Error(#Name ": " + what) {}         \
    }

// finite abelian groups
AMBIG_DEFINE_ERROR(InfiniteQuotient);
AMBIG_DEFINE_ERROR(InvalidElement);
AMBIG_DEFINE_ERROR(IllFormedHom);
AMBIG_DEFINE_ERROR(NotExact);
AMBIG_DEFINE_ERROR(NotCommutative);

// quadratic fields
AMBIG_DEFINE_ERROR(NotFundamental);
AMBIG_DEFINE_ERROR(NotPrime);
AMBIG_DEFINE_ERROR(DiscriminantMismatch);
AMBIG_DEFINE_ERROR(FactorizationTooLarge);
AMBIG_DEFINE_ERROR(NormNotUnit);
AMBIG_DEFINE_ERROR(NotInvariant);

// forms, units, ambiguity
AMBIG_DEFINE_ERROR(ImprimitiveForm);
AMBIG_DEFINE_ERROR(NegativeDiscriminant);
AMBIG_DEFINE_ERROR(InvalidPlace);
AMBIG_DEFINE_ERROR(NotAmbiguous);
AMBIG_DEFINE_ERROR(NonIntegralPrediction);

#undef AMBIG_DEFINE_ERROR

}  // namespace ambig
