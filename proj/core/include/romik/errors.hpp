#pragma once

#include <stdexcept>
#include <string>

namespace romik {

/// Base class for every failure that stems from the mathematical domain
/// (bad input value, inapplicable rewrite, exhausted prefix, ...). The CLI
/// maps these to exit code 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

#define ROMIK_DECLARE_ERROR(Name)                              \
    class Name : public DomainError {                          \
    public:                                                    \
        explicit Name(const std::string& what);                \
    }

ROMIK_DECLARE_ERROR(ZeroDenominator);
ROMIK_DECLARE_ERROR(PoleError);
ROMIK_DECLARE_ERROR(MixedDiscriminant);
ROMIK_DECLARE_ERROR(OutOfDomain);
ROMIK_DECLARE_ERROR(InvalidPrefix);
ROMIK_DECLARE_ERROR(InvalidDigits);
ROMIK_DECLARE_ERROR(TerminalOrbit);
ROMIK_DECLARE_ERROR(PrefixTooShort);
ROMIK_DECLARE_ERROR(NeedMoreDigits);
ROMIK_DECLARE_ERROR(NotApplicable);
ROMIK_DECLARE_ERROR(SeamPoint);
ROMIK_DECLARE_ERROR(SingularRect);
ROMIK_DECLARE_ERROR(CapExceeded);
ROMIK_DECLARE_ERROR(NoReturn);
ROMIK_DECLARE_ERROR(DegenerateOrbit);
ROMIK_DECLARE_ERROR(ParseError);

#undef ROMIK_DECLARE_ERROR

}  // namespace romik
