#include "romik/errors.hpp"

namespace romik {

#define ROMIK_DEFINE_ERROR(Name) \
    Name::Name(const std::string& what) : DomainError(#Name ": " + what) {}

ROMIK_DEFINE_ERROR(ZeroDenominator)
ROMIK_DEFINE_ERROR(PoleError)
ROMIK_DEFINE_ERROR(MixedDiscriminant)
ROMIK_DEFINE_ERROR(OutOfDomain)
ROMIK_DEFINE_ERROR(InvalidPrefix)
ROMIK_DEFINE_ERROR(InvalidDigits)
ROMIK_DEFINE_ERROR(TerminalOrbit)
ROMIK_DEFINE_ERROR(PrefixTooShort)
ROMIK_DEFINE_ERROR(NeedMoreDigits)
ROMIK_DEFINE_ERROR(NotApplicable)
ROMIK_DEFINE_ERROR(SeamPoint)
ROMIK_DEFINE_ERROR(SingularRect)
ROMIK_DEFINE_ERROR(CapExceeded)
ROMIK_DEFINE_ERROR(NoReturn)
ROMIK_DEFINE_ERROR(DegenerateOrbit)
ROMIK_DEFINE_ERROR(ParseError)

#undef ROMIK_DEFINE_ERROR

}  // namespace romik
