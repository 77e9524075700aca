#pragma once

#include <stdexcept>
#include <string>

namespace srho {

// Domain / precondition violations, one type per failure mode so callers
// and tests can catch them individually.
#define SRHO_DEFINE_ERROR(Name, Base)                        \
    struct Name : Base {                                     \
        explicit Name(const std::string& what) : Base(what) {} \
    }

SRHO_DEFINE_ERROR(NoSignChange, std::runtime_error);
SRHO_DEFINE_ERROR(NoConvergence, std::runtime_error);
SRHO_DEFINE_ERROR(InvalidInterval, std::invalid_argument);
SRHO_DEFINE_ERROR(NonzeroConstantTerm, std::invalid_argument);
SRHO_DEFINE_ERROR(SigmaOutOfRange, std::domain_error);
SRHO_DEFINE_ERROR(BadOrder, std::invalid_argument);
SRHO_DEFINE_ERROR(ParamOutOfDomain, std::domain_error);
SRHO_DEFINE_ERROR(OutsideAccuracyDomain, std::domain_error);
SRHO_DEFINE_ERROR(ROutOfRange, std::domain_error);
SRHO_DEFINE_ERROR(COutOfRange, std::domain_error);
SRHO_DEFINE_ERROR(ZetaOutOfRange, std::domain_error);
SRHO_DEFINE_ERROR(BetaOutOfRange, std::domain_error);
SRHO_DEFINE_ERROR(AlphaOutOfRange, std::domain_error);
SRHO_DEFINE_ERROR(AOutOfRange, std::domain_error);
SRHO_DEFINE_ERROR(ParamOrder, std::domain_error);
SRHO_DEFINE_ERROR(UnsupportedSigns, std::domain_error);
SRHO_DEFINE_ERROR(BadN, std::invalid_argument);
SRHO_DEFINE_ERROR(HplDomain, std::domain_error);
SRHO_DEFINE_ERROR(BadParams, std::invalid_argument);
SRHO_DEFINE_ERROR(BadConfig, std::invalid_argument);

#undef SRHO_DEFINE_ERROR

}  // namespace srho
