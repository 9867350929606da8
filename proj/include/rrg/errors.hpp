#pragma once

#include <stdexcept>
#include <string>

namespace rrg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define RRG_DEFINE_ERROR(NAME)                     \
    struct NAME : Error {                          \
        using Error::Error;                        \
        NAME() : Error(#NAME) {}                   \
    }

RRG_DEFINE_ERROR(InvalidParams);
RRG_DEFINE_ERROR(RetriesExceeded);
RRG_DEFINE_ERROR(IndexOutOfRange);
RRG_DEFINE_ERROR(NotSwitchable);
RRG_DEFINE_ERROR(ForestTooLarge);
RRG_DEFINE_ERROR(DegreeTooSmall);
RRG_DEFINE_ERROR(NoConvergence);
RRG_DEFINE_ERROR(TruncationNotConverged);
RRG_DEFINE_ERROR(DepthTooSmall);
RRG_DEFINE_ERROR(OnSupport);
RRG_DEFINE_ERROR(RootBracketFailure);
RRG_DEFINE_ERROR(NewtonDiverged);
RRG_DEFINE_ERROR(ShapeMismatch);
RRG_DEFINE_ERROR(OutOfRange);
RRG_DEFINE_ERROR(OdeBlowup);
RRG_DEFINE_ERROR(ConfigError);

#undef RRG_DEFINE_ERROR

}  // namespace rrg
