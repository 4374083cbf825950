#ifndef KPE_ERRORS_HPP
#define KPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kpe {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define KPE_DEFINE_ERROR(Name)      \
    struct Name : Error {           \
        using Error::Error;         \
    }

KPE_DEFINE_ERROR(ConfigError);           // invalid parameters or config files
KPE_DEFINE_ERROR(DimensionError);        // shape mismatch between operands
KPE_DEFINE_ERROR(NonFiniteStateError);   // integration produced NaN/Inf
KPE_DEFINE_ERROR(SizeError);             // requested object exceeds a size cap
KPE_DEFINE_ERROR(MixedSamplingError);    // trajectories with different dt
KPE_DEFINE_ERROR(DegenerateDataError);   // all-zero or rank-zero snapshot data
KPE_DEFINE_ERROR(MaskError);             // input mask marks a state coordinate
KPE_DEFINE_ERROR(PoleError);             // resolvent solve singular at z
KPE_DEFINE_ERROR(LagError);              // lag request outside available range
KPE_DEFINE_ERROR(GridError);             // frequency grid smaller than lag support
KPE_DEFINE_ERROR(RejectionBudgetError);  // region sampler acceptance too low
KPE_DEFINE_ERROR(GridMismatchError);     // trajectory time grids differ
KPE_DEFINE_ERROR(InsufficientDataError); // fewer inputs than an operation needs

#undef KPE_DEFINE_ERROR

} // namespace kpe

#endif
