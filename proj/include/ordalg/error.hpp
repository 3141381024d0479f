#pragma once

#include <stdexcept>
#include <string>

namespace ordalg {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define ORDALG_DEFINE_ERROR(Name)                                              \
  class Name : public error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : error(#Name ": " + what) {}       \
  }

// monoid-core
ORDALG_DEFINE_ERROR(SchemaError);
ORDALG_DEFINE_ERROR(InvariantViolation);
ORDALG_DEFINE_ERROR(BackendMismatch);
ORDALG_DEFINE_ERROR(NotInWindow);

// order-analysis / riesz-engine
ORDALG_DEFINE_ERROR(IdentityInput);
ORDALG_DEFINE_ERROR(HypothesisUnmet);
ORDALG_DEFINE_ERROR(PreconditionUnmet);
ORDALG_DEFINE_ERROR(PrimalWitnessUnavailable);

// star-ideal-lab
ORDALG_DEFINE_ERROR(RingMismatch);
ORDALG_DEFINE_ERROR(ZeroIdeal);
ORDALG_DEFINE_ERROR(Unsupported);
ORDALG_DEFINE_ERROR(NormTooLarge);
ORDALG_DEFINE_ERROR(NotHomogeneous);
ORDALG_DEFINE_ERROR(UnitInput);
ORDALG_DEFINE_ERROR(ArithmeticOverflow);

/// An internal cross-check between two independent routes disagreed.
ORDALG_DEFINE_ERROR(ContractViolation);

#undef ORDALG_DEFINE_ERROR

} // namespace ordalg
