#pragma once

#include <stdexcept>
#include <string>

namespace qlink {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QLINK_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// algebra
QLINK_DEFINE_ERROR(DimensionMismatch);
QLINK_DEFINE_ERROR(NonSingular);
QLINK_DEFINE_ERROR(RankDeficient);
QLINK_DEFINE_ERROR(ParseError);

// series
QLINK_DEFINE_ERROR(OrderMismatch);
QLINK_DEFINE_ERROR(NonUnitFactor);

// lpi
QLINK_DEFINE_ERROR(UnknownBlock);
QLINK_DEFINE_ERROR(InvalidSpec);
QLINK_DEFINE_ERROR(DivergentSpec);

// agsum
QLINK_DEFINE_ERROR(NonIntegralExponent);
QLINK_DEFINE_ERROR(NonTermination);

// qde
QLINK_DEFINE_ERROR(NonUnit);
QLINK_DEFINE_ERROR(BoundaryNotCollapsed);

#undef QLINK_DEFINE_ERROR

}  // namespace qlink
