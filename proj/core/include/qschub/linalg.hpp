#pragma once

#include "qschub/types.hpp"

#include <optional>

namespace qschub::linalg {

IntMatrix identity(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector apply(const IntMatrix& a, const IntVector& x);
IntMatrix transpose(const IntMatrix& a);

RationalMatrix to_rational(const IntMatrix& a);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector apply(const RationalMatrix& a, const IntVector& x);
RationalMatrix transpose(const RationalMatrix& a);

// Throws std::domain_error when singular.
RationalMatrix inverse(const IntMatrix& a);

// Some solution of a x = b with free variables set to zero, or nullopt.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

}  // namespace qschub::linalg
