#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace scdeck {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational; cpp_rational keeps the canonical form (reduced,
/// positive denominator) that the arithmetic here relies on.
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace scdeck
