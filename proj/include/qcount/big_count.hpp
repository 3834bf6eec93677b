#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcount {

// Exact, unbounded count. Kept nonnegative by the code that produces it.
using BigCount = boost::multiprecision::cpp_int;

// Plain decimal digits, no sign for nonnegative values, no exponent.
inline std::string to_decimal(const BigCount& v) { return v.str(); }

}  // namespace qcount
