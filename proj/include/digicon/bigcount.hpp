#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace digicon {

/// Exact nonnegative count. All counts leave the library as decimal strings.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

} // namespace digicon
