#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace liskron {

// All exact paths run on arbitrary-precision integers. Values that happen to
// fit a machine word stay cheap (cpp_int keeps small values inline), but no
// computation ever relies on that.
using Int = boost::multiprecision::cpp_int;

Int factorial(int n);

// C(n, k); zero outside 0 <= k <= n.
Int binomial(int n, int k);

inline std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace liskron
