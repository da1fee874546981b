#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace latwalk {

/// Arbitrary-precision walk count. Never overflows.
using BigCount = boost::multiprecision::cpp_int;

/// binom(n, k); zero when k < 0 or k > n.
BigCount binomial(long n, long k);
/// binom(2m, m).
BigCount central_binomial(long m);
/// C_m = binom(2m, m) / (m + 1).
BigCount catalan(long m);
BigCount factorial(long n);

/// Decimal rendering without separators or exponent.
std::string to_decimal(const BigCount& x);
BigCount parse_decimal(const std::string& text);

} // namespace latwalk
