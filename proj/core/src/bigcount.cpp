#include "latwalk/bigcount.hpp"

#include "latwalk/error.hpp"

#include <algorithm>

namespace latwalk {

BigCount binomial(long n, long k)
{
    if (n < 0) {
        throw InvalidParameter("binomial: n must be >= 0");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // Each partial product is itself a binomial coefficient, so the division
    // is exact at every step.
    BigCount r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigCount central_binomial(long m)
{
    if (m < 0) {
        throw InvalidParameter("central_binomial: m must be >= 0");
    }
    return binomial(2 * m, m);
}

BigCount catalan(long m)
{
    if (m < 0) {
        throw InvalidParameter("catalan: m must be >= 0");
    }
    return central_binomial(m) / (m + 1);
}

BigCount factorial(long n)
{
    if (n < 0) {
        throw InvalidParameter("factorial: n must be >= 0");
    }
    BigCount r = 1;
    for (long i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

std::string to_decimal(const BigCount& x)
{
    return x.str();
}

BigCount parse_decimal(const std::string& text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
            return c >= '0' && c <= '9';
        })) {
        throw InvalidParameter("not a nonnegative decimal integer: '" + text + "'");
    }
    return BigCount(text);
}

} // namespace latwalk
