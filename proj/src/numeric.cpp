#include "signedpat/numeric.hpp"

namespace signedpat {

BigInt factorial(unsigned n)
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt power(long long base, unsigned exp)
{
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1u)
            result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

} // namespace signedpat
