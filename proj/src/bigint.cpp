#include "sandlab/bigint.hpp"

namespace sandlab {

BigInt binomial(std::int64_t m, std::int64_t k) {
    if (m < 0 || k < 0 || k > m) return 0;
    if (k > m - k) k = m - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= m - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(std::int64_t m) {
    BigInt r = 1;
    for (std::int64_t i = 2; i <= m; ++i) r *= i;
    return r;
}

std::string to_string(const Rational& v) {
    auto num = boost::multiprecision::numerator(v);
    auto den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace sandlab
