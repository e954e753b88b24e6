#include "mcwalk/exact_amplitude.hpp"

namespace mcwalk {

double ExactAmplitude::to_double() const {
    if (numerator == 0) return 0.0;
    const bool negative = numerator < 0;
    BigInt mag = negative ? BigInt(-numerator) : numerator;
    // Keep the top 64 bits so the conversion cannot overflow a double even
    // when the numerator has thousands of bits.
    const long bits = static_cast<long>(boost::multiprecision::msb(mag)) + 1;
    const long drop = bits > 64 ? bits - 64 : 0;
    if (drop > 0) mag >>= static_cast<unsigned>(drop);
    const double top = mag.convert_to<double>();
    const double value =
        top * std::exp2(static_cast<double>(drop) - 0.5 * scale_exponent);
    return negative ? -value : value;
}

BigInt exact_binomial(long n, long k) {
    if (k > n || k < 0 || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

double binomial_as_double(long n, long k) {
    ExactAmplitude wrapped{exact_binomial(n, k), 0};
    return wrapped.to_double();
}

}  // namespace mcwalk
