// exact_amplitude.hpp
// Exact integer-scaled amplitudes: value = numerator * 2^(-scale_exponent/2).
// Every amplitude of the Hadamard walk after t steps has this form, so the
// combinatorial formulas can be evaluated without rounding.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <utility>

namespace mcwalk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct ExactAmplitude {
    BigInt numerator = 0;
    long scale_exponent = 0;  // value = numerator / 2^(scale_exponent/2)

    double to_double() const;

    bool is_zero() const { return numerator == 0; }

    // |amplitude|^2 as an exact rational.
    BigRational prob() const {
        BigRational p(numerator * numerator);
        p /= BigInt(1) << static_cast<unsigned>(scale_exponent);
        return p;
    }
};

// C(n, k) with the convention C = 0 for k > n, k < 0 or n < 0.
BigInt exact_binomial(long n, long k);

double binomial_as_double(long n, long k);

}  // namespace mcwalk
