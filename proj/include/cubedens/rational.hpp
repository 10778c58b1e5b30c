#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cubedens
{
    using BigInt = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    [[nodiscard]] inline auto make_rational(const BigInt & num, const BigInt & den) -> Rational
    {
        return Rational{num, den};
    }

    /// Always "num/den", never a decimal; integers print as "k/1".
    [[nodiscard]] inline auto to_string(const Rational & r) -> std::string
    {
        return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
    }

    [[nodiscard]] inline auto to_string(const BigInt & v) -> std::string { return v.str(); }

    [[nodiscard]] inline auto binomial(unsigned n, unsigned k) -> BigInt
    {
        if (k > n)
            return 0;
        BigInt r = 1;
        for (unsigned i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    [[nodiscard]] inline auto factorial(unsigned n) -> BigInt
    {
        BigInt r = 1;
        for (unsigned i = 2; i <= n; ++i)
            r *= i;
        return r;
    }

    [[nodiscard]] inline auto pow2(unsigned e) -> BigInt { return BigInt{1} << e; }
}
