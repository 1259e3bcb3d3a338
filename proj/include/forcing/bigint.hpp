#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace forcing
{
    using BigInt = boost::multiprecision::cpp_int;

    inline auto factorial(std::size_t n) -> BigInt
    {
        BigInt result = 1;
        for (std::size_t i = 2; i <= n; ++i)
            result *= i;
        return result;
    }

    /// (m + d)! / m!, the rising product (m+1)(m+2)...(m+d).
    inline auto rising_product(std::size_t m, std::size_t d) -> BigInt
    {
        BigInt result = 1;
        for (std::size_t i = 1; i <= d; ++i)
            result *= (m + i);
        return result;
    }

    inline auto to_string(const BigInt & value) -> std::string
    {
        return value.str();
    }
}
