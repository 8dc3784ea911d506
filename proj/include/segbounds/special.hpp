#pragma once

#include <cstddef>

#include "segbounds/rational.hpp"

namespace segbounds {

/// x(x-1)...(x-k+1); the empty product for k = 0.
inline Rational falling_factorial(const Rational& x, std::size_t k) {
    Rational out(1);
    Rational factor = x;
    for (std::size_t j = 0; j < k; ++j) {
        out *= factor;
        factor -= 1;
    }
    return out;
}

enum class HalfSign { plus, minus };

/// binom(+1/2, k) or binom(-1/2, k), exactly.
inline Rational half_binomial(HalfSign s, std::size_t k) {
    const Rational top = s == HalfSign::plus ? Rational(1, 2) : Rational(-1, 2);
    Rational out(1);
    for (std::size_t j = 0; j < k; ++j) {
        out *= top - static_cast<long>(j);
        out /= static_cast<long>(j + 1);
    }
    return out;
}

}  // namespace segbounds
