#pragma once

#include "ostrowski/cfrac.hpp"
#include "ostrowski/real.hpp"

#include <random>
#include <vector>

namespace ostrowski::testing {

inline std::mt19937_64 rng(uint64_t seed = 0x05f5e1d3) {
    return std::mt19937_64(seed);
}

// Uniform rational in (0,1) with denominator <= max_den.
inline Real random_unit_rational(std::mt19937_64& gen, long max_den) {
    std::uniform_int_distribution<long> den_dist(2, max_den);
    long den = den_dist(gen);
    std::uniform_int_distribution<long> num_dist(1, den - 1);
    return Real::rational(num_dist(gen), den);
}

// Rational in (-1, 1), excluding the endpoints.
inline Real random_signed_rational(std::mt19937_64& gen, long max_den) {
    std::uniform_int_distribution<long> den_dist(2, max_den);
    long den = den_dist(gen);
    std::uniform_int_distribution<long> num_dist(-(den - 1), den - 1);
    return Real::rational(num_dist(gen), den);
}

inline Real golden() { return Real::quadratic(-1, 1, 5, 2); }   // (sqrt(5)-1)/2
inline Real sqrt2m1() { return Real::quadratic(-1, 1, 2, 1); }  // sqrt(2)-1

// Quotient trace of the Euclidean algorithm on num/den, floor convention.
inline std::vector<Int> euclid_quotients(Int num, Int den) {
    std::vector<Int> out;
    while (den != 0) {
        Int q = floor_div(num, den);
        out.push_back(q);
        Int rem = num - q * den;
        num = den;
        den = rem;
    }
    return out;
}

}  // namespace ostrowski::testing
