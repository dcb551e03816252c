#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace chipfire {

// Exact arithmetic carriers. Chip counts and firing vectors grow factorially
// on the useful orientations, so fixed-width integers are out.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt vector_gcd(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
        if (g == 1)
            break;
    }
    return g;
}

} // namespace chipfire
