#ifndef FLATCHAIN_TEST_HELPERS_HPP
#define FLATCHAIN_TEST_HELPERS_HPP

#include <initializer_list>

#include "flatchain/chains.hpp"

namespace flatchain::test {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

inline Simplex simplex(std::initializer_list<Point> vs) { return Simplex(std::vector<Point>(vs)); }

inline Coefficient real(const Rational& v) { return Coefficient(GroupTag::real(), v); }
inline Coefficient circle(const Rational& v) { return Coefficient(GroupTag::circle(), v); }

}   // namespace flatchain::test

#endif
