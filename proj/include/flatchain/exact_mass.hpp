/**
 * Exact masses.
 *
 * A k-volume is the square root of a rational (a Gram determinant over
 * (k!)^2), so masses live in the field generated by square roots of
 * rationals. SurdSum stores Σ q_i √s_i with rational q_i and square-free
 * integer radicands s_i. Square roots of distinct square-free integers are
 * linearly independent over Q, so a value is zero iff every coefficient
 * is zero; the sign of a nonzero value is decided by interval refinement
 * with exact integer square roots. No floating point is involved in any
 * comparison.
 */
#ifndef FLATCHAIN_EXACT_MASS_HPP
#define FLATCHAIN_EXACT_MASS_HPP

#include <compare>
#include <map>
#include <string>

#include "flatchain/rational.hpp"

namespace flatchain {

class SurdSum
{
  public:
    SurdSum() = default;
    SurdSum(const Rational& q);   // NOLINT: implicit on purpose, rationals embed

    /// √r for r ≥ 0.
    static SurdSum sqrt_of(const Rational& r);

    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    SurdSum& operator*=(const Rational& q);

    friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
    friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
    friend SurdSum operator*(SurdSum a, const Rational& q) { return a *= q; }
    friend SurdSum operator*(const Rational& q, SurdSum a) { return a *= q; }
    SurdSum operator-() const { return *this * Rational(-1); }

    /// Product; √a·√b is reduced to square-free form.
    friend SurdSum operator*(const SurdSum& a, const SurdSum& b);

    /// -1, 0 or +1, exact.
    int sign() const;
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const SurdSum& a, const SurdSum& b) { return a.terms_ == b.terms_; }
    friend std::strong_ordering operator<=>(const SurdSum& a, const SurdSum& b)
    {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Rational value when no irrational radicand is present.
    bool is_rational() const;
    Rational rational_part() const;

    double to_double() const;
    std::string str() const;

    const std::map<Integer, Rational>& terms() const { return terms_; }

  private:
    void add_term(const Integer& radicand, const Rational& coeff);

    // radicand (square-free, 1 for the rational part) -> coefficient, no zeros
    std::map<Integer, Rational> terms_;
};

}   // namespace flatchain

#endif
