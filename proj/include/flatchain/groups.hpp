/**
 * Normed abelian coefficient groups: ℝ, ℤ, ℤ/p and the circle ℝ/ℤ, plus
 * the quotient map ℝ → ℝ/ℤ and its minimal-norm section.
 */
#ifndef FLATCHAIN_GROUPS_HPP
#define FLATCHAIN_GROUPS_HPP

#include <string>

#include "flatchain/rational.hpp"

namespace flatchain {

struct GroupTag
{
    enum class Kind { Real, Integer, ModP, Circle };

    Kind kind = Kind::Real;
    long p = 0;   // modulus, ModP only

    static GroupTag real() { return {Kind::Real, 0}; }
    static GroupTag integer() { return {Kind::Integer, 0}; }
    static GroupTag circle() { return {Kind::Circle, 0}; }
    static GroupTag mod(long p);

    /// "real", "integer", "mod:p", "circle"
    std::string name() const;
    static GroupTag parse(const std::string& name);

    friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

/**
 * A group element with its canonical exact representative: Circle values
 * lie in [0,1), ModP values in {0,…,p−1}, Integer values are integral.
 */
class Coefficient
{
  public:
    Coefficient() = default;

    /// Reduces `value` to the canonical representative; throws when the
    /// value is not admissible (non-integral for Integer/ModP).
    Coefficient(GroupTag group, const Rational& value);

    static Coefficient zero(GroupTag group) { return Coefficient(group, Rational(0)); }

    const GroupTag& group() const { return group_; }
    const Rational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    friend bool operator==(const Coefficient&, const Coefficient&) = default;

  private:
    GroupTag group_;
    Rational value_;
};

/// Real/Integer: |v|; Circle: min(v, 1−v); ModP: min(v, p−v).
Rational norm(const Coefficient& c);

Coefficient add(const Coefficient& a, const Coefficient& b);
Coefficient neg(const Coefficient& a);
inline Coefficient sub(const Coefficient& a, const Coefficient& b) { return add(a, neg(b)); }

/// Integer multiple n·a, defined in every group.
Coefficient times(const Coefficient& a, long n);

/// Multiplication by a rational scalar; Real only.
Coefficient scale(const Coefficient& a, const Rational& s);

/// φ: ℝ → ℝ/ℤ.
Coefficient project(const Coefficient& g);

/// Minimal-norm preimage under φ: g if g ≤ 1/2, else g − 1.
Coefficient section(const Coefficient& g);

/**
 * Constant C for which ‖φ(g)‖ ≤ C‖g‖ and ‖g‖ ≥ C⁻¹ inf ‖φ⁻¹(g)‖ hold for
 * the real/circle pair; the section above realizes C = 1.
 */
inline constexpr long projection_constant = 1;

}   // namespace flatchain

#endif
