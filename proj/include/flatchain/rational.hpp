/**
 * Exact rational scalars and small dense linear algebra over them.
 */
#ifndef FLATCHAIN_RATIONAL_HPP
#define FLATCHAIN_RATIONAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace flatchain {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Error raised by library operations; `module` names the subsystem.
class Error : public std::runtime_error
{
  public:
    enum class Kind { Precondition, Parse, Solver };

    Error(Kind kind, std::string module, const std::string& what)
        : std::runtime_error(module + ": " + what), kind_(kind), module_(std::move(module))
    {
    }

    Kind kind() const noexcept { return kind_; }
    const std::string& module() const noexcept { return module_; }

  private:
    Kind kind_;
    std::string module_;
};

[[noreturn]] inline void fail(const std::string& module, const std::string& what)
{
    throw Error(Error::Kind::Precondition, module, what);
}

/**
 * Parse "p/q", "p", or a finite decimal such as "-0.25" or "1e-3".
 * Throws Error(Parse) on malformed input.
 */
Rational parse_rational(std::string_view text);

/// "p/q" (or "p" when integral), the chain-file encoding.
std::string to_string(const Rational& r);

double to_double(const Rational& r);
Integer floor_int(const Rational& r);
Integer ceil_int(const Rational& r);
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Fractional part r - floor(r), in [0, 1).
Rational frac(const Rational& r);

/**
 * Closest rational to x with denominator at most max_den (continued
 * fraction convergents and semiconvergents).
 */
Rational best_rational(double x, long max_den);

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;   // row-major

/// Rank of a dense rational matrix.
int rank(RMatrix m);

/**
 * Solve A x = b exactly. Returns nullopt when inconsistent; when the
 * solution is not unique `unique` is set false and one particular
 * solution (free variables zero) is returned.
 */
std::optional<RVector> solve(RMatrix a, RVector b, bool* unique = nullptr);

/// Determinant of a square rational matrix.
Rational determinant(RMatrix m);

}   // namespace flatchain

#endif
