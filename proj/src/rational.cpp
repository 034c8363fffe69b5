#include "flatchain/rational.hpp"

#include <cctype>
#include <cmath>
#include <utility>

namespace flatchain {

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why)
{
    throw Error(Error::Kind::Parse, "rational", "cannot parse '" + std::string(text) + "': " + why);
}

Integer parse_integer(std::string_view digits, std::string_view whole)
{
    if (digits.empty())
        parse_fail(whole, "empty integer");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            parse_fail(whole, "unexpected character");
    return Integer(std::string(digits));
}

Integer pow10(long e)
{
    Integer r = 1;
    for (long i = 0; i < e; ++i)
        r *= 10;
    return r;
}

}   // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        parse_fail(text, "empty string");

    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(s.substr(0, slash), text);
        Integer den = parse_integer(s.substr(slash + 1), text);
        if (den == 0)
            parse_fail(text, "zero denominator");
        value = Rational(num, den);
    } else {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view ex = s.substr(e + 1);
            bool eneg = false;
            if (!ex.empty() && (ex.front() == '-' || ex.front() == '+')) {
                eneg = ex.front() == '-';
                ex.remove_prefix(1);
            }
            Integer ei = parse_integer(ex, text);
            if (ei > 4096)
                parse_fail(text, "exponent out of range");
            exponent = ei.convert_to<long>() * (eneg ? -1 : 1);
            s = s.substr(0, e);
        }
        std::string_view ipart = s, fpart;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            ipart = s.substr(0, dot);
            fpart = s.substr(dot + 1);
        }
        if (ipart.empty() && fpart.empty())
            parse_fail(text, "no digits");
        Integer num = ipart.empty() ? Integer(0) : parse_integer(ipart, text);
        if (!fpart.empty()) {
            num = num * pow10(static_cast<long>(fpart.size())) + parse_integer(fpart, text);
            exponent -= static_cast<long>(fpart.size());
        }
        value = exponent >= 0 ? Rational(num * pow10(exponent)) : Rational(num, pow10(-exponent));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Integer floor_int(const Rational& r)
{
    Integer q;
    const Integer& n = numerator(r);
    const Integer& d = denominator(r);
    mpz_fdiv_q(q.backend().data(), n.backend().data(), d.backend().data());
    return q;
}

Integer ceil_int(const Rational& r)
{
    Integer q;
    mpz_cdiv_q(q.backend().data(), numerator(r).backend().data(), denominator(r).backend().data());
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor_int(r)); }

Rational best_rational(double x, long max_den)
{
    if (!std::isfinite(x))
        throw Error(Error::Kind::Solver, "rational", "non-finite value cannot be rationalized");
    const bool negative = x < 0;
    double y = std::fabs(x);
    // Convergents p/q via the standard recurrence.
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rem = y;
    Rational best(0);
    for (int iter = 0; iter < 64; ++iter) {
        double a_d = std::floor(rem);
        if (a_d > 1e15)
            break;
        long long a = static_cast<long long>(a_d);
        long long q2 = a * q1 + q0;
        if (q2 > max_den) {
            // Best semiconvergent within the bound.
            long long t = (max_den - q0) / q1;
            Rational semi{Integer(t * p1 + p0), Integer(t * q1 + q0)};
            Rational conv{Integer(p1), Integer(q1)};
            Rational ry(y);
            best = abs(semi - ry) < abs(conv - ry) ? semi : conv;
            return negative ? Rational(-best) : best;
        }
        long long p2 = a * p1 + p0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        best = Rational{Integer(p1), Integer(q1)};
        double f = rem - a_d;
        if (f < 1e-15)
            break;
        rem = 1.0 / f;
    }
    return negative ? Rational(-best) : best;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RMatrix& m, int ncols)
{
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    int row = 0;
    for (int col = 0; col < ncols && row < rows; ++col) {
        int sel = -1;
        for (int r = row; r < rows; ++r)
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(m[row], m[sel]);
        Rational inv = 1 / m[row][col];
        for (auto& v : m[row])
            v *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}   // namespace

int rank(RMatrix m)
{
    if (m.empty())
        return 0;
    return static_cast<int>(rref(m, static_cast<int>(m[0].size())).size());
}

std::optional<RVector> solve(RMatrix a, RVector b, bool* unique)
{
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int r = 0; r < rows; ++r)
        a[r].push_back(b[r]);
    auto pivots = rref(a, cols);
    for (int r = static_cast<int>(pivots.size()); r < rows; ++r)
        if (a[r][cols] != 0)
            return std::nullopt;
    if (unique)
        *unique = static_cast<int>(pivots.size()) == cols;
    RVector x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = a[r][cols];
    return x;
}

Rational determinant(RMatrix m)
{
    const int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            return Rational(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0)
                continue;
            Rational f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}   // namespace flatchain
