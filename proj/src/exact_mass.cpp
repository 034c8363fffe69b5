#include "flatchain/exact_mass.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace flatchain {

namespace {

// n = s^2 * f with f square-free (up to prime factors beyond the trial
// bound, whose squares are detected only when the cofactor is a perfect
// square). Desk-scale radicands are small.
const std::vector<unsigned long>& small_primes()
{
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 100000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

std::pair<Integer, Integer> split_square(Integer n)
{
    Integer s = 1, f = 1;
    Integer root = boost::multiprecision::sqrt(n);
    for (unsigned long p : small_primes()) {
        if (root < p)
            break;
        if (!mpz_divisible_ui_p(n.backend().data(), p))
            continue;
        unsigned count = 0;
        do {
            mpz_divexact_ui(n.backend().data(), n.backend().data(), p);
            ++count;
        } while (mpz_divisible_ui_p(n.backend().data(), p));
        for (unsigned i = 0; i + 1 < count; i += 2)
            s *= p;
        if (count % 2)
            f *= p;
        root = boost::multiprecision::sqrt(n);
    }
    if (n > 1) {
        if (root * root == n)
            s *= root;
        else
            f *= n;
    }
    return {s, f};
}

}   // namespace

SurdSum::SurdSum(const Rational& q)
{
    if (q != 0)
        terms_.emplace(Integer(1), q);
}

SurdSum SurdSum::sqrt_of(const Rational& r)
{
    if (r < 0)
        fail("exact_mass", "square root of a negative rational");
    SurdSum out;
    if (r == 0)
        return out;
    // √(a/b) = √(ab) / b
    const Integer& a = numerator(r);
    const Integer& b = denominator(r);
    auto [s, f] = split_square(a * b);
    out.add_term(f, Rational(s, b));
    return out;
}

void SurdSum::add_term(const Integer& radicand, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        terms_.emplace(radicand, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

SurdSum operator*(const SurdSum& a, const SurdSum& b)
{
    SurdSum out;
    for (const auto& [ra, ca] : a.terms_)
        for (const auto& [rb, cb] : b.terms_) {
            auto [s, f] = split_square(ra * rb);
            out.add_term(f, ca * cb * Rational(s));
        }
    return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& o)
{
    for (const auto& [rad, c] : o.terms_)
        add_term(rad, c);
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o)
{
    for (const auto& [rad, c] : o.terms_)
        add_term(rad, -c);
    return *this;
}

SurdSum& SurdSum::operator*=(const Rational& q)
{
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [rad, c] : terms_)
        c *= q;
    return *this;
}

int SurdSum::sign() const
{
    if (terms_.empty())
        return 0;
    if (terms_.size() == 1)
        return terms_.begin()->second > 0 ? 1 : -1;
    // √f ∈ [L, L+1] / 2^bits with L = isqrt(f * 4^bits).
    for (unsigned bits = 64; bits <= 65536; bits *= 2) {
        Rational lo = 0, hi = 0;
        Integer scale = Integer(1) << bits;
        for (const auto& [rad, c] : terms_) {
            if (rad == 1) {
                lo += c;
                hi += c;
                continue;
            }
            Integer l = boost::multiprecision::sqrt(Integer(rad << (2 * bits)));
            Rational lower(l, scale), upper(Integer(l + 1), scale);
            if (c > 0) {
                lo += c * lower;
                hi += c * upper;
            } else {
                lo += c * upper;
                hi += c * lower;
            }
        }
        if (lo > 0)
            return 1;
        if (hi < 0)
            return -1;
    }
    throw Error(Error::Kind::Solver, "exact_mass", "sign refinement did not separate from zero");
}

bool SurdSum::is_rational() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdSum::rational_part() const
{
    auto it = terms_.find(Integer(1));
    return it == terms_.end() ? Rational(0) : it->second;
}

double SurdSum::to_double() const
{
    double v = 0;
    for (const auto& [rad, c] : terms_)
        v += flatchain::to_double(c) * std::sqrt(rad.convert_to<double>());
    return v;
}

std::string SurdSum::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [rad, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << to_string(c);
        if (rad != 1)
            os << "*sqrt(" << rad.str() << ")";
    }
    return os.str();
}

}   // namespace flatchain
