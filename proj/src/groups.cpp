#include "flatchain/groups.hpp"

namespace flatchain {

GroupTag GroupTag::mod(long p)
{
    if (p < 2)
        fail("groups", "ModP requires p >= 2, got " + std::to_string(p));
    return {Kind::ModP, p};
}

std::string GroupTag::name() const
{
    switch (kind) {
    case Kind::Real: return "real";
    case Kind::Integer: return "integer";
    case Kind::ModP: return "mod:" + std::to_string(p);
    case Kind::Circle: return "circle";
    }
    return "?";
}

GroupTag GroupTag::parse(const std::string& name)
{
    if (name == "real")
        return real();
    if (name == "integer")
        return integer();
    if (name == "circle")
        return circle();
    if (name.rfind("mod:", 0) == 0) {
        try {
            std::size_t used = 0;
            long p = std::stol(name.substr(4), &used);
            if (used == name.size() - 4)
                return mod(p);
        } catch (const std::logic_error&) {
        }
    }
    throw Error(Error::Kind::Parse, "groups", "unknown group '" + name + "'");
}

Coefficient::Coefficient(GroupTag group, const Rational& value) : group_(group), value_(value)
{
    switch (group_.kind) {
    case GroupTag::Kind::Real:
        break;
    case GroupTag::Kind::Integer:
        if (!is_integer(value_))
            fail("groups", "integer coefficient " + to_string(value_) + " is not integral");
        break;
    case GroupTag::Kind::ModP: {
        if (!is_integer(value_))
            fail("groups", "mod-p coefficient " + to_string(value_) + " is not integral");
        Integer v = numerator(value_) % group_.p;
        if (v < 0)
            v += group_.p;
        value_ = Rational(v);
        break;
    }
    case GroupTag::Kind::Circle:
        value_ = frac(value_);
        break;
    }
}

Rational norm(const Coefficient& c)
{
    const Rational& v = c.value();
    switch (c.group().kind) {
    case GroupTag::Kind::Real:
    case GroupTag::Kind::Integer:
        return abs(v);
    case GroupTag::Kind::Circle:
        return v <= Rational(1, 2) ? v : Rational(1 - v);
    case GroupTag::Kind::ModP: {
        Rational other = Rational(c.group().p) - v;
        return v <= other ? v : other;
    }
    }
    return 0;
}

Coefficient add(const Coefficient& a, const Coefficient& b)
{
    if (!(a.group() == b.group()))
        fail("groups", "group mismatch: " + a.group().name() + " vs " + b.group().name());
    return Coefficient(a.group(), a.value() + b.value());
}

Coefficient neg(const Coefficient& a) { return Coefficient(a.group(), -a.value()); }

Coefficient times(const Coefficient& a, long n) { return Coefficient(a.group(), a.value() * n); }

Coefficient scale(const Coefficient& a, const Rational& s)
{
    if (a.group().kind != GroupTag::Kind::Real)
        fail("groups", "rational scaling is defined for real coefficients only");
    return Coefficient(a.group(), a.value() * s);
}

Coefficient project(const Coefficient& g)
{
    if (g.group().kind != GroupTag::Kind::Real && g.group().kind != GroupTag::Kind::Integer)
        fail("groups", "projection expects a real coefficient, got " + g.group().name());
    return Coefficient(GroupTag::circle(), g.value());
}

Coefficient section(const Coefficient& g)
{
    if (g.group().kind != GroupTag::Kind::Circle)
        fail("groups", "section expects a circle coefficient, got " + g.group().name());
    const Rational& v = g.value();
    return Coefficient(GroupTag::real(), v <= Rational(1, 2) ? v : Rational(v - 1));
}

}   // namespace flatchain
