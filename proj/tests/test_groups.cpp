#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace flatchain;
using flatchain::test::q;

TEST_CASE("norms")
{
    CHECK(norm(Coefficient(GroupTag::circle(), q(1, 2))) == q(1, 2));
    CHECK(norm(Coefficient(GroupTag::circle(), q(9, 10))) == q(1, 10));
    CHECK(norm(Coefficient(GroupTag::real(), q(-5, 2))) == q(5, 2));
    CHECK(norm(Coefficient(GroupTag::mod(5), q(4))) == q(1));
}

TEST_CASE("group law with reduction")
{
    auto c = [](Rational v) { return Coefficient(GroupTag::circle(), v); };
    CHECK(add(c(q(3, 4)), c(q(1, 2))).value() == q(1, 4));
    CHECK(add(Coefficient(GroupTag::real(), q(1, 3)), Coefficient(GroupTag::real(), q(-1, 3))).is_zero());
    CHECK(add(Coefficient(GroupTag::mod(5), 3), Coefficient(GroupTag::mod(5), 4)).value() == 2);
    CHECK(c(q(-1, 4)).value() == q(3, 4));
    CHECK_THROWS_AS(add(c(q(1, 2)), Coefficient(GroupTag::real(), 1)), Error);
    CHECK_THROWS_AS(Coefficient(GroupTag::integer(), q(1, 2)), Error);
    CHECK_THROWS_AS(GroupTag::mod(1), Error);
}

TEST_CASE("projection and section")
{
    auto r = [](Rational v) { return Coefficient(GroupTag::real(), v); };
    CHECK(project(r(q(3, 5))).value() == q(3, 5));
    CHECK(norm(project(r(q(3, 5)))) == q(2, 5));
    CHECK(project(r(q(-1, 4))).value() == q(3, 4));
    CHECK(project(r(3)).is_zero());

    auto c = [](Rational v) { return Coefficient(GroupTag::circle(), v); };
    CHECK(section(c(q(3, 10))).value() == q(3, 10));
    CHECK(section(c(q(3, 4))).value() == q(-1, 4));
    CHECK(section(c(q(1, 2))).value() == q(1, 2));

    // minimal |r| over r ∈ 3/4 + ℤ by scanning shifts
    Rational best = q(3, 4);
    for (int s = -3; s <= 3; ++s)
        if (abs(q(3, 4) + s) < abs(best))
            best = q(3, 4) + s;
    CHECK(best == q(-1, 4));
}

TEST_CASE("norm axioms on samples")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
    const GroupTag tags[] = {GroupTag::real(), GroupTag::circle()};
    for (int it = 0; it < 300; ++it) {
        for (auto tag : tags) {
            Coefficient a(tag, Rational(num(rng), den(rng)));
            Coefficient b(tag, Rational(num(rng), den(rng)));
            CHECK(norm(neg(a)) == norm(a));
            CHECK(norm(add(a, b)) <= norm(a) + norm(b));
            CHECK((norm(a) == 0) == a.is_zero());
        }
        Coefficient g(GroupTag::real(), Rational(num(rng), den(rng)));
        CHECK(norm(project(g)) <= norm(g));
        Coefficient h(GroupTag::circle(), Rational(num(rng), den(rng)));
        CHECK(project(section(h)) == h);
        CHECK(norm(section(h)) == norm(h));
    }
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-0.25") == q(-1, 4));
    CHECK(parse_rational("1e-2") == q(1, 100));
    CHECK(parse_rational(" 7 ") == q(7));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(to_string(q(-3, 4)) == "-3/4");
    CHECK(best_rational(0.333333333, 1000) == q(1, 3));
    CHECK(best_rational(-2.5, 10) == q(-5, 2));
}

TEST_CASE("group names")
{
    CHECK(GroupTag::parse("mod:7") == GroupTag::mod(7));
    CHECK(GroupTag::mod(7).name() == "mod:7");
    CHECK(GroupTag::parse("circle") == GroupTag::circle());
    CHECK_THROWS_AS(GroupTag::parse("quaternion"), Error);
}
