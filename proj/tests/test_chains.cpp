#include <doctest.h>

#include "flatchain/generators.hpp"
#include "helpers.hpp"

using namespace flatchain;
using namespace flatchain::test;

namespace {

PolyChain square_loop(const Rational& side, const Point& origin = {Rational(0), Rational(0)})
{
    PolyChain c(GroupTag::real(), 2, 1);
    Point a = origin, b = origin + Point{side, 0}, cc = origin + Point{side, side}, d = origin + Point{0, side};
    c.add_term(simplex({a, b}), 1);
    c.add_term(simplex({b, cc}), 1);
    c.add_term(simplex({cc, d}), 1);
    c.add_term(simplex({d, a}), 1);
    return c;
}

}   // namespace

TEST_CASE("addition merges and cancels")
{
    auto s = simplex({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    PolyChain a(GroupTag::real(), 2, 2);
    a.add_term(s, q(1, 3));
    a.add_term(s, q(1, 2));
    CHECK(a.size() == 1);
    CHECK(a.coefficient(s).value() == q(5, 6));
    a.add_term(simplex({pt({0, 1}), pt({1, 0}), pt({0, 0})}), q(-5, 6));   // odd permutation
    CHECK(a.coefficient(s).value() == q(5, 3));
    PolyChain b(GroupTag::real(), 2, 2);
    b.add_term(s, q(-5, 3));
    CHECK((a + b).empty());
    PolyChain c(GroupTag::circle(), 2, 2);
    CHECK_THROWS_AS(a + c, Error);
}

TEST_CASE("boundary")
{
    Point A = pt({0, 0}), B = pt({1, 0}), C = pt({0, 1});
    PolyChain t(GroupTag::real(), 2, 2);
    t.add_term(simplex({A, B, C}), q(2));
    PolyChain expect(GroupTag::real(), 2, 1);
    expect.add_term(simplex({B, C}), 2);
    expect.add_term(simplex({A, C}), -2);
    expect.add_term(simplex({A, B}), 2);
    CHECK(boundary(t) == expect);

    auto cx = kuhn_complex(2, 1);
    PolyChain sq(GroupTag::real(), 2, 2, 1);
    for (int id = 0; id < 2; ++id)
        sq.add_term(cx->simplex(2, id), orientation_sign(cx->simplex(2, id)));
    CHECK(boundary(sq) == square_loop(1));
    CHECK_THROWS_AS(boundary(PolyChain(GroupTag::real(), 2, 0)), Error);
}

TEST_CASE("boundary of boundary vanishes")
{
    Rng rng(11);
    for (int it = 0; it < 40; ++it) {
        int d = it % 2 ? 3 : 2;
        for (int k = 2; k <= d; ++k) {
            auto c = random_grid_chain(rng, GroupTag::real(), d, 2, k, 6);
            CHECK(boundary(boundary(c)).empty());
            auto z = random_grid_chain(rng, GroupTag::circle(), d, 2, k, 6);
            CHECK(boundary(boundary(z)).empty());
        }
    }
}

TEST_CASE("mass")
{
    PolyChain seg(GroupTag::circle(), 2, 1);
    seg.add_term(simplex({pt({0, 0}), pt({1, 0})}), q(1, 2));
    CHECK(mass_exact(seg) == SurdSum(q(1, 2)));
    CHECK(mass_exact(PolyChain(GroupTag::real(), 2, 1)).is_zero());

    // two unit squares, circle 0.1 and 0.9 → 0.2
    PolyChain sq(GroupTag::circle(), 2, 2);
    for (auto [x, v] : {std::pair{0, q(1, 10)}, std::pair{1, q(9, 10)}}) {
        sq.add_term(simplex({pt({x, 0}), pt({x + 1, 0}), pt({x + 1, 1})}), v);
        sq.add_term(simplex({pt({x, 0}), pt({x, 1}), pt({x + 1, 1})}), -v);   // reversed orientation
    }
    CHECK(mass_exact(sq) == SurdSum(q(1, 5)));
}

TEST_CASE("mass is subadditive and additive on disjoint supports")
{
    Rng rng(3);
    for (int it = 0; it < 30; ++it) {
        auto a = random_grid_chain(rng, GroupTag::real(), 2, 3, 1, 5);
        auto b = random_grid_chain(rng, GroupTag::real(), 2, 3, 1, 5);
        CHECK(mass_exact(a + b) <= mass_exact(a) + mass_exact(b));
        PolyChain far = affine_pushforward(b, AffineMap::translation(pt({5, 5})));
        far.set_complex_resolution(std::nullopt);
        a.set_complex_resolution(std::nullopt);
        CHECK(mass_exact(a + far) == mass_exact(a) + mass_exact(far));
    }
}

TEST_CASE("restriction and mass measure")
{
    auto cx = kuhn_complex(2, 2);
    Rng rng(5);
    auto c = random_grid_chain(rng, GroupTag::real(), 2, 2, 2, 8);
    std::set<int> all, left, right;
    for (int id = 0; id < static_cast<int>(cx->count(2)); ++id) {
        all.insert(id);
        (cx->vertex_point(cx->vertex_ids(2, id)[0])[0] < q(1, 2) ? left : right).insert(id);
    }
    CHECK(restrict_to(c, *cx, all) == c);
    CHECK(restrict_to(c, *cx, {}).empty());
    auto l = restrict_to(c, *cx, left);
    CHECK(l + restrict_to(c, *cx, right) == c);
    std::set<Simplex> lcells;
    for (int id : left)
        lcells.insert(cx->simplex(2, id));
    CHECK(mass_measure(c).measure_of(lcells) == mass_exact(l));
    CHECK(mass_measure(c).total == mass_exact(c));
    CHECK_THROWS_AS(restrict_to(c, *cx, {999}), Error);
}

TEST_CASE("subdivision preserves mass and commutes with boundary")
{
    PolyChain seg(GroupTag::real(), 2, 1);
    seg.add_term(simplex({pt({0, 0}), pt({1, 0})}), 3);
    auto s = subdivide(seg);
    CHECK(s.size() == 2);
    CHECK(mass_exact(s) == mass_exact(seg));

    PolyChain tri(GroupTag::real(), 2, 2);
    tri.add_term(simplex({pt({0, 0}), pt({1, 0}), pt({0, 1})}), q(2, 3));
    auto st = subdivide(tri);
    CHECK(st.size() == 4);
    CHECK(mass_exact(st) == mass_exact(tri));
    CHECK(boundary(st) == subdivide(boundary(tri)));

    PolyChain tet(GroupTag::real(), 3, 3);
    tet.add_term(simplex({pt({0, 0, 0}), pt({1, 0, 0}), pt({1, 1, 0}), pt({1, 1, 1})}), 1);
    auto s3 = subdivide(tet);
    CHECK(s3.size() == 8);
    CHECK(mass_exact(s3) == mass_exact(tet));
    CHECK(boundary(s3) == subdivide(boundary(tet)));
    CHECK(subdivide(PolyChain(GroupTag::real(), 2, 1)).empty());
}

TEST_CASE("cone identity")
{
    auto loop = square_loop(1);
    auto cr = cone(pt({q(1, 2), q(1, 2)}), loop);
    CHECK(cr.dropped == 0);
    CHECK(cr.chain.size() == 4);
    CHECK(boundary(cr.chain) == loop);

    PolyChain seg(GroupTag::real(), 2, 1);
    seg.add_term(simplex({pt({1, 0}), pt({1, 1})}), q(3, 7));
    auto c = cone(pt({0, 0}), seg).chain;
    CHECK(boundary(c) == seg - cone(pt({0, 0}), boundary(seg)).chain);
    CHECK(cone(pt({0, 0}), PolyChain(GroupTag::real(), 2, 1)).chain.empty());

    // apex on the segment's line: dropped
    auto deg = cone(pt({1, 2}), seg);
    CHECK(deg.dropped == 1);
}

TEST_CASE("pushforward scales mass")
{
    PolyChain seg(GroupTag::real(), 2, 1);
    seg.add_term(simplex({pt({0, 0}), pt({1, 0})}), 1);
    CHECK(mass_exact(affine_pushforward(seg, AffineMap::homothety(pt({0, 0}), q(1, 2)))) == SurdSum(q(1, 2)));
    PolyChain tri(GroupTag::real(), 2, 2);
    tri.add_term(simplex({pt({0, 0}), pt({1, 0}), pt({0, 1})}), 1);
    CHECK(mass_exact(affine_pushforward(tri, AffineMap::homothety(pt({0, 0}), q(1, 2)))) == SurdSum(q(1, 8)));
    CHECK(affine_pushforward(tri, AffineMap::identity(2)) == tri);
}

TEST_CASE("refinement onto a finer grid")
{
    auto coarse = kuhn_complex(2, 1);
    auto fine = kuhn_complex(2, 2);
    Rng rng(9);
    for (int k = 0; k <= 2; ++k) {
        auto c = random_grid_chain(rng, GroupTag::real(), 2, 1, k, 4);
        auto r = refine_onto(c, *fine);
        CHECK(mass_exact(r) == mass_exact(c));
        if (k > 0)
            CHECK(boundary(r) == refine_onto(boundary(c), *fine));
    }
    PolyChain odd(GroupTag::real(), 2, 1);
    odd.add_term(simplex({pt({0, 0}), pt({q(1, 3), 0})}), 1);
    CHECK_THROWS_AS(refine_onto(odd, *fine), Error);
}

TEST_CASE("cells round trip and density")
{
    auto cx = kuhn_complex(2, 2);
    Rng rng(1);
    auto c = random_grid_chain(rng, GroupTag::circle(), 2, 2, 2, 5);
    CHECK(from_cells(to_cells(c, *cx), GroupTag::circle(), *cx, 2) == c);
    PolyChain sq(GroupTag::real(), 2, 2);
    sq.add_term(simplex({pt({0, 0}), pt({1, 0}), pt({1, 1})}), 2);
    CHECK(top_density(sq, pt({q(3, 4), q(1, 4)}))->value() == 2);
    CHECK(top_density(sq, pt({q(1, 4), q(3, 4)}))->is_zero());
    CHECK_FALSE(top_density(sq, pt({q(1, 2), q(1, 2)})));
}
