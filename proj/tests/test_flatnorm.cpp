#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "flatchain/flatnorm.hpp"
#include "flatchain/generators.hpp"
#include "helpers.hpp"

using namespace flatchain;
using namespace flatchain::test;

namespace {

// Exhaustive vertex enumeration of the flat-norm LP: every choice of m
// columns with a nonsingular square system and nonnegative solution.
SurdSum enumerate_bases(const PolyChain& p)
{
    auto cx = kuhn_complex(p.ambient_dim(), *p.complex_resolution());
    LpProblem lp = build_flat_lp(p, *cx);
    const int m = lp.cells_k, n1 = lp.cells_k1, cols = 2 * n1 + 2 * m;
    RMatrix a(m, RVector(cols, Rational(0)));
    std::vector<SurdSum> c(cols);
    for (int j = 0; j < n1; ++j) {
        for (int s : lp.incidence[j]) {
            a[std::abs(s) - 1][j] = s > 0 ? 1 : -1;
            a[std::abs(s) - 1][n1 + j] = s > 0 ? -1 : 1;
        }
        c[j] = c[n1 + j] = lp.cost_k1[j];
    }
    for (int i = 0; i < m; ++i) {
        a[i][2 * n1 + i] = 1;
        a[i][2 * n1 + m + i] = -1;
        c[2 * n1 + i] = c[2 * n1 + m + i] = lp.cost_k[i];
    }
    std::optional<SurdSum> best;
    std::vector<bool> pick(cols, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
        std::vector<int> cols_b;
        for (int j = 0; j < cols; ++j)
            if (pick[j])
                cols_b.push_back(j);
        RMatrix sq(m, RVector(m));
        for (int i = 0; i < m; ++i)
            for (int t = 0; t < m; ++t)
                sq[i][t] = a[i][cols_b[t]];
        if (determinant(sq) == 0)
            continue;
        auto x = solve(sq, lp.rhs);
        if (!x || std::any_of(x->begin(), x->end(), [](const Rational& v) { return v < 0; }))
            continue;
        SurdSum obj;
        for (int t = 0; t < m; ++t)
            obj += c[cols_b[t]] * (*x)[t];
        if (!best || obj < *best)
            best = obj;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return *best;
}

PolyChain unit_square_loop()
{
    auto cx = kuhn_complex(2, 1);
    PolyChain sq(GroupTag::real(), 2, 2, 1);
    for (int id = 0; id < 2; ++id)
        sq.add_term(cx->simplex(2, id), orientation_sign(cx->simplex(2, id)));
    return boundary(sq);
}

}   // namespace

TEST_CASE("zero chain")
{
    PolyChain z(GroupTag::real(), 2, 1, 2);
    auto w = flat_norm(z);
    CHECK(w.value == 0);
    CHECK(w.filling.empty());
    CHECK(w.remainder.empty());
    CHECK(flat_norm_oracle(z).is_zero());
}

TEST_CASE("unit square loop has flat norm one")
{
    auto loop = unit_square_loop();
    auto w = flat_norm(loop);
    CHECK(std::fabs(w.value - 1) < 1e-7);
    CHECK(flat_norm_oracle(loop) == SurdSum(q(1)));
    CHECK(enumerate_bases(loop) == SurdSum(q(1)));
    CHECK(w.remainder + boundary(w.filling) == loop);
    CHECK(w.witness_mass == SurdSum(q(1)));
}

TEST_CASE("single edge")
{
    auto cx = kuhn_complex(2, 1);
    for (int e = 0; e < static_cast<int>(cx->count(1)); ++e) {
        PolyChain p(GroupTag::real(), 2, 1, 1);
        p.add_term(cx->simplex(1, e), 1);
        SurdSum exact = enumerate_bases(p);
        CHECK(flat_norm_oracle(p) == exact);
        CHECK(std::fabs(flat_norm(p).value - exact.to_double()) < 1e-9);
        CHECK(exact <= mass_exact(p));
    }
}

TEST_CASE("exact pivoting agrees with vertex enumeration")
{
    Rng rng(21);
    for (int it = 0; it < 12; ++it) {
        int k = it % 2;
        auto p = random_flat_instance(rng, 2, 1, k, 3, 4);
        if (p.empty())
            continue;
        CHECK(flat_norm_oracle(p) == enumerate_bases(p));
    }
}

TEST_CASE("double solver agrees with exact oracle")
{
    Rng rng(5);
    for (int it = 0; it < 25; ++it) {
        int n = it % 3 == 0 ? 1 : 2;
        int k = n == 1 ? it % 2 : 1;
        auto p = random_flat_instance(rng, 2, n, k, 4);
        auto w = flat_norm(p);
        double exact = flat_norm_oracle(p).to_double();
        CHECK(std::fabs(w.value - exact) < 1e-7);
        CHECK(w.remainder + boundary(w.filling) == p);
        CHECK(std::fabs(w.witness_mass.to_double() - w.value) < 1e-6);
    }
}

TEST_CASE("parallel segments at distance one half")
{
    auto cx = kuhn_complex(2, 2);
    PolyChain a(GroupTag::real(), 2, 1, 2), b(GroupTag::real(), 2, 1, 2);
    for (int i = 0; i < 2; ++i) {
        a.add_term(simplex({pt({q(i, 2), 0}), pt({q(i + 1, 2), 0})}), 1);
        b.add_term(simplex({pt({q(i, 2), q(1, 2)}), pt({q(i + 1, 2), q(1, 2)})}), 1);
    }
    SurdSum exact = flat_norm_oracle(a - b);
    // rectangle area plus its two short sides
    CHECK(exact == SurdSum(q(3, 2)));
    CHECK(std::fabs(flat_distance(a, b) - 1.5) < 1e-9);
    CHECK(flat_distance(a, a) == 0);
}

TEST_CASE("bounds, homogeneity and triangle inequality")
{
    Rng rng(8);
    for (int it = 0; it < 20; ++it) {
        auto p = random_flat_instance(rng, 2, 2, 1, 5);
        auto s = random_grid_chain(rng, GroupTag::real(), 2, 2, 2, 3);
        double f = flat_norm(p).value;
        CHECK(f <= mass(p) + 1e-9);
        CHECK(flat_norm(boundary(s)).value <= mass(s) + 1e-9);
        CHECK(f <= (mass_exact(s) + mass_exact(p - boundary(s))).to_double() + 1e-9);
        CHECK(std::fabs(flat_norm(scale(p, q(-5, 2))).value - 2.5 * f) <= 1e-9 * std::max(1.0, f));
        auto r = random_flat_instance(rng, 2, 2, 1, 5);
        CHECK(flat_distance(p, r) <= flat_norm(p).value + flat_norm(r).value + 1e-9);
    }
}

TEST_CASE("norm is monotone under refinement")
{
    auto loop = unit_square_loop();
    auto fine = refine_onto(loop, *kuhn_complex(2, 2));
    CHECK(flat_norm(fine).value <= flat_norm(loop).value + 1e-9);
}

TEST_CASE("preconditions")
{
    PolyChain circ(GroupTag::circle(), 2, 1, 1);
    CHECK_THROWS_AS(flat_norm(circ), Error);
    PolyChain soup(GroupTag::real(), 2, 1);
    CHECK_THROWS_AS(flat_norm(soup), Error);
    PolyChain top(GroupTag::real(), 2, 2, 1);
    CHECK_THROWS_AS(flat_norm(top), Error);
    CHECK_THROWS_AS(flat_norm_oracle(PolyChain(GroupTag::real(), 2, 1, 3)), Error);
}
