#include "flatchain/generators.hpp"

#include <algorithm>

namespace flatchain {

long uniform_int(Rng& rng, long lo, long hi)
{
    // Explicit reduction keeps sequences identical across standard libraries.
    const unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

Rational random_rational(Rng& rng, long max_num, long max_den)
{
    long den = uniform_int(rng, 1, max_den);
    long num = 0;
    while (num == 0)
        num = uniform_int(rng, -max_num, max_num);
    return Rational(num, den);
}

namespace {

std::vector<int> pick_cells(Rng& rng, std::size_t count, int terms)
{
    std::vector<int> ids(count);
    for (std::size_t i = 0; i < count; ++i)
        ids[i] = static_cast<int>(i);
    for (std::size_t i = 0; i + 1 < count; ++i)
        std::swap(ids[i], ids[i + static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(count - i - 1)))]);
    ids.resize(std::min<std::size_t>(count, static_cast<std::size_t>(std::max(terms, 0))));
    return ids;
}

Rational draw_value(Rng& rng, GroupTag group, long max_den)
{
    switch (group.kind) {
    case GroupTag::Kind::Circle: {
        long den = uniform_int(rng, 2, std::max(2L, max_den));
        return Rational(uniform_int(rng, 1, den - 1), den);
    }
    case GroupTag::Kind::Integer:
        return random_rational(rng, 3, 1);
    case GroupTag::Kind::ModP:
        return Rational(uniform_int(rng, 1, group.p - 1));
    case GroupTag::Kind::Real:
        break;
    }
    return random_rational(rng, 2 * max_den, max_den);
}

}   // namespace

PolyChain random_grid_chain(Rng& rng, GroupTag group, int d, int n, int k, int terms, long max_den)
{
    auto cx = kuhn_complex(d, n);
    PolyChain out(group, d, k, n);
    for (int id : pick_cells(rng, cx->count(k), terms))
        out.add_term(cx->simplex(k, id), draw_value(rng, group, max_den));
    return out;
}

PolyChain random_integral_boundary_chain(Rng& rng, int d, int n, int k, int fractional, int integral,
                                         long max_den)
{
    auto cx = kuhn_complex(d, n);
    PolyChain out(GroupTag::real(), d, k, n);
    for (int id : pick_cells(rng, cx->count(k), integral))
        out.add_term(cx->simplex(k, id), random_rational(rng, 2, 1));
    if (k < d) {
        PolyChain fill(GroupTag::real(), d, k + 1, n);
        for (int id : pick_cells(rng, cx->count(k + 1), fractional))
            fill.add_term(cx->simplex(k + 1, id), random_rational(rng, max_den, max_den));
        out = out + boundary(fill);
    }
    return out;
}

PolyChain random_flat_instance(Rng& rng, int d, int n, int k, int terms, long max_den)
{
    PolyChain out = random_grid_chain(rng, GroupTag::real(), d, n, k, std::max(1, terms / 2), max_den);
    if (k < d)
        out = out + boundary(random_grid_chain(rng, GroupTag::real(), d, n, k + 1, terms - terms / 2, max_den));
    return out;
}

GridFunction random_grid_function(Rng& rng, int d, int n, bool integral, long max_den)
{
    GridFunction u{d, n, {}};
    std::vector<Rational> pool(static_cast<std::size_t>(uniform_int(rng, 1, 5)));
    for (auto& v : pool)
        v = integral ? Rational(uniform_int(rng, -4, 4)) : Rational(uniform_int(rng, -4 * max_den, 4 * max_den), uniform_int(rng, 1, max_den));
    std::size_t cells = 1;
    for (int i = 0; i < d; ++i)
        cells *= static_cast<std::size_t>(n);
    for (std::size_t c = 0; c < cells; ++c)
        u.values.push_back(pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(pool.size()) - 1))]);
    return u;
}

DecomposedInstance random_decomposed_circle_chain(Rng& rng, int d, int n, int k, const Rational& epsilon,
                                                  int terms, long max_den)
{
    for (int attempt = 0; attempt < 200; ++attempt) {
        PolyChain r = random_grid_chain(rng, GroupTag::circle(), d, n, k, std::max(1, terms / 2), max_den);
        PolyChain s = random_grid_chain(rng, GroupTag::circle(), d, n, k + 1, terms, max_den);
        PolyChain t = r + boundary(s);
        if (!t.empty() && mass_exact(r) <= mass_exact(t) * (1 + epsilon))
            return {t, {r, s}};
    }
    PolyChain t = random_grid_chain(rng, GroupTag::circle(), d, n, k, terms, max_den);
    return {t, {t, PolyChain(GroupTag::circle(), d, k + 1, n)}};
}

}   // namespace flatchain
