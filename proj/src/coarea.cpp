#include "flatchain/coarea.hpp"

#include <algorithm>
#include <functional>

namespace flatchain {

namespace {

const char* const kModule = "coarea";

// Σ_{cubes c with pred(u(c))} ±⟦simplices of c⟧ with the standard orientation.
PolyChain indicator(const GridFunction& u, GroupTag group, const std::function<bool(const Rational&)>& pred)
{
    auto cx = kuhn_complex(u.d, u.n);
    PolyChain out(group, u.d, u.d, u.n);
    for (std::size_t id = 0; id < cx->count(u.d); ++id) {
        const int top = static_cast<int>(id);
        if (!pred(u.at(static_cast<std::size_t>(cx->cube_of(top)))))
            continue;
        Simplex s = cx->simplex(u.d, top);
        out.add_term(s, Rational(orientation_sign(s)));
    }
    return out;
}

PolyChain as_real_scaled(const PolyChain& c, const Rational& w)
{
    return map_coefficients(c, GroupTag::real(), [&](const Coefficient& g) { return Coefficient(GroupTag::real(), w * g.value()); });
}

}   // namespace

void validate(const GridFunction& u)
{
    if (u.d < 1 || u.d > 3)
        fail(kModule, "grid function dimension must be 1, 2 or 3");
    if (u.n < 1)
        fail(kModule, "grid resolution must be positive");
    std::size_t cells = 1;
    for (int i = 0; i < u.d; ++i)
        cells *= static_cast<std::size_t>(u.n);
    if (u.values.size() != cells)
        fail(kModule, "expected " + std::to_string(cells) + " values, got " + std::to_string(u.values.size()));
}

PolyChain function_chain(const GridFunction& u)
{
    validate(u);
    auto cx = kuhn_complex(u.d, u.n);
    PolyChain out(GroupTag::real(), u.d, u.d, u.n);
    for (std::size_t id = 0; id < cx->count(u.d); ++id) {
        const int top = static_cast<int>(id);
        Simplex s = cx->simplex(u.d, top);
        out.add_term(s, orientation_sign(s) * u.at(static_cast<std::size_t>(cx->cube_of(top))));
    }
    return out;
}

PolyChain function_boundary(const GridFunction& u) { return boundary(function_chain(u)); }

std::vector<LevelSlice> level_slices(const GridFunction& u)
{
    validate(u);
    std::vector<Rational> levels = u.values;
    levels.push_back(0);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<LevelSlice> out;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        const Rational lo = levels[i - 1], hi = levels[i];
        PolyChain r;
        if (lo >= 0)
            r = boundary(indicator(u, GroupTag::integer(), [&](const Rational& v) { return v >= hi; }));
        else
            r = -boundary(indicator(u, GroupTag::integer(), [&](const Rational& v) { return v <= lo; }));
        out.push_back({lo, hi, std::move(r)});
    }
    return out;
}

CoareaReport verify_coarea(const GridFunction& u)
{
    CoareaReport rep;
    const PolyChain t = function_boundary(u);
    const auto slices = level_slices(u);
    rep.slices = slices.size();
    rep.mass = mass_exact(t);
    rep.multiplicity_one = true;
    rep.slices_closed = true;
    PolyChain sum = t.empty_like();
    for (const auto& sl : slices) {
        const Rational w = sl.t_high - sl.t_low;
        SurdSum m = mass_exact(sl.r);
        m *= w;
        rep.integral += m;
        sum = sum + as_real_scaled(sl.r, w);
        for (const auto& [s, g] : sl.r.terms())
            if (abs(g.value()) != 1)
                rep.multiplicity_one = false;
        if (u.d > 1 && !boundary(sl.r).empty())
            rep.slices_closed = false;
    }
    rep.gap = rep.mass;
    rep.gap -= rep.integral;
    rep.chain_identity = sum == t;
    return rep;
}

}   // namespace flatchain
