#include "flatchain/approx.hpp"

#include <algorithm>

namespace flatchain {

namespace {

const char* kModule = "approx";

struct Box
{
    Point lo, hi;
};

Box bounding_box(const Simplex& s)
{
    Box b{s[0], s[0]};
    for (const auto& v : s.vertices())
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < b.lo[i])
                b.lo[i] = v[i];
            if (v[i] > b.hi[i])
                b.hi[i] = v[i];
        }
    return b;
}

bool boxes_meet(const Box& a, const Box& b)
{
    for (std::size_t i = 0; i < a.lo.size(); ++i)
        if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i])
            return false;
    return true;
}

std::vector<std::pair<Simplex, Box>> boxed(const std::set<Simplex>& cells)
{
    std::vector<std::pair<Simplex, Box>> out;
    for (const auto& s : cells)
        if (!is_degenerate(s))
            out.emplace_back(s, bounding_box(s));
    return out;
}

bool singular_to(const PolyChain& p, const std::vector<std::pair<Simplex, Box>>& ref)
{
    const int k = p.dim();
    for (const auto& [s, g] : p.terms()) {
        if (is_degenerate(s))
            continue;
        Box bs = bounding_box(s);
        for (const auto& [r, br] : ref)
            if (boxes_meet(bs, br) && overlap_dim(s, r) >= k)
                return false;
    }
    return true;
}

Point cube_center(int d) { return Point(d, Rational(1, 2)); }

}   // namespace

PolyChain prism(const PolyChain& c, const AffineMap& g)
{
    const int k = c.dim();
    if (k >= c.ambient_dim())
        fail(kModule, "prism over a top-dimensional chain has no room");
    PolyChain out(c.group(), c.ambient_dim(), k + 1);
    for (const auto& [s, coeff] : c.terms()) {
        for (int i = 0; i <= k; ++i) {
            std::vector<Point> verts;
            for (int j = 0; j <= i; ++j)
                verts.push_back(g(s[j]));
            for (int j = i; j <= k; ++j)
                verts.push_back(s[j]);
            out.add_term(Simplex(std::move(verts)), i % 2 ? neg(coeff) : coeff);
        }
    }
    return out;
}

ShrinkResult shrink_toward(const PolyChain& p, const Point& center, const Rational& lambda)
{
    if (lambda <= 0 || lambda > 1)
        fail(kModule, "shrink ratio " + to_string(lambda) + " outside (0, 1]");
    if (static_cast<int>(center.size()) != p.ambient_dim())
        fail(kModule, "shrink center has the wrong dimension");
    for (const auto& x : center)
        if (x <= 0 || x >= 1)
            fail(kModule, "shrink center must lie in the open unit cube");
    if (lambda == 1)
        return {p, SurdSum()};
    ShrinkResult r;
    r.chain = affine_pushforward(p, AffineMap::homothety(center, lambda));
    SurdSum m = mass_exact(p);
    if (p.dim() > 0)
        m += mass_exact(boundary(p));
    r.bound = unit_cube_diameter(p.ambient_dim()) * m * (2 * (1 - lambda));
    return r;
}

std::vector<Point> direction_lattice(int d, int shells)
{
    if (d == 1)
        return {Point{Rational(1)}, Point{Rational(-1)}};
    std::vector<Point> out;
    std::set<Point> seen;
    const int m = d - 1;
    for (int r = 0; r <= shells; ++r) {
        std::vector<int> u(m, -r);
        for (;;) {
            int top = 0;
            for (int x : u)
                top = std::max(top, std::abs(x));
            if (top == r) {
                long sq = 0;
                for (int x : u)
                    sq += static_cast<long>(x) * x;
                Point v(d);
                for (int i = 0; i < m; ++i)
                    v[i] = Rational(2 * u[i], sq + 1);
                v[m] = Rational(sq - 1, sq + 1);
                if (seen.insert(v).second)
                    out.push_back(std::move(v));
            }
            int i = 0;
            while (i < m && u[i] == r)
                u[i++] = -r;
            if (i == m)
                break;
            ++u[i];
        }
    }
    return out;
}

bool is_singular_to(const PolyChain& p, const std::set<Simplex>& reference)
{
    return singular_to(p, boxed(reference));
}

TranslateResult singular_translate(const PolyChain& p, const std::set<Simplex>& reference, const Rational& t_max,
                                   int max_shells)
{
    const int d = p.ambient_dim();
    if (t_max <= 0)
        fail(kModule, "translation bound must be positive");
    auto ref = boxed(reference);
    if (ref.empty() || p.empty())
        return {p, Point(d, Rational(0)), Rational(0)};
    if (p.dim() >= d)
        fail(kModule, "no direction avoids a top-dimensional chain");

    std::vector<Simplex> own;
    for (const auto& [s, g] : p.terms())
        if (!is_degenerate(s))
            own.push_back(s);

    for (const auto& v : direction_lattice(d, max_shells)) {
        if (std::any_of(own.begin(), own.end(), [&](const Simplex& s) { return is_tangent(v, s); }))
            continue;
        Rational t = t_max;
        for (int h = 0; h < 40; ++h, t /= 2) {
            PolyChain moved = affine_pushforward(p, AffineMap::translation(t * v));
            if (singular_to(moved, ref))
                return {std::move(moved), v, t};
        }
    }
    throw Error(Error::Kind::Solver, kModule, "no admissible translation within the direction lattice");
}

TranslateResult singular_translate(const PolyChain& p, const MassMeasure& reference, const Rational& t_max,
                                   int max_shells)
{
    std::set<Simplex> cells;
    for (const auto& [s, w] : reference.weights)
        if (!w.is_zero())
            cells.insert(s);
    return singular_translate(p, cells, t_max, max_shells);
}

SurdSum ApproxBudget::schedule(int n, const SurdSum& mass_t) const
{
    Rational f = epsilon / 4;
    for (int i = 0; i < n; ++i)
        f /= 2;
    return mass_t * f;
}

DisjointResult disjoint_representative(const PolyChain& t, const ApproxBudget& budget)
{
    const int d = t.ambient_dim(), k = t.dim();
    if (k >= d)
        fail(kModule, "disjoint representative needs k < d");
    if (budget.epsilon <= 0)
        fail(kModule, "epsilon must be positive");

    DisjointResult res;
    res.r = PolyChain(t.group(), d, k);
    res.residual = res.r;
    res.filling = PolyChain(t.group(), d, k + 1);
    res.report.mass_t = mass_exact(t);
    if (t.empty())
        return res;

    const std::set<Simplex> reference = support(t);
    const Point center = cube_center(d);
    PolyChain prev = t;
    Rational delta(1, 4);   // later stages resume from the last accepted value
    for (int n = 0; n <= budget.max_stages && !prev.empty(); ++n) {
        Stage st;
        st.eps = budget.schedule(n, res.report.mass_t);
        const PolyChain prev_boundary = k > 0 ? boundary(prev) : PolyChain(t.group(), d, 0);
        bool accepted = false;
        AffineMap g;
        for (int h = 0; h <= budget.max_halvings; ++h, delta /= 2) {
            st.lambda = 1 - delta;
            AffineMap shrink = AffineMap::homothety(center, st.lambda);
            auto tr = singular_translate(affine_pushforward(prev, shrink), reference, delta / 2);
            g = shrink.then(AffineMap::translation(tr.t * tr.direction));
            st.r = k > 0 ? prism(prev_boundary, g) : PolyChain(t.group(), d, k);
            // cheap rejection before the exact comparison
            if (mass(st.r) > 1.01 * st.eps.to_double())
                continue;
            st.mass_r = mass_exact(st.r);
            if (st.mass_r <= st.eps) {
                st.p = std::move(tr.chain);
                st.direction = tr.direction;
                st.t = tr.t;
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw Error(Error::Kind::Solver, kModule,
                        "stage " + std::to_string(n) + ": remainder above its budget after all halvings");
        st.s = prism(prev, g);
        st.mass_p = mass_exact(st.p);
        st.mass_s = mass_exact(st.s);
        res.r = res.r + st.p;
        res.filling = res.filling + st.s;
        prev = st.r;
        res.report.stages.push_back(std::move(st));
    }
    res.residual = prev;
    res.r = res.r + prev;
    res.report.residual_bound = prev.empty() ? SurdSum() : res.report.stages.back().eps;
    res.report.mass_bound = res.report.mass_t * (1 + budget.epsilon) + res.report.residual_bound;
    return res;
}

CycleExtension cycle_extension(const PolyChain& t, const ApproxBudget& budget)
{
    CycleExtension ce;
    ce.representative = disjoint_representative(t, budget);
    ce.t_prime = t - ce.representative.r;
    ce.e = support(t);
    ce.defect = ce.representative.report.residual_bound;
    auto ref = boxed(ce.e);
    for (const auto& [s, g] : ce.representative.r.terms()) {
        if (is_degenerate(s))
            continue;
        Box bs = bounding_box(s);
        for (const auto& [r, br] : ref)
            if (boxes_meet(bs, br) && overlap_dim(s, r) >= t.dim()) {
                ce.measured_defect += volume(s) * norm(g);
                break;
            }
    }
    return ce;
}

TelescopeResult telescope(const std::vector<PolyChain>& list, double delta, const FlatOptions& opt)
{
    if (list.empty())
        fail(kModule, "telescope needs at least one chain");
    const PolyChain& first = list.front();
    TelescopeResult res;
    res.r = first;
    res.s = PolyChain(first.group(), first.ambient_dim(), first.dim() + 1, first.complex_resolution());
    res.partial_masses.push_back(mass_exact(res.r));
    double bound = 1;
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
        bound /= 2;
        auto w = flat_norm(list[i + 1] - list[i], opt);
        if (w.value > bound * (1 + delta))
            fail(kModule, "decay hypothesis violated at step " + std::to_string(i) + ": flat distance " +
                              std::to_string(w.value) + " > " + std::to_string(bound));
        res.flat_values.push_back(w.value);
        res.r = res.r + w.remainder;
        res.s = res.s + w.filling;
        res.filling_mass += mass_exact(w.filling);
        res.partial_masses.push_back(mass_exact(res.r));
    }
    if (!(res.r + boundary(res.s) == list.back()))
        throw Error(Error::Kind::Solver, kModule, "telescoped identity failed to replay");
    return res;
}

}   // namespace flatchain
