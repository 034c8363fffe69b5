#include "flatchain/lifting.hpp"

#include <algorithm>
#include <map>

namespace flatchain {

namespace {

const char* kModule = "lifting";

void require_group(const PolyChain& p, GroupTag::Kind kind, const char* what)
{
    if (p.group().kind != kind)
        fail(kModule, std::string(what) + " expects a " +
                          (kind == GroupTag::Kind::Circle ? "circle" : "real") + " chain, got " + p.group().name());
}

double ratio_of(const SurdSum& out, const SurdSum& in)
{
    return in.is_zero() ? 0.0 : out.to_double() / in.to_double();
}

// Coefficient relative to the standard orientation of ℝ^d.
Coefficient positive_part(const Simplex& s, const Coefficient& g)
{
    return orientation_sign(s) < 0 ? neg(g) : g;
}

PolyChain lift_at(const PolyChain& p, const Rational& theta)
{
    PolyChain out(GroupTag::real(), p.ambient_dim(), p.dim(), p.complex_resolution());
    for (const auto& [s, g] : p.terms()) {
        const int o = orientation_sign(s);
        Rational v = (o < 0 ? neg(g) : g).value();
        if (v > theta)
            v -= 1;
        out.add_term(s, o < 0 ? Rational(-v) : v);
    }
    return out;
}

void require_top_circle(const PolyChain& p)
{
    require_group(p, GroupTag::Kind::Circle, "threshold lift");
    if (p.dim() != p.ambient_dim())
        fail(kModule, "threshold lift needs a top-dimensional chain (k = d)");
}

SurdSum boundary_mass(const PolyChain& p) { return p.dim() == 0 ? SurdSum() : mass_exact(boundary(p)); }

void check_integral_boundary(const PolyChain& q)
{
    require_group(q, GroupTag::Kind::Real, "bounded-ratio correction");
    if (q.dim() == 0)
        fail(kModule, "bounded-ratio correction needs k ≥ 1");
    const PolyChain bq = boundary(q);
    for (const auto& [s, g] : bq.terms())
        if (!is_integer(g.value()))
            fail(kModule, "precondition π(∂Q) = 0 violated: boundary multiplicity " + to_string(g.value()) +
                              " is not an integer");
}

}   // namespace

PolyChain project_chain(const PolyChain& p)
{
    if (p.group().kind != GroupTag::Kind::Real && p.group().kind != GroupTag::Kind::Integer)
        fail(kModule, "projection expects a real or integer chain, got " + p.group().name());
    return map_coefficients(p, GroupTag::circle(), [](const Coefficient& g) {
        return project(Coefficient(GroupTag::real(), g.value()));
    });
}

PolyChain lift_coefficientwise(const PolyChain& p)
{
    require_group(p, GroupTag::Kind::Circle, "coefficient-wise lift");
    return map_coefficients(p, GroupTag::real(), [](const Coefficient& g) { return section(g); });
}

bool projects_to_zero(const PolyChain& p)
{
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const auto& t) { return is_integer(t.second.value()); });
}

PolyChain lift_top_threshold(const PolyChain& p, const Rational& theta)
{
    require_top_circle(p);
    if (theta <= Rational(1, 4) || theta >= Rational(3, 4))
        fail(kModule, "threshold " + to_string(theta) + " outside (1/4, 3/4)");
    for (const auto& [s, g] : p.terms())
        if (positive_part(s, g).value() == theta)
            fail(kModule, "threshold " + to_string(theta) + " coincides with a coefficient");
    return lift_at(p, theta);
}

ThresholdProfile threshold_profile(const PolyChain& p)
{
    require_top_circle(p);
    const Rational lo(1, 4), hi(3, 4);
    ThresholdProfile prof;
    std::set<Rational> cuts;
    for (const auto& [s, g] : p.terms()) {
        Rational v = positive_part(s, g).value();
        if (v > lo && v < hi)
            cuts.insert(v);
    }
    prof.breakpoints.assign(cuts.begin(), cuts.end());
    std::vector<Rational> ends{lo};
    ends.insert(ends.end(), cuts.begin(), cuts.end());
    ends.push_back(hi);
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
        ThresholdInterval iv{ends[i], ends[i + 1], (ends[i] + ends[i + 1]) / 2, {}};
        iv.boundary_mass = boundary_mass(lift_at(p, iv.mid));
        prof.integral += iv.boundary_mass * (iv.hi - iv.lo);
        prof.intervals.push_back(std::move(iv));
    }
    return prof;
}

TopLift lift_top_optimal(const PolyChain& p)
{
    TopLift out;
    out.profile = threshold_profile(p);
    const ThresholdInterval* best = nullptr;
    for (const auto& iv : out.profile.intervals)
        if (!best || iv.boundary_mass < best->boundary_mass)
            best = &iv;
    out.theta = best->mid;
    out.chain = lift_at(p, out.theta);
    return out;
}

namespace {

using Edge = std::pair<Point, Point>;   // canonical order

// A closed walk through the fractional edges, as (edge, sign) pairs.
std::vector<std::pair<Simplex, int>> find_loop(const PolyChain& frac)
{
    std::map<Point, std::vector<std::pair<Point, const Simplex*>>> adj;
    for (const auto& [s, g] : frac.terms()) {
        adj[s[0]].emplace_back(s[1], &s);
        adj[s[1]].emplace_back(s[0], &s);
    }
    struct Frame
    {
        Point v;
        const Simplex* via;
        std::size_t next;
    };
    std::map<Point, std::size_t> on_stack;
    std::set<Point> done;
    std::vector<Frame> stack{{adj.begin()->first, nullptr, 0}};
    on_stack[adj.begin()->first] = 0;
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto& nbrs = adj[top.v];
        if (top.next == nbrs.size()) {
            on_stack.erase(top.v);
            done.insert(top.v);
            stack.pop_back();
            continue;
        }
        const auto& [w, e] = nbrs[top.next++];
        if (e == top.via || done.count(w))
            continue;
        if (auto it = on_stack.find(w); it != on_stack.end()) {
            std::vector<std::pair<Simplex, int>> loop;
            for (std::size_t i = it->second + 1; i < stack.size(); ++i) {
                const Simplex& s = *stack[i].via;
                loop.emplace_back(s, s[0] == stack[i - 1].v ? 1 : -1);
            }
            loop.emplace_back(*e, (*e)[0] == stack.back().v ? 1 : -1);
            return loop;
        }
        on_stack[w] = stack.size();
        stack.push_back({w, e, 0});
    }
    return {};
}

PolyChain fractional_part(const PolyChain& q)
{
    PolyChain f = q.empty_like();
    for (const auto& [s, g] : q.terms())
        if (!is_integer(g.value()))
            f.add_term(s, g);
    return f;
}

}   // namespace

BrResult loop_cancel(const PolyChain& q)
{
    check_integral_boundary(q);
    if (q.dim() != 1)
        fail(kModule, "loop cancellation needs k = 1");
    BrResult res;
    res.report.operation = "cancel-loops";
    res.report.d_constant = 1;
    res.report.bound = 1;
    res.report.proof_bound = 1;
    res.chain = q;
    const std::size_t max_passes = q.size();
    for (PolyChain frac = fractional_part(q); !frac.empty(); frac = fractional_part(res.chain)) {
        if (res.report.loops.size() >= max_passes)
            throw Error(Error::Kind::Solver, kModule, "loop cancellation exceeded its pass bound");
        auto loop = find_loop(frac);
        if (loop.empty())
            throw Error(Error::Kind::Solver, kModule, "fractional support contains no loop");
        std::optional<Rational> down, up;
        SurdSum tilt;
        for (const auto& [s, sign] : loop) {
            Rational h = frac.coefficient(s).value() * sign;
            Rational a = flatchain::frac(h), b = Rational(ceil_int(h)) - h;
            if (!down || a < *down)
                down = a;
            if (!up || b < *up)
                up = b;
            tilt += h > 0 ? volume(s) : -volume(s);
        }
        const bool plus = tilt.sign() >= 0;
        const Rational step = plus ? -*down : *up;
        for (const auto& [s, sign] : loop)
            res.chain.add_term(s, step * sign);
        res.report.loops.push_back({loop.size(), plus ? *down : *up, plus});
    }
    res.report.mass_in = mass_exact(q);
    res.report.mass_out = mass_exact(res.chain);
    res.report.boundary_mass_in = res.report.boundary_mass_out = boundary_mass(q);
    res.report.ratio = ratio_of(res.report.mass_out, res.report.mass_in);
    res.report.boundary_ratio = ratio_of(res.report.boundary_mass_out, res.report.boundary_mass_in);
    res.report.verdict = projects_to_zero(res.chain) && boundary(res.chain) == boundary(q) &&
                         res.report.mass_out <= res.report.mass_in;
    return res;
}

namespace {

const long kPrimes[] = {7, 11, 13, 17, 19, 23};

Point cone_apex(const PolyChain& base)
{
    const int d = base.ambient_dim();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Point apex(d, Rational(1, 2));
        if (attempt > 0)
            for (int i = 0; i < d; ++i)
                apex[i] += Rational(1, kPrimes[i % 6] * (attempt + 2));
        bool ok = std::none_of(base.terms().begin(), base.terms().end(), [&](const auto& t) {
            return is_degenerate(cone_simplex(apex, t.first));
        });
        if (ok)
            return apex;
    }
    throw Error(Error::Kind::Solver, kModule, "no non-degenerate cone apex found");
}

// The d-chain on the complex with the same density as `soup`.
PolyChain rasterize(const PolyChain& soup, const GridComplex& cx)
{
    const int d = cx.dim();
    PolyChain out(soup.group(), d, d, cx.resolution());
    for (std::size_t id = 0; id < cx.count(d); ++id) {
        Simplex cell = cx.simplex(d, static_cast<int>(id));
        std::optional<Coefficient> dens;
        for (int attempt = 0; !dens && attempt < 32; ++attempt) {
            Point p(d, Rational(0));
            Rational total = 0;
            for (int i = 0; i <= d; ++i) {
                Rational w = Rational(1) + Rational((i + 1) * (attempt + 1), kPrimes[(i + attempt) % 6]);
                p = p + w * cell[i];
                total += w;
            }
            dens = top_density(soup, Rational(1) / total * p);
        }
        if (!dens)
            throw Error(Error::Kind::Solver, kModule, "could not sample the cone density");
        if (!dens->is_zero())
            out.add_term(cell, orientation_sign(cell) < 0 ? neg(*dens) : *dens);
    }
    return out;
}

BrResult cone_route(const PolyChain& q)
{
    check_integral_boundary(q);
    const int d = q.ambient_dim();
    if (q.dim() != d - 1)
        fail(kModule, "cone route needs k = d − 1");
    if (!q.complex_resolution())
        fail(kModule, "cone route needs a chain carried by a kuhn complex");
    BrResult res;
    res.report.operation = "br-correct";
    res.report.d_constant = 6;
    res.report.bound = 6;
    res.report.proof_bound = 6;
    res.chain = q;
    PolyChain base = project_chain(q);
    if (!base.empty()) {
        auto cx = kuhn_complex(d, *q.complex_resolution());
        PolyChain s = rasterize(cone(cone_apex(base), base).chain, *cx);
        if (!(boundary(s) == base))
            throw Error(Error::Kind::Solver, kModule, "rasterized cone does not fill π(Q)");
        TopLift lifted = lift_top_optimal(s);
        res.report.theta = lifted.theta;
        res.chain = q - boundary(lifted.chain);
    }
    res.report.mass_in = mass_exact(q);
    res.report.mass_out = mass_exact(res.chain);
    res.report.boundary_mass_in = res.report.boundary_mass_out = boundary_mass(q);
    res.report.ratio = ratio_of(res.report.mass_out, res.report.mass_in);
    res.report.boundary_ratio = ratio_of(res.report.boundary_mass_out, res.report.boundary_mass_in);
    res.report.verdict = projects_to_zero(res.chain) && boundary(res.chain) == boundary(q) &&
                         res.report.mass_out <= res.report.mass_in * Rational(6);
    return res;
}

}   // namespace

BrResult br_correct(const PolyChain& q, BrRoute route)
{
    const int d = q.ambient_dim(), k = q.dim();
    if (route == BrRoute::Auto) {
        if (k == 1)
            route = BrRoute::Loop;
        else if (k == d - 1)
            route = BrRoute::Cone;
        else
            fail(kModule, "no bounded-ratio correction is available for k = " + std::to_string(k) +
                              " (only k = 1 and k = d − 1)");
    }
    if (route == BrRoute::Loop) {
        auto r = loop_cancel(q);
        r.report.operation = "br-correct";
        return r;
    }
    return cone_route(q);
}

FlatLift lift_flat(const PolyChain& t, const Rational& epsilon, const std::optional<FlatDecomposition>& decomposition,
                   BrRoute route)
{
    require_group(t, GroupTag::Kind::Circle, "flat lift");
    if (epsilon <= 0)
        fail(kModule, "epsilon must be positive");
    const int d = t.ambient_dim(), k = t.dim();
    FlatLift out;
    LiftReport& rep = out.report;
    rep.operation = "lift";
    rep.mass_in = mass_exact(t);
    if (k == 0 || k == d) {
        out.chain = lift_coefficientwise(t);
        rep.bound = rep.proof_bound = 1;
    } else if (k == 1 || k == d - 1) {
        FlatDecomposition dec = decomposition.value_or(
            FlatDecomposition{t, PolyChain(GroupTag::circle(), d, k + 1, t.complex_resolution())});
        if (!(dec.r.group() == t.group()) || !(dec.s.group() == t.group()) || dec.r.dim() != k ||
            dec.s.dim() != k + 1)
            fail(kModule, "decomposition must consist of circle chains of dimensions k and k + 1");
        if (!(dec.r + boundary(dec.s) == t))
            fail(kModule, "decomposition does not satisfy T = R + ∂S");
        if (route == BrRoute::Auto)
            route = k == 1 ? BrRoute::Loop : BrRoute::Cone;
        rep.hypothesis_ok = mass_exact(dec.r) <= rep.mass_in * (1 + epsilon);
        out.z = lift_coefficientwise(dec.r);
        out.x = lift_coefficientwise(boundary(dec.s));
        out.y = out.x.empty_like();
        if (!out.x.empty()) {
            auto br = br_correct(out.x, route);
            out.y = br.chain;
            rep.theta = br.report.theta;
            rep.loops = br.report.loops;
        }
        out.chain = out.z + out.x - out.y;
        rep.d_constant = route == BrRoute::Loop ? 1 : 6;
        double f = 1 + to_double(epsilon);
        rep.bound = (2 + 2 * rep.d_constant) * f;
        rep.proof_bound = (3 + 2 * rep.d_constant) * f;
    } else {
        fail(kModule, "lifting is available for k ∈ {0, 1, d−1, d}, got k = " + std::to_string(k));
    }
    rep.mass_out = mass_exact(out.chain);
    rep.boundary_mass_in = boundary_mass(t);
    rep.boundary_mass_out = boundary_mass(out.chain);
    rep.ratio = ratio_of(rep.mass_out, rep.mass_in);
    rep.boundary_ratio = ratio_of(rep.boundary_mass_out, rep.boundary_mass_in);
    Rational exact_bound = k == 0 || k == d ? Rational(1) : Rational(2 + 2 * rep.d_constant) * (1 + epsilon);
    rep.verdict = project_chain(out.chain) == t && rep.mass_out <= rep.mass_in * exact_bound;
    return out;
}

}   // namespace flatchain
