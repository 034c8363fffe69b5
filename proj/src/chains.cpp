#include "flatchain/chains.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

namespace flatchain {

PolyChain::PolyChain(GroupTag group, int ambient_dim, int dim, std::optional<int> complex_n)
    : group_(group), d_(ambient_dim), k_(dim), complex_n_(complex_n)
{
    if (dim < 0 || dim > ambient_dim)
        fail("chains", "chain dimension " + std::to_string(dim) + " outside [0, " +
                           std::to_string(ambient_dim) + "]");
}

void PolyChain::add_term(const Simplex& s, const Coefficient& g)
{
    if (!(g.group() == group_))
        fail("chains", "coefficient group " + g.group().name() + " does not match chain group " +
                           group_.name());
    if (s.dim() != k_ || s.ambient_dim() != d_)
        fail("chains", "simplex shape does not match chain (d=" + std::to_string(d_) +
                           ", k=" + std::to_string(k_) + ")");
    if (g.is_zero())
        return;
    std::vector<Point> v = s.vertices();
    int parity = sort_parity(v);
    if (parity == 0)
        return;
    Coefficient signed_g = parity > 0 ? g : neg(g);
    Simplex key(std::move(v));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), signed_g);
        return;
    }
    it->second = add(it->second, signed_g);
    if (it->second.is_zero())
        terms_.erase(it);
}

Coefficient PolyChain::coefficient(const Simplex& s) const
{
    std::vector<Point> v = s.vertices();
    int parity = sort_parity(v);
    if (parity == 0)
        return Coefficient::zero(group_);
    auto it = terms_.find(Simplex(std::move(v)));
    if (it == terms_.end())
        return Coefficient::zero(group_);
    return parity > 0 ? it->second : neg(it->second);
}

namespace {

void check_compatible(const PolyChain& a, const PolyChain& b)
{
    if (!(a.group() == b.group()))
        fail("chains", "group mismatch: " + a.group().name() + " vs " + b.group().name());
    if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim())
        fail("chains", "dimension mismatch between chains");
    if (a.complex_resolution() && b.complex_resolution() &&
        *a.complex_resolution() != *b.complex_resolution())
        fail("chains", "chains live on different complexes");
}

std::optional<int> common_complex(const PolyChain& a, const PolyChain& b)
{
    if (a.complex_resolution() && b.complex_resolution())
        return a.complex_resolution();
    // An empty chain does not constrain the carrier.
    if (a.empty())
        return b.complex_resolution();
    if (b.empty())
        return a.complex_resolution();
    return std::nullopt;
}

}   // namespace

PolyChain add_chains(const PolyChain& a, const PolyChain& b)
{
    check_compatible(a, b);
    PolyChain out = a;
    out.set_complex_resolution(common_complex(a, b));
    for (const auto& [s, g] : b.terms())
        out.add_term(s, g);
    return out;
}

PolyChain negate(const PolyChain& a)
{
    return map_coefficients(a, a.group(), [](const Coefficient& g) { return neg(g); });
}

PolyChain subtract(const PolyChain& a, const PolyChain& b) { return add_chains(a, negate(b)); }

PolyChain scale(const PolyChain& a, const Rational& s)
{
    return map_coefficients(a, a.group(), [&](const Coefficient& g) { return flatchain::scale(g, s); });
}

PolyChain operator+(const PolyChain& a, const PolyChain& b) { return add_chains(a, b); }
PolyChain operator-(const PolyChain& a, const PolyChain& b) { return subtract(a, b); }
PolyChain operator-(const PolyChain& a) { return negate(a); }

PolyChain boundary(const PolyChain& c)
{
    if (c.dim() == 0)
        fail("chains", "boundary of a 0-chain is undefined");
    PolyChain out(c.group(), c.ambient_dim(), c.dim() - 1, c.complex_resolution());
    for (const auto& [s, g] : c.terms())
        for (int i = 0; i <= s.dim(); ++i)
            out.add_term(s.face(i), (i % 2) ? neg(g) : g);
    return out;
}

SurdSum mass_exact(const PolyChain& c)
{
    SurdSum total;
    for (const auto& [s, g] : c.terms())
        total += volume(s) * norm(g);
    return total;
}

namespace {

// Gram determinant in double precision; used only for quick estimates.
double fast_volume(const Simplex& s)
{
    const int k = s.dim(), d = s.ambient_dim();
    if (k == 0)
        return 1;
    std::vector<std::vector<double>> e(k, std::vector<double>(d));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < d; ++j)
            e[i][j] = to_double(s[i + 1][j] - s[0][j]);
    std::vector<std::vector<double>> g(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int t = 0; t < d; ++t)
                g[i][j] += e[i][t] * e[j][t];
    double det = 1;
    for (int c = 0; c < k; ++c) {
        int piv = c;
        for (int r = c + 1; r < k; ++r)
            if (std::fabs(g[r][c]) > std::fabs(g[piv][c]))
                piv = r;
        if (g[piv][c] == 0)
            return 0;
        std::swap(g[piv], g[c]);
        det *= g[c][c];
        for (int r = c + 1; r < k; ++r) {
            double f = g[r][c] / g[c][c];
            for (int t = c; t < k; ++t)
                g[r][t] -= f * g[c][t];
        }
    }
    double fact = 1;
    for (int i = 2; i <= k; ++i)
        fact *= i;
    return std::sqrt(std::fabs(det)) / fact;
}

}   // namespace

double mass(const PolyChain& c)
{
    double total = 0;
    for (const auto& [s, g] : c.terms())
        total += fast_volume(s) * to_double(norm(g));
    return total;
}

SurdSum MassMeasure::measure_of(const std::set<Simplex>& cells) const
{
    SurdSum total;
    for (const auto& [s, w] : weights)
        if (cells.count(s))
            total += w;
    return total;
}

MassMeasure mass_measure(const PolyChain& c)
{
    MassMeasure m;
    for (const auto& [s, g] : c.terms()) {
        SurdSum w = volume(s) * norm(g);
        m.total += w;
        m.weights.emplace_back(s, std::move(w));
    }
    return m;
}

PolyChain restrict_to(const PolyChain& c, const GridComplex& complex, const std::set<int>& cell_ids)
{
    for (int id : cell_ids)
        if (id < 0 || id >= static_cast<int>(complex.count(c.dim())))
            fail("chains", "unknown cell id " + std::to_string(id));
    PolyChain out = c.empty_like();
    for (const auto& [s, g] : c.terms()) {
        auto loc = complex.locate(s);
        if (!loc)
            fail("chains", "restriction needs a chain carried by the complex");
        if (cell_ids.count(loc->id))
            out.add_term(s, g);
    }
    return out;
}

PolyChain restrict_to(const PolyChain& c, const std::set<Simplex>& cells)
{
    std::set<Simplex> canonical;
    for (const auto& s : cells) {
        auto v = s.vertices();
        if (sort_parity(v) != 0)
            canonical.insert(Simplex(std::move(v)));
    }
    PolyChain out = c.empty_like();
    for (const auto& [s, g] : c.terms())
        if (canonical.count(s))
            out.add_term(s, g);
    return out;
}

namespace {

struct SubPiece
{
    std::vector<RVector> points;   // coordinates in the standard simplex frame
    int sign;
};

// Edgewise subdivision of Δ_k = {1 ≥ x_1 ≥ … ≥ x_k ≥ 0}: the Kuhn
// simplices of [0,1]^k at resolution 2 lying inside Δ_k.
const std::vector<SubPiece>& subdivision_pattern(int k)
{
    static std::map<int, std::vector<SubPiece>> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(k);
    if (it != cache.end())
        return it->second;
    std::vector<SubPiece> pieces;
    std::vector<int> perm(k);
    for (int cube = 0; cube < (1 << k); ++cube) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<RVector> pts;
            RVector x(k);
            for (int i = 0; i < k; ++i)
                x[i] = Rational((cube >> (k - 1 - i)) & 1, 2);
            pts.push_back(x);
            for (int j = 0; j < k; ++j) {
                x[perm[j]] += Rational(1, 2);
                pts.push_back(x);
            }
            bool inside = true;
            for (const auto& p : pts)
                for (int i = 0; i + 1 < k; ++i)
                    if (p[i] < p[i + 1])
                        inside = false;
            if (!inside)
                continue;
            RMatrix e;
            for (int j = 1; j <= k; ++j)
                e.push_back(pts[j] - pts[0]);
            Rational det = determinant(e);
            pieces.push_back({std::move(pts), det > 0 ? 1 : -1});
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return cache.emplace(k, std::move(pieces)).first->second;
}

}   // namespace

PolyChain subdivide(const PolyChain& c)
{
    PolyChain out(c.group(), c.ambient_dim(), c.dim());
    const int k = c.dim();
    if (k == 0) {
        for (const auto& [s, g] : c.terms())
            out.add_term(s, g);
        return out;
    }
    const auto& pattern = subdivision_pattern(k);
    for (const auto& [s, g] : c.terms()) {
        for (const auto& piece : pattern) {
            std::vector<Point> verts;
            for (const auto& x : piece.points) {
                // x = Σ λ_j u_j with λ_0 = 1 − x_1, λ_j = x_j − x_{j+1}.
                Point p = (1 - x[0]) * s[0];
                for (int j = 1; j <= k; ++j) {
                    Rational lam = x[j - 1] - (j < k ? x[j] : Rational(0));
                    p = p + lam * s[j];
                }
                verts.push_back(std::move(p));
            }
            out.add_term(Simplex(std::move(verts)), piece.sign > 0 ? g : neg(g));
        }
    }
    return out;
}

PolyChain affine_pushforward(const PolyChain& c, const AffineMap& f)
{
    PolyChain out(c.group(), c.ambient_dim(), c.dim());
    for (const auto& [s, g] : c.terms())
        out.add_term(apply(f, s), g);
    return out;
}

ConeResult cone(const Point& apex, const PolyChain& c)
{
    if (c.dim() >= c.ambient_dim())
        fail("geometry", "cone over a top-dimensional chain has no room");
    ConeResult r{PolyChain(c.group(), c.ambient_dim(), c.dim() + 1), 0};
    for (const auto& [s, g] : c.terms()) {
        Simplex cs = cone_simplex(apex, s);
        if (is_degenerate(cs) || cs.has_repeated_vertex()) {
            ++r.dropped;
            continue;
        }
        r.chain.add_term(cs, g);
    }
    return r;
}

std::vector<Coefficient> to_cells(const PolyChain& c, const GridComplex& complex)
{
    std::vector<Coefficient> v(complex.count(c.dim()), Coefficient::zero(c.group()));
    for (const auto& [s, g] : c.terms()) {
        auto loc = complex.locate(s);
        if (!loc)
            fail("chains", "simplex is not a cell of the kuhn complex (n=" +
                               std::to_string(complex.resolution()) + ")");
        v[loc->id] = loc->sign > 0 ? g : neg(g);
    }
    return v;
}

PolyChain from_cells(const std::vector<Coefficient>& values, GroupTag group, const GridComplex& complex, int k)
{
    PolyChain out(group, complex.dim(), k, complex.resolution());
    for (std::size_t id = 0; id < values.size(); ++id)
        if (!values[id].is_zero())
            out.add_term(complex.simplex(k, static_cast<int>(id)), values[id]);
    return out;
}

PolyChain attach(const PolyChain& c, const GridComplex& complex)
{
    if (c.ambient_dim() != complex.dim())
        fail("chains", "chain ambient dimension differs from complex dimension");
    for (const auto& [s, g] : c.terms())
        if (!complex.locate(s))
            fail("chains", "simplex is not a cell of the kuhn complex (n=" +
                               std::to_string(complex.resolution()) + ")");
    PolyChain out = c;
    out.set_complex_resolution(complex.resolution());
    return out;
}

PolyChain refine_onto(const PolyChain& c, const GridComplex& complex)
{
    const int k = c.dim();
    PolyChain out(c.group(), c.ambient_dim(), k, complex.resolution());
    for (const auto& [s, g] : c.terms()) {
        if (complex.locate(s)) {
            out.add_term(s, g);
            continue;
        }
        SurdSum covered;
        for (std::size_t id = 0; id < complex.count(k); ++id) {
            const auto& ids = complex.vertex_ids(k, static_cast<int>(id));
            std::vector<RVector> bary;
            bool inside = true;
            for (int v : ids) {
                auto b = barycentric(s, complex.vertex_point(v));
                if (!b || std::any_of(b->begin(), b->end(), [](const Rational& t) { return t < 0; })) {
                    inside = false;
                    break;
                }
                bary.push_back(std::move(*b));
            }
            if (!inside)
                continue;
            // Orientation of the cell relative to s, in s's barycentric frame.
            RMatrix m;
            for (int j = 1; j <= k; ++j) {
                RVector row(k);
                for (int i = 0; i < k; ++i)
                    row[i] = bary[j][i + 1] - bary[0][i + 1];
                m.push_back(std::move(row));
            }
            Rational det = k == 0 ? Rational(1) : determinant(m);
            if (det == 0)
                continue;
            out.add_term(complex.simplex(k, static_cast<int>(id)), det > 0 ? g : neg(g));
            covered += complex.volume(k, static_cast<int>(id));
        }
        if (covered != volume(s))
            fail("chains", "simplex is not a union of cells of the kuhn complex (n=" +
                               std::to_string(complex.resolution()) + ")");
    }
    return out;
}

std::optional<Coefficient> top_density(const PolyChain& c, const Point& p)
{
    if (c.dim() != c.ambient_dim())
        fail("chains", "density is defined for top-dimensional chains");
    Coefficient total = Coefficient::zero(c.group());
    for (const auto& [s, g] : c.terms()) {
        auto b = barycentric(s, p);
        if (!b)
            continue;   // degenerate simplex, measure zero
        bool strictly = true, outside = false;
        for (const auto& t : *b) {
            if (t < 0)
                outside = true;
            if (t <= 0)
                strictly = false;
        }
        if (outside)
            continue;
        if (!strictly)
            return std::nullopt;
        total = add(total, orientation_sign(s) > 0 ? g : neg(g));
    }
    return total;
}

std::set<Simplex> support(const PolyChain& c)
{
    std::set<Simplex> out;
    for (const auto& [s, g] : c.terms())
        out.insert(s);
    return out;
}

}   // namespace flatchain
