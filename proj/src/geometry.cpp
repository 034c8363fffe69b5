#include "flatchain/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace flatchain {

Point operator+(const Point& a, const Point& b)
{
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Point operator-(const Point& a, const Point& b)
{
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Point operator*(const Rational& s, const Point& a)
{
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        fail("geometry", "a simplex needs at least one vertex");
    const std::size_t d = vertices_[0].size();
    for (const auto& v : vertices_)
        if (v.size() != d)
            fail("geometry", "simplex vertices have inconsistent ambient dimension");
    if (vertices_.size() > d + 1)
        fail("geometry", "simplex dimension exceeds ambient dimension");
}

RMatrix Simplex::edge_matrix() const
{
    RMatrix m;
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        m.push_back(vertices_[i] - vertices_[0]);
    return m;
}

Simplex Simplex::face(int i) const
{
    std::vector<Point> v;
    v.reserve(vertices_.size() - 1);
    for (int j = 0; j < static_cast<int>(vertices_.size()); ++j)
        if (j != i)
            v.push_back(vertices_[j]);
    return Simplex(std::move(v));
}

bool Simplex::has_repeated_vertex() const
{
    auto sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Rational squared_volume(const Simplex& s)
{
    const int k = s.dim();
    if (k == 0)
        return 1;
    RMatrix e = s.edge_matrix();
    RMatrix gram(k, RVector(k));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Rational dot = 0;
            for (std::size_t c = 0; c < e[i].size(); ++c)
                dot += e[i][c] * e[j][c];
            gram[i][j] = gram[j][i] = dot;
        }
    Rational fact = 1;
    for (int i = 2; i <= k; ++i)
        fact *= i;
    return determinant(std::move(gram)) / (fact * fact);
}

SurdSum volume(const Simplex& s) { return SurdSum::sqrt_of(squared_volume(s)); }

double k_volume(const Simplex& s) { return std::sqrt(to_double(squared_volume(s))); }

bool is_degenerate(const Simplex& s) { return s.dim() > 0 && squared_volume(s) == 0; }

int orientation_sign(const Simplex& s)
{
    if (s.dim() != s.ambient_dim())
        fail("geometry", "orientation sign needs a top-dimensional simplex");
    Rational det = determinant(s.edge_matrix());
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

AffineMap AffineMap::identity(int d)
{
    AffineMap f;
    f.linear.assign(d, RVector(d, Rational(0)));
    for (int i = 0; i < d; ++i)
        f.linear[i][i] = 1;
    f.offset.assign(d, Rational(0));
    return f;
}

AffineMap AffineMap::homothety(const Point& center, const Rational& ratio)
{
    // x ↦ p + λ (x − p)
    const int d = static_cast<int>(center.size());
    AffineMap f = identity(d);
    for (int i = 0; i < d; ++i) {
        f.linear[i][i] = ratio;
        f.offset[i] = (1 - ratio) * center[i];
    }
    return f;
}

AffineMap AffineMap::translation(const Point& w)
{
    AffineMap f = identity(static_cast<int>(w.size()));
    f.offset = w;
    return f;
}

Point AffineMap::operator()(const Point& x) const
{
    Point y(offset);
    for (std::size_t i = 0; i < linear.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (linear[i][j] != 0)
                y[i] += linear[i][j] * x[j];
    return y;
}

AffineMap AffineMap::then(const AffineMap& next) const
{
    const std::size_t d = linear.size();
    AffineMap out;
    out.linear.assign(d, RVector(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t m = 0; m < d; ++m)
                out.linear[i][j] += next.linear[i][m] * linear[m][j];
    out.offset = next(offset);
    return out;
}

Simplex apply(const AffineMap& f, const Simplex& s)
{
    std::vector<Point> v;
    v.reserve(s.vertices().size());
    for (const auto& p : s.vertices())
        v.push_back(f(p));
    return Simplex(std::move(v));
}

Simplex cone_simplex(const Point& apex, const Simplex& s)
{
    std::vector<Point> v;
    v.push_back(apex);
    for (const auto& p : s.vertices())
        v.push_back(p);
    return Simplex(std::move(v));
}

std::optional<RVector> barycentric(const Simplex& s, const Point& p)
{
    // Solve Σ t_i (v_i − v_0) = p − v_0.
    const int k = s.dim();
    const int d = s.ambient_dim();
    RMatrix a(d, RVector(k));
    RMatrix e = s.edge_matrix();
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < k; ++c)
            a[r][c] = e[c][r];
    bool unique = true;
    auto t = solve(std::move(a), p - s[0], &unique);
    if (!t || !unique)
        return std::nullopt;
    RVector bary(k + 1);
    Rational rest = 1;
    for (int i = 0; i < k; ++i) {
        bary[i + 1] = (*t)[i];
        rest -= (*t)[i];
    }
    bary[0] = rest;
    return bary;
}

bool contains(const Simplex& s, const Point& p, bool strict)
{
    auto b = barycentric(s, p);
    if (!b)
        return false;
    for (const auto& t : *b)
        if (strict ? t <= 0 : t < 0)
            return false;
    return true;
}

bool is_tangent(const Point& v, const Simplex& s)
{
    RMatrix e = s.edge_matrix();
    const int r = rank(e);
    e.push_back(v);
    return rank(std::move(e)) == r;
}

namespace {

std::vector<Simplex> all_faces(const Simplex& s)
{
    std::vector<Simplex> out;
    const int n = static_cast<int>(s.vertices().size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<Point> v;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i))
                v.push_back(s[i]);
        out.emplace_back(std::move(v));
    }
    return out;
}

}   // namespace

int overlap_dim(const Simplex& a, const Simplex& b)
{
    // Every vertex of a ∩ b is the unique point of aff(F) ∩ aff(G) for a
    // face F of a and a face G of b.
    const int d = a.ambient_dim();
    std::vector<Point> pts;
    auto fa = all_faces(a);
    auto fb = all_faces(b);
    for (const auto& f : fa) {
        RMatrix ef = f.edge_matrix();
        for (const auto& g : fb) {
            RMatrix eg = g.edge_matrix();
            const int cols = static_cast<int>(ef.size() + eg.size());
            if (cols > d)
                continue;
            RMatrix m(d, RVector(cols));
            for (int r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < ef.size(); ++c)
                    m[r][c] = ef[c][r];
                for (std::size_t c = 0; c < eg.size(); ++c)
                    m[r][ef.size() + c] = -eg[c][r];
            }
            bool unique = true;
            auto sol = solve(std::move(m), g[0] - f[0], &unique);
            if (!sol || !unique)
                continue;
            Point x = f[0];
            for (std::size_t c = 0; c < ef.size(); ++c)
                x = x + (*sol)[c] * ef[c];
            if (contains(a, x) && contains(b, x))
                pts.push_back(std::move(x));
        }
    }
    if (pts.empty())
        return -1;
    RMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(pts[i] - pts[0]);
    return rank(std::move(diffs));
}

}   // namespace flatchain
