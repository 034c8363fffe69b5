/**
 * Exact-rational simplex geometry.
 */
#ifndef FLATCHAIN_GEOMETRY_HPP
#define FLATCHAIN_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "flatchain/exact_mass.hpp"
#include "flatchain/rational.hpp"

namespace flatchain {

using Point = std::vector<Rational>;

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& a);

/// Ordered vertex list; the order encodes orientation.
class Simplex
{
  public:
    Simplex() = default;
    explicit Simplex(std::vector<Point> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    int ambient_dim() const { return vertices_.empty() ? 0 : static_cast<int>(vertices_[0].size()); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }

    /// Edge vectors v_i − v_0, one per row.
    RMatrix edge_matrix() const;

    /// Face opposite vertex i.
    Simplex face(int i) const;

    /// True when two vertices coincide.
    bool has_repeated_vertex() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.vertices_ <=> b.vertices_; }

  private:
    std::vector<Point> vertices_;
};

/// (H^k)^2 = det(Gram) / (k!)^2, exact.
Rational squared_volume(const Simplex& s);

/// H^k as an exact surd.
SurdSum volume(const Simplex& s);

/// H^k in double precision.
double k_volume(const Simplex& s);

bool is_degenerate(const Simplex& s);

/// Sign of det of the edge matrix of a top-dimensional simplex (k = d).
int orientation_sign(const Simplex& s);

/// x ↦ A x + b on ℝ^d.
struct AffineMap
{
    RMatrix linear;
    RVector offset;

    static AffineMap identity(int d);
    static AffineMap homothety(const Point& center, const Rational& ratio);
    static AffineMap translation(const Point& w);

    Point operator()(const Point& x) const;
    AffineMap then(const AffineMap& next) const;   // next ∘ this
};

Simplex apply(const AffineMap& f, const Simplex& s);

/// apex ⋆ s = [apex, v_0, …, v_k].
Simplex cone_simplex(const Point& apex, const Simplex& s);

/// Barycentric coordinates of p w.r.t. s when p lies in the affine hull.
std::optional<RVector> barycentric(const Simplex& s, const Point& p);

/// p ∈ s (closed); `strict` requires every barycentric coordinate > 0.
bool contains(const Simplex& s, const Point& p, bool strict = false);

/// v lies in the direction space of s (exact rank test).
bool is_tangent(const Point& v, const Simplex& s);

/// Dimension of the intersection of two closed simplices, −1 if empty.
int overlap_dim(const Simplex& a, const Simplex& b);

/// Euclidean diameter of [0,1]^d is √d.
inline SurdSum unit_cube_diameter(int d) { return SurdSum::sqrt_of(Rational(d)); }

}   // namespace flatchain

#endif
