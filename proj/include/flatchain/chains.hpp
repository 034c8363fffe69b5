/**
 * Polyhedral G-chains: finite formal sums Σ g_ℓ⟦σ_ℓ⟧.
 *
 * Canonical form: every simplex is stored with lexicographically sorted
 * vertices and the sorting parity folded into its coefficient; zero
 * coefficients and simplices with a repeated vertex are dropped. Two
 * chains are equal iff their term maps are equal.
 *
 * A chain may carry the resolution of the Kuhn complex all of its simplices
 * belong to. Chains without it are "free soup": simplices that overlap
 * without coinciding stay separate terms, and the mass then bounds the
 * polyhedral mass from above.
 */
#ifndef FLATCHAIN_CHAINS_HPP
#define FLATCHAIN_CHAINS_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "flatchain/complex.hpp"
#include "flatchain/exact_mass.hpp"
#include "flatchain/geometry.hpp"
#include "flatchain/groups.hpp"

namespace flatchain {

class PolyChain
{
  public:
    using Terms = std::map<Simplex, Coefficient>;

    PolyChain() = default;
    PolyChain(GroupTag group, int ambient_dim, int dim, std::optional<int> complex_n = std::nullopt);

    const GroupTag& group() const { return group_; }
    int ambient_dim() const { return d_; }
    int dim() const { return k_; }
    const std::optional<int>& complex_resolution() const { return complex_n_; }
    void set_complex_resolution(std::optional<int> n) { complex_n_ = n; }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds g⟦s⟧ in canonical form (merging with an existing term).
    void add_term(const Simplex& s, const Coefficient& g);
    void add_term(const Simplex& s, const Rational& value) { add_term(s, Coefficient(group_, value)); }

    /// Coefficient of a simplex given in any vertex order.
    Coefficient coefficient(const Simplex& s) const;

    /// Same shape (group, dimensions, complex), no terms.
    PolyChain empty_like() const { return PolyChain(group_, d_, k_, complex_n_); }

    friend bool operator==(const PolyChain& a, const PolyChain& b)
    {
        return a.group_ == b.group_ && a.d_ == b.d_ && a.k_ == b.k_ && a.terms_ == b.terms_;
    }

  private:
    GroupTag group_;
    int d_ = 0;
    int k_ = 0;
    std::optional<int> complex_n_;
    Terms terms_;
};

PolyChain add_chains(const PolyChain& a, const PolyChain& b);
PolyChain negate(const PolyChain& a);
PolyChain subtract(const PolyChain& a, const PolyChain& b);
PolyChain scale(const PolyChain& a, const Rational& s);   // real chains only

PolyChain operator+(const PolyChain& a, const PolyChain& b);
PolyChain operator-(const PolyChain& a, const PolyChain& b);
PolyChain operator-(const PolyChain& a);

/// Coefficient-wise map into another group.
template <typename F>
PolyChain map_coefficients(const PolyChain& c, GroupTag target, F&& f)
{
    PolyChain out(target, c.ambient_dim(), c.dim(), c.complex_resolution());
    for (const auto& [s, g] : c.terms())
        out.add_term(s, f(g));
    return out;
}

/// Alternating vertex-deletion boundary; requires k ≥ 1.
PolyChain boundary(const PolyChain& c);

/// M(P) = Σ ‖g_ℓ‖ H^k(σ_ℓ), exact.
SurdSum mass_exact(const PolyChain& c);
double mass(const PolyChain& c);

struct MassMeasure
{
    std::vector<std::pair<Simplex, SurdSum>> weights;
    SurdSum total;

    /// μ(E) for E the union of the given (canonical) simplices.
    SurdSum measure_of(const std::set<Simplex>& cells) const;
};

MassMeasure mass_measure(const PolyChain& c);

/// Terms whose simplex is one of the given k-simplex ids of the complex.
PolyChain restrict_to(const PolyChain& c, const GridComplex& complex, const std::set<int>& cell_ids);

/// Terms whose simplex is one of the given simplices (any vertex order).
PolyChain restrict_to(const PolyChain& c, const std::set<Simplex>& cells);

/// One round of edge-midpoint (edgewise) subdivision; free-soup chains.
PolyChain subdivide(const PolyChain& c);

/// Pushforward by an affine map; the complex tag is dropped.
PolyChain affine_pushforward(const PolyChain& c, const AffineMap& f);

struct ConeResult
{
    PolyChain chain;
    int dropped = 0;   // simplices whose cone was degenerate
};

/// apex ⋆ c, dimension k + 1; degenerate cones are dropped and counted.
ConeResult cone(const Point& apex, const PolyChain& c);

/// Dense coefficient vector over the k-simplices of the complex.
std::vector<Coefficient> to_cells(const PolyChain& c, const GridComplex& complex);
PolyChain from_cells(const std::vector<Coefficient>& values, GroupTag group, const GridComplex& complex, int k);

/// Tags `c` with the complex after checking every simplex belongs to it.
PolyChain attach(const PolyChain& c, const GridComplex& complex);

/**
 * Rewrite every simplex of `c` as the union of the complex simplices it
 * contains, with orientation signs. Fails when a simplex is not exactly
 * such a union. The result is an equal current carried by the complex.
 */
PolyChain refine_onto(const PolyChain& c, const GridComplex& complex);

/**
 * Density of a top-dimensional chain at p: Σ ±g over simplices containing
 * p, sign = orientation relative to ℝ^d. nullopt when p lies on the
 * boundary of some simplex.
 */
std::optional<Coefficient> top_density(const PolyChain& c, const Point& p);

/// Distinct canonical simplices of a chain.
std::set<Simplex> support(const PolyChain& c);

}   // namespace flatchain

#endif
