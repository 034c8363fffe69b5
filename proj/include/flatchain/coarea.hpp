/**
 * Level-set decomposition of the boundary of a piecewise-constant grid
 * function.
 *
 * u takes one value per cube of the n^d grid (row-major, first coordinate
 * most significant) and is extended by 0 outside [0,1]^d, so outer faces
 * are jump faces as well.
 */
#ifndef FLATCHAIN_COAREA_HPP
#define FLATCHAIN_COAREA_HPP

#include <vector>

#include "flatchain/chains.hpp"

namespace flatchain {

struct GridFunction
{
    int d = 2;
    int n = 1;
    std::vector<Rational> values;   // n^d entries

    const Rational& at(std::size_t cube) const { return values.at(cube); }
};

void validate(const GridFunction& u);

/// u·⟦[0,1]^d⟧ as a real d-chain on the Kuhn complex.
PolyChain function_chain(const GridFunction& u);

/// ∂(u·⟦[0,1]^d⟧), a real (d−1)-chain.
PolyChain function_boundary(const GridFunction& u);

struct LevelSlice
{
    Rational t_low, t_high;   // R_t is constant for t ∈ (t_low, t_high)
    PolyChain r;              // integer (d−1)-chain, coefficients in {−1, 0, 1}
};

/**
 * One slice per gap between consecutive values of {0} ∪ u(cubes). For
 * t ≥ 0 the slice is ∂⟦{u > t}⟧; for t < 0 it is −∂⟦{u ≤ t}⟧, which is the
 * same current once the zero frame is accounted for.
 */
std::vector<LevelSlice> level_slices(const GridFunction& u);

struct CoareaReport
{
    SurdSum mass;        // M(∂(u⟦K⟧))
    SurdSum integral;    // Σ width · M(R_t)
    SurdSum gap;         // mass − integral
    bool chain_identity = false;   // Σ width · R_t == ∂(u⟦K⟧)
    bool multiplicity_one = false;
    bool slices_closed = false;    // ∂R_t = 0
    std::size_t slices = 0;

    bool ok() const { return gap.is_zero() && chain_identity && multiplicity_one && slices_closed; }
};

CoareaReport verify_coarea(const GridFunction& u);

}   // namespace flatchain

#endif
