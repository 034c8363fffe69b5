/**
 * Flat norm relative to a Kuhn complex:
 *
 *   F(P) = min { M(Q) + M(P − ∂Q) : Q a real (k+1)-chain on the complex }
 *
 * solved as a linear program with |·| split into nonnegative pairs. The
 * witness is snapped to rationals and the remainder recomputed exactly, so
 * R + ∂Q = P holds as an identity of canonical chains.
 */
#ifndef FLATCHAIN_FLATNORM_HPP
#define FLATCHAIN_FLATNORM_HPP

#include "flatchain/chains.hpp"
#include "flatchain/lp.hpp"

namespace flatchain {

struct FlatWitness
{
    double value = 0;        // LP optimum
    PolyChain filling;       // Q, dimension k + 1
    PolyChain remainder;     // R = P − ∂Q, dimension k
    SurdSum witness_mass;    // M(Q) + M(R) after rationalization, exact
    int iterations = 0;
};

struct FlatOptions
{
    double tolerance = 1e-9;
    long max_denominator = 1000000;
    int max_iterations = 200000;
};

/**
 * Columns: q⁺, q⁻ (one pair per (k+1)-cell), then r⁺, r⁻ (one pair per
 * k-cell). Rows: r⁺ − r⁻ + B(q⁺ − q⁻) = p, one per k-cell.
 */
struct LpProblem
{
    int cells_k = 0;
    int cells_k1 = 0;
    std::vector<std::vector<int>> incidence;   // per (k+1)-cell: signed (k-cell id + 1)
    std::vector<Rational> rhs;                 // p per k-cell
    std::vector<SurdSum> cost_k;               // vol_k
    std::vector<SurdSum> cost_k1;              // vol_{k+1}
};

LpProblem build_flat_lp(const PolyChain& p, const GridComplex& complex);

FlatWitness flat_norm(const PolyChain& p, const FlatOptions& opt = {});

/// Exact optimum by rational pivoting; complexes with ≤ max_cells (k+1)-cells.
SurdSum flat_norm_oracle(const PolyChain& p, int max_cells = 12);

/// flat_norm(a − b).value
double flat_distance(const PolyChain& a, const PolyChain& b, const FlatOptions& opt = {});

}   // namespace flatchain

#endif
