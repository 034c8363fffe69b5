/**
 * Seeded instance generators for tests, the acceptance suite and `gen`.
 * Everything is a pure function of the engine state.
 */
#ifndef FLATCHAIN_GENERATORS_HPP
#define FLATCHAIN_GENERATORS_HPP

#include <random>

#include "flatchain/chains.hpp"
#include "flatchain/coarea.hpp"
#include "flatchain/lifting.hpp"

namespace flatchain {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long uniform_int(Rng& rng, long lo, long hi);

/// num/den with |num| ≤ max_num and 1 ≤ den ≤ max_den, never zero.
Rational random_rational(Rng& rng, long max_num, long max_den);

/// Random real/integer/circle chain with up to `terms` distinct cells of the complex.
PolyChain random_grid_chain(Rng& rng, GroupTag group, int d, int n, int k, int terms, long max_den = 8);

/// Real k-chain on the complex whose boundary has integer coefficients:
/// integer cells plus fractional multiples of (k+1)-cell boundaries.
PolyChain random_integral_boundary_chain(Rng& rng, int d, int n, int k, int fractional, int integral,
                                         long max_den = 8);

/// Real k-chain on the complex whose boundary is the boundary of a random
/// (k+1)-chain plus a small k-chain: a generic test current.
PolyChain random_flat_instance(Rng& rng, int d, int n, int k, int terms, long max_den = 8);

/// Grid function with values drawn from a small pool so that level sets repeat.
GridFunction random_grid_function(Rng& rng, int d, int n, bool integral, long max_den = 6);

struct DecomposedInstance
{
    PolyChain t;                 // circle k-chain
    FlatDecomposition decomposition;
};

/// T = R̂ + ∂Ŝ on the complex with M(R̂) ≤ (1+ε)M(T) and T ≠ 0, by
/// rejection; falls back to the trivial decomposition.
DecomposedInstance random_decomposed_circle_chain(Rng& rng, int d, int n, int k, const Rational& epsilon,
                                                  int terms = 4, long max_den = 10);

}   // namespace flatchain

#endif
