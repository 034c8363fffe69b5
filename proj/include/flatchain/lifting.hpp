/**
 * Lifting circle-valued chains to real ones through the quotient
 * ℝ → ℝ/ℤ: coefficient-wise lifts, the θ-threshold lift of top-dimensional
 * chains, loop cancellation for 1-chains, the cone route in codimension
 * one, and the assembled pipeline for flat chains with a decomposition
 * T = R̂ + ∂Ŝ.
 *
 * Top-dimensional coefficients are read relative to the standard
 * orientation of ℝ^d (the stored coefficient times the orientation sign of
 * its sorted vertex order).
 */
#ifndef FLATCHAIN_LIFTING_HPP
#define FLATCHAIN_LIFTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "flatchain/chains.hpp"

namespace flatchain {

/// π: real (or integer) chain → circle chain.
PolyChain project_chain(const PolyChain& p);

/// Minimal-norm section per coefficient.
PolyChain lift_coefficientwise(const PolyChain& p);

/// True when every coefficient is an integer (π(P) = 0); real chains.
bool projects_to_zero(const PolyChain& p);

/// g̃ = g if g ≤ θ, else g − 1, on positively oriented coefficients.
PolyChain lift_top_threshold(const PolyChain& p, const Rational& theta);

struct ThresholdInterval
{
    Rational lo, hi, mid;
    SurdSum boundary_mass;   // M(∂P̃_θ) for θ in (lo, hi)
};

struct ThresholdProfile
{
    std::vector<Rational> breakpoints;
    std::vector<ThresholdInterval> intervals;
    SurdSum integral;        // ∫_{1/4}^{3/4} M(∂P̃_θ) dθ
};

ThresholdProfile threshold_profile(const PolyChain& p);

struct TopLift
{
    Rational theta;
    PolyChain chain;
    ThresholdProfile profile;
};

/// θ* minimizing M(∂P̃_θ) over interval midpoints, smaller θ on ties.
TopLift lift_top_optimal(const PolyChain& p);

struct LoopStep
{
    std::size_t length;
    Rational amount;     // θ₊ or θ₋
    bool plus;           // Z₊ chosen
};

struct LiftReport
{
    std::string operation;
    SurdSum mass_in, mass_out;
    SurdSum boundary_mass_in, boundary_mass_out;
    double ratio = 0;            // mass_out / mass_in (0 for empty input)
    double boundary_ratio = 0;
    std::optional<Rational> theta;
    std::vector<LoopStep> loops;
    int d_constant = 0;          // D of the bounded ratio property used
    double bound = 0;            // guaranteed ratio
    double proof_bound = 0;      // bound obtained by adding every term of the estimate
    bool hypothesis_ok = true;
    bool verdict = true;
};

struct BrResult
{
    PolyChain chain;
    LiftReport report;
};

/// Q' with π(Q') = 0, ∂Q' = ∂Q, M(Q') ≤ M(Q); k = 1, π(∂Q) = 0.
BrResult loop_cancel(const PolyChain& q);

enum class BrRoute { Auto, Loop, Cone };

/**
 * Bounded-ratio correction. Loop route: k = 1, D = 1. Cone route:
 * k = d − 1, D = 6; the cone over π(Q) is rasterized onto Q's complex by
 * its density, lifted by the optimal threshold, and Q' = Q − ∂S̃.
 */
BrResult br_correct(const PolyChain& q, BrRoute route = BrRoute::Auto);

struct FlatDecomposition
{
    PolyChain r;   // R̂, circle k-chain
    PolyChain s;   // Ŝ, circle (k+1)-chain
};

struct FlatLift
{
    PolyChain chain;   // T̃
    PolyChain z, x, y; // Z̃, X̃, Ỹ (empty for k ∈ {0, d})
    LiftReport report;
};

/**
 * T̃ with π(T̃) = T. k ∈ {0, d}: coefficient-wise. k ∈ {1, d − 1}:
 * T̃ = Z̃ + X̃ − Ỹ from the decomposition (default R̂ = T, Ŝ = 0).
 */
FlatLift lift_flat(const PolyChain& t, const Rational& epsilon,
                   const std::optional<FlatDecomposition>& decomposition = std::nullopt,
                   BrRoute route = BrRoute::Auto);

}   // namespace flatchain

#endif
