/**
 * Finite-stage approximation constructions: scaling homotopy, translation
 * off a reference measure, the iterative disjoint representative, cycle
 * extension, and telescoping of flat-Cauchy sequences.
 *
 * Decompositions T − g♯T = ∂S + R for an affine map g come from the
 * straight-line prism operator
 *
 *   H[v_0 … v_k] = Σ_i (−1)^i [g(v_0) … g(v_i), v_i … v_k],
 *
 * with S = H(T) and R = H(∂T). The identity holds exactly in the chain
 * group, so every stage identity below is checked by canonical equality.
 */
#ifndef FLATCHAIN_APPROX_HPP
#define FLATCHAIN_APPROX_HPP

#include <set>
#include <vector>

#include "flatchain/chains.hpp"
#include "flatchain/flatnorm.hpp"

namespace flatchain {

/// Prism chain of dimension k + 1 between g♯c and c.
PolyChain prism(const PolyChain& c, const AffineMap& g);

struct ShrinkResult
{
    PolyChain chain;   // (f_λ)♯P
    SurdSum bound;     // 2(1−λ)·√d·(M(P) + M(∂P))
};

/// f_λ(x) = p + λ(x − p) with λ ∈ (0, 1]; p must lie in the open cube.
ShrinkResult shrink_toward(const PolyChain& p, const Point& center, const Rational& lambda);

/// Rational unit vectors, deterministic order, `shells` rings of the
/// inverse stereographic lattice.
std::vector<Point> direction_lattice(int d, int shells);

struct TranslateResult
{
    PolyChain chain;
    Point direction;   // zero when nothing had to be avoided
    Rational t;
};

/**
 * τ_{tv}♯P with v not tangent to any simplex of P and t ∈ (0, t_max]
 * chosen so that every translated simplex meets every reference simplex
 * in dimension < k.
 */
TranslateResult singular_translate(const PolyChain& p, const std::set<Simplex>& reference, const Rational& t_max,
                                   int max_shells = 12);
TranslateResult singular_translate(const PolyChain& p, const MassMeasure& reference, const Rational& t_max,
                                   int max_shells = 12);

/// True when no simplex of `p` meets a reference simplex in dimension k.
bool is_singular_to(const PolyChain& p, const std::set<Simplex>& reference);

struct ApproxBudget
{
    Rational epsilon{1, 10};
    int max_stages = 6;    // stages 0..max_stages
    int max_halvings = 40;

    /// ε_n = ε·2^(−n−2)·M(T).
    SurdSum schedule(int n, const SurdSum& mass_t) const;
};

struct Stage
{
    PolyChain p, r, s;
    SurdSum mass_p, mass_r, mass_s;
    SurdSum eps;          // ε_n
    Rational lambda;      // shrink ratio toward the cube center
    Point direction;
    Rational t;
};

struct StageReport
{
    std::vector<Stage> stages;
    SurdSum mass_t;
    SurdSum residual_bound;   // ε_N of the last stage, 0 on early exit
    SurdSum mass_bound;       // (1+ε)M(T) + ε_N
};

struct DisjointResult
{
    PolyChain r;
    PolyChain residual;       // R_N
    PolyChain filling;        // Σ S_n, with T = R + ∂Σ S_n
    StageReport report;
};

/**
 * R = Σ_{j≤N} P_j + R_N with ∂R = ∂T. Each P_j is singular to μ_T; only
 * R_N may overlap T, and M(R_N) ≤ ε_N. k < d required.
 */
DisjointResult disjoint_representative(const PolyChain& t, const ApproxBudget& budget = {});

struct CycleExtension
{
    PolyChain t_prime;            // T − R, a cycle
    std::set<Simplex> e;          // simplices carrying T
    SurdSum defect;               // ε_N
    SurdSum measured_defect;      // mass of R terms overlapping E in dimension k
    DisjointResult representative;
};

CycleExtension cycle_extension(const PolyChain& t, const ApproxBudget& budget = {});

struct TelescopeResult
{
    PolyChain r;
    PolyChain s;
    std::vector<double> flat_values;          // F(P_{i+1} − P_i) from the LP
    std::vector<SurdSum> partial_masses;      // M(Z_n), Z_n = P_1 + Σ_{h≤n} R_h
    SurdSum filling_mass;                     // Σ M(S_h)
};

/**
 * P_last = R + ∂S from LP witnesses of the consecutive differences. The
 * chains must be real and share one Kuhn complex; the decay hypothesis
 * F(P_{i+1} − P_i) ≤ 2^(−i−1)(1+δ) is checked on the LP values.
 */
TelescopeResult telescope(const std::vector<PolyChain>& list, double delta = 1e-6, const FlatOptions& opt = {});

}   // namespace flatchain

#endif
