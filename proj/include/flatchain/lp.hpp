/**
 * Dense tableau simplex method with Bland's rule.
 *
 *   minimize  cᵀx   subject to  A x = b,  x ≥ 0
 *
 * started from a caller-supplied feasible basis whose columns form the
 * identity (after row sign normalization). The same template runs in
 * double precision (with a feasibility tolerance) and exactly, with
 * rational constraints and surd-valued costs.
 */
#ifndef FLATCHAIN_LP_HPP
#define FLATCHAIN_LP_HPP

#include <cmath>
#include <vector>

#include "flatchain/exact_mass.hpp"
#include "flatchain/rational.hpp"

namespace flatchain {

template <typename Scalar, typename Cost>
struct LpInstance
{
    std::vector<std::vector<Scalar>> a;   // m x N
    std::vector<Scalar> b;                // m, b ≥ 0
    std::vector<Cost> c;                  // N
    std::vector<int> basis;               // m columns; a restricted to them is the identity
};

template <typename Scalar, typename Cost>
struct LpSolution
{
    std::vector<Scalar> x;
    Cost objective{};
    int iterations = 0;
};

struct LpOptions
{
    double tolerance = 1e-9;
    int max_iterations = 200000;
};

namespace detail {

inline bool is_negative(double v, double tol) { return v < -tol; }
inline bool is_positive(double v, double tol) { return v > tol; }
inline bool is_negative(const SurdSum& v, double) { return v.sign() < 0; }
inline bool is_negative(const Rational& v, double) { return v < 0; }
inline bool is_positive(const Rational& v, double) { return v > 0; }

}   // namespace detail

template <typename Scalar, typename Cost>
LpSolution<Scalar, Cost> solve_lp(LpInstance<Scalar, Cost> lp, const LpOptions& opt = {})
{
    using detail::is_negative;
    using detail::is_positive;
    const int m = static_cast<int>(lp.a.size());
    const int n = static_cast<int>(lp.c.size());
    auto& t = lp.a;
    auto& rhs = lp.b;
    auto& basis = lp.basis;

    // Reduced costs r_j = c_j − Σ_i c_B(i) t_ij.
    std::vector<Cost> reduced = lp.c;
    for (int i = 0; i < m; ++i) {
        const Cost cb = lp.c[basis[i]];
        for (int j = 0; j < n; ++j)
            if (t[i][j] != Scalar(0))
                reduced[j] -= cb * t[i][j];
    }

    LpSolution<Scalar, Cost> sol;
    for (;;) {
        if (sol.iterations >= opt.max_iterations)
            throw Error(Error::Kind::Solver, "flatnorm", "simplex iteration cap reached");
        int enter = -1;
        for (int j = 0; j < n; ++j)
            if (is_negative(reduced[j], opt.tolerance)) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;
        int leave = -1;
        Scalar best_ratio{};
        for (int i = 0; i < m; ++i) {
            if (!is_positive(t[i][enter], opt.tolerance))
                continue;
            Scalar ratio = rhs[i] / t[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (!(best_ratio < ratio) && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw Error(Error::Kind::Solver, "flatnorm", "linear program is unbounded");

        const Scalar piv = t[leave][enter];
        for (int j = 0; j < n; ++j)
            if (t[leave][j] != Scalar(0))
                t[leave][j] /= piv;
        rhs[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == Scalar(0))
                continue;
            const Scalar f = t[i][enter];
            for (int j = 0; j < n; ++j)
                if (t[leave][j] != Scalar(0))
                    t[i][j] -= f * t[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        const Cost rf = reduced[enter];
        for (int j = 0; j < n; ++j)
            if (t[leave][j] != Scalar(0))
                reduced[j] -= rf * t[leave][j];
        basis[leave] = enter;
        ++sol.iterations;
    }

    sol.x.assign(n, Scalar(0));
    for (int i = 0; i < m; ++i)
        sol.x[basis[i]] = rhs[i];
    sol.objective = Cost{};
    for (int j = 0; j < n; ++j)
        if (sol.x[j] != Scalar(0))
            sol.objective += lp.c[j] * sol.x[j];
    return sol;
}

}   // namespace flatchain

#endif
