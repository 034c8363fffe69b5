#include "flatchain/flatnorm.hpp"

namespace flatchain {

namespace {

const GridComplex& carrier(const PolyChain& p)
{
    if (p.group().kind != GroupTag::Kind::Real)
        fail("flatnorm", "flat norm is computed for real chains only, got " + p.group().name());
    if (!p.complex_resolution())
        fail("flatnorm", "flat norm needs a chain carried by a kuhn complex");
    if (p.dim() >= p.ambient_dim())
        fail("flatnorm", "flat norm needs k < d");
    return *kuhn_complex(p.ambient_dim(), *p.complex_resolution());
}

template <typename Scalar, typename Cost, typename ToScalar, typename ToCost>
LpInstance<Scalar, Cost> make_instance(const LpProblem& lp, ToScalar to_scalar, ToCost to_cost)
{
    const int m = lp.cells_k, n1 = lp.cells_k1;
    const int cols = 2 * n1 + 2 * m;
    LpInstance<Scalar, Cost> inst;
    inst.a.assign(m, std::vector<Scalar>(cols, Scalar(0)));
    inst.b.resize(m);
    inst.c.resize(cols);
    for (int j = 0; j < n1; ++j) {
        for (int signed_id : lp.incidence[j]) {
            int i = std::abs(signed_id) - 1;
            Scalar s = signed_id > 0 ? Scalar(1) : Scalar(-1);
            inst.a[i][j] = s;
            inst.a[i][n1 + j] = -s;
        }
        inst.c[j] = inst.c[n1 + j] = to_cost(lp.cost_k1[j]);
    }
    for (int i = 0; i < m; ++i) {
        inst.a[i][2 * n1 + i] = Scalar(1);
        inst.a[i][2 * n1 + m + i] = Scalar(-1);
        inst.c[2 * n1 + i] = inst.c[2 * n1 + m + i] = to_cost(lp.cost_k[i]);
        inst.b[i] = to_scalar(lp.rhs[i]);
        if (lp.rhs[i] < 0) {
            for (auto& v : inst.a[i])
                v = -v;
            inst.b[i] = -inst.b[i];
            inst.basis.push_back(2 * n1 + m + i);
        } else {
            inst.basis.push_back(2 * n1 + i);
        }
    }
    return inst;
}

}   // namespace

LpProblem build_flat_lp(const PolyChain& p, const GridComplex& complex)
{
    const int k = p.dim();
    LpProblem lp;
    lp.cells_k = static_cast<int>(complex.count(k));
    lp.cells_k1 = static_cast<int>(complex.count(k + 1));
    lp.incidence.resize(lp.cells_k1);
    for (int j = 0; j < lp.cells_k1; ++j)
        for (const auto& f : complex.faces(k + 1, j))
            lp.incidence[j].push_back(f.sign * (f.id + 1));
    for (const auto& c : to_cells(p, complex))
        lp.rhs.push_back(c.value());
    for (int i = 0; i < lp.cells_k; ++i)
        lp.cost_k.push_back(complex.volume(k, i));
    for (int j = 0; j < lp.cells_k1; ++j)
        lp.cost_k1.push_back(complex.volume(k + 1, j));
    return lp;
}

FlatWitness flat_norm(const PolyChain& p, const FlatOptions& opt)
{
    const GridComplex& complex = carrier(p);
    const int k = p.dim();
    FlatWitness w;
    w.filling = PolyChain(GroupTag::real(), p.ambient_dim(), k + 1, complex.resolution());
    w.remainder = p;
    if (p.empty())
        return w;

    LpProblem lp = build_flat_lp(p, complex);
    auto inst = make_instance<double, double>(
        lp, [](const Rational& r) { return to_double(r); }, [](const SurdSum& s) { return s.to_double(); });
    auto sol = solve_lp(std::move(inst), LpOptions{opt.tolerance, opt.max_iterations});
    w.value = sol.objective;
    w.iterations = sol.iterations;

    const int n1 = lp.cells_k1;
    for (int j = 0; j < n1; ++j) {
        double q = sol.x[j] - sol.x[n1 + j];
        if (std::fabs(q) <= opt.tolerance)
            continue;
        Rational qr = best_rational(q, opt.max_denominator);
        if (qr != 0)
            w.filling.add_term(complex.simplex(k + 1, j), qr);
    }
    w.remainder = p - boundary(w.filling);
    w.witness_mass = mass_exact(w.filling) + mass_exact(w.remainder);
    return w;
}

SurdSum flat_norm_oracle(const PolyChain& p, int max_cells)
{
    const GridComplex& complex = carrier(p);
    if (static_cast<int>(complex.count(p.dim() + 1)) > max_cells)
        fail("flatnorm", "oracle size guard: complex has " + std::to_string(complex.count(p.dim() + 1)) +
                             " cells of dimension k+1 (limit " + std::to_string(max_cells) + ")");
    if (p.empty())
        return SurdSum();
    LpProblem lp = build_flat_lp(p, complex);
    auto inst = make_instance<Rational, SurdSum>(
        lp, [](const Rational& r) { return r; }, [](const SurdSum& s) { return s; });
    return solve_lp(std::move(inst)).objective;
}

double flat_distance(const PolyChain& a, const PolyChain& b, const FlatOptions& opt)
{
    return flat_norm(a - b, opt).value;
}

}   // namespace flatchain
