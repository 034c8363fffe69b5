// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "flatchain/approx.hpp"
#include "flatchain/cli.hpp"
#include "flatchain/coarea.hpp"
#include "flatchain/flatnorm.hpp"
#include "flatchain/generators.hpp"
#include "flatchain/io.hpp"
#include "flatchain/lifting.hpp"

using namespace flatchain;

namespace {

constexpr double kLpTolerance = 1e-9;       // criterion 2, LP side
constexpr double kOracleTolerance = 1e-7;   // criterion 3
const Rational kPipelineEpsilon(1, 10);     // criterion 7

struct Outcome
{
    bool pass = true;
    std::string detail;
};

Point center(int d) { return Point(d, Rational(1, 2)); }

SurdSum times(SurdSum s, const Rational& q)
{
    s *= q;
    return s;
}

// mass(πP) ≤ mass(P) and ∂π = π∂ on every real or integer chain seen by the suite.
struct ProjectionTally
{
    long checked = 0;
    long failed = 0;

    void check(const PolyChain& p)
    {
        if (p.group().kind != GroupTag::Kind::Real && p.group().kind != GroupTag::Kind::Integer)
            return;
        ++checked;
        PolyChain pp = project_chain(p);
        bool ok = mass_exact(pp) <= mass_exact(p);
        if (p.dim() > 0)
            ok = ok && boundary(pp) == project_chain(boundary(p));
        if (!ok)
            ++failed;
    }
} tally;

Outcome criterion1()
{
    Rng rng(101);
    const GroupTag groups[] = {GroupTag::real(), GroupTag::integer(), GroupTag::circle(), GroupTag::parse("mod:3")};
    int failures = 0, count = 0;
    for (int it = 0; it < 500; ++it) {
        int d = it % 2 ? 3 : 2;
        int n = static_cast<int>(uniform_int(rng, 1, d == 2 ? 4 : 3));
        int k = static_cast<int>(uniform_int(rng, 1, d));
        auto c = random_grid_chain(rng, groups[it % 4], d, n, k, static_cast<int>(uniform_int(rng, 1, 12)));
        tally.check(c);
        ++count;
        PolyChain b = boundary(c);
        bool ok;
        if (k >= 2) {
            ok = boundary(b).empty();
        } else {
            // k = 1: the augmentation of ∂c vanishes
            Coefficient sum = Coefficient::zero(c.group());
            for (const auto& [s, g] : b.terms())
                sum = add(sum, g);
            ok = sum.is_zero();
        }
        failures += !ok;
    }
    return {failures == 0, std::to_string(count) + " chains, " + std::to_string(failures) + " nonzero ∂∂"};
}

Outcome criterion2()
{
    Rng rng(202);
    int mass_fail = 0;
    for (int it = 0; it < 100; ++it) {
        int d = it % 2 ? 3 : 2;
        int k = static_cast<int>(uniform_int(rng, 0, d));
        auto p = random_grid_chain(rng, GroupTag::real(), d, 2, k, 6);
        Rational lambda(uniform_int(rng, 1, 9), 10);
        auto img = affine_pushforward(p, AffineMap::homothety(center(d), lambda));
        Rational lk = 1;
        for (int i = 0; i < k; ++i)
            lk *= lambda;
        mass_fail += !(mass_exact(img) == times(mass_exact(p), lk));
    }

    // shrinks whose images are unions of cells of a finer Kuhn complex
    struct Setup
    {
        int d, n;
        Rational lambda;
        int fine;
    };
    const Setup setups[] = {{2, 2, Rational(1, 2), 4}, {2, 1, Rational(3, 4), 8}, {2, 1, Rational(1, 2), 4},
                            {3, 1, Rational(1, 3), 3}};
    Rng rng2(203);
    int lp_fail = 0;
    double worst = 0;
    for (int it = 0; it < 100; ++it) {
        const Setup& s = setups[it % 4];
        int k = static_cast<int>(uniform_int(rng2, 0, s.d - 1));
        auto p = random_grid_chain(rng2, GroupTag::real(), s.d, s.n, k, 4);
        auto sh = shrink_toward(p, center(s.d), s.lambda);
        auto fine = kuhn_complex(s.d, s.fine);
        double f = flat_distance(refine_onto(p, *fine), refine_onto(sh.chain, *fine));
        double bound = sh.bound.to_double();
        if (bound > 0)
            worst = std::max(worst, f / bound);
        lp_fail += !(f <= bound + kLpTolerance);
    }
    std::ostringstream os;
    os << "mass scaling failures " << mass_fail << "/100, LP estimate failures " << lp_fail
       << "/100, worst F/bound " << worst;
    return {mass_fail == 0 && lp_fail == 0, os.str()};
}

Outcome criterion3()
{
    Rng rng(303);
    struct Setup
    {
        int d, n, k;
    };
    const Setup setups[] = {{2, 1, 0}, {2, 1, 1}, {2, 2, 1}, {3, 1, 2}};
    int fail = 0, replay_fail = 0;
    double worst = 0;
    for (int it = 0; it < 50; ++it) {
        const Setup& s = setups[it % 4];
        auto p = random_flat_instance(rng, s.d, s.n, s.k, 5);
        if (p.empty())
            p = random_grid_chain(rng, GroupTag::real(), s.d, s.n, s.k, 2);
        auto w = flat_norm(p);
        double oracle = flat_norm_oracle(p).to_double();
        worst = std::max(worst, std::fabs(w.value - oracle));
        fail += !(std::fabs(w.value - oracle) <= kOracleTolerance);
        replay_fail += !(w.remainder + boundary(w.filling) == p);
    }
    PolyChain square(GroupTag::real(), 2, 1, 1);
    const Rational o(0), i(1);
    const Point corners[] = {{o, o}, {i, o}, {i, i}, {o, i}};
    for (int c = 0; c < 4; ++c)
        square.add_term(Simplex({corners[c], corners[(c + 1) % 4]}), Rational(1));
    double unit = flat_norm(square).value;
    bool unit_ok = std::fabs(unit - 1) <= kOracleTolerance;
    std::ostringstream os;
    os << "50 instances, max |LP − oracle| " << worst << ", replay failures " << replay_fail
       << ", unit square " << unit;
    return {fail == 0 && replay_fail == 0 && unit_ok, os.str()};
}

Outcome criterion4()
{
    Rng rng(404);
    int fail = 0, count = 0;
    double worst_m = 0, worst_b = 0, worst_i = 0;
    for (int it = 0; it < 220; ++it) {
        int d = it < 200 ? 2 : 3;
        int n = d == 2 ? 4 : 2;
        auto p = random_grid_chain(rng, GroupTag::circle(), d, n, d, static_cast<int>(uniform_int(rng, 1, 20)));
        auto t = lift_top_optimal(p);
        tally.check(t.chain);
        ++count;
        SurdSum m = mass_exact(p), mb = mass_exact(boundary(p));
        SurdSum mo = mass_exact(t.chain), mbo = mass_exact(boundary(t.chain));
        bool ok = project_chain(t.chain) == p && mo <= times(m, 3) && mbo <= times(mb, 5) &&
                  t.profile.integral <= times(mb, Rational(5, 2));
        fail += !ok;
        if (!m.is_zero())
            worst_m = std::max(worst_m, mo.to_double() / m.to_double());
        if (!mb.is_zero()) {
            worst_b = std::max(worst_b, mbo.to_double() / mb.to_double());
            worst_i = std::max(worst_i, t.profile.integral.to_double() / mb.to_double());
        }
    }
    std::ostringstream os;
    os << count << " top chains, worst ratios mass " << worst_m << " (≤3), boundary " << worst_b
       << " (≤5), profile " << worst_i << " (≤2.5), failures " << fail;
    return {fail == 0, os.str()};
}

Outcome criterion5()
{
    Rng rng(505);
    int fail = 0;
    double worst = 0;
    for (int it = 0; it < 200; ++it) {
        int d = it % 3 == 2 ? 3 : 2;
        int n = d == 2 ? 3 : 2;
        auto q = random_integral_boundary_chain(rng, d, n, 1, static_cast<int>(uniform_int(rng, 1, 4)),
                                                static_cast<int>(uniform_int(rng, 0, 4)));
        tally.check(q);
        auto r = loop_cancel(q);
        tally.check(r.chain);
        bool ok = projects_to_zero(r.chain) && boundary(r.chain) == boundary(q) &&
                  mass_exact(r.chain) <= mass_exact(q) && r.report.loops.size() <= q.size();
        fail += !ok;
        worst = std::max(worst, r.report.ratio);
    }
    std::ostringstream os;
    os << "200 chains, worst ratio " << worst << ", failures " << fail;
    return {fail == 0, os.str()};
}

Outcome criterion6()
{
    Rng rng(606);
    int fail = 0;
    double worst = 0;
    for (int it = 0; it < 100; ++it) {
        int d = it % 2 ? 3 : 2;
        int n = d == 2 ? 3 : 2;
        auto q = random_integral_boundary_chain(rng, d, n, d - 1, static_cast<int>(uniform_int(rng, 1, 3)),
                                                static_cast<int>(uniform_int(rng, 0, 3)));
        tally.check(q);
        auto r = br_correct(q, BrRoute::Cone);
        tally.check(r.chain);
        bool ok = projects_to_zero(r.chain) && boundary(r.chain) == boundary(q) &&
                  mass_exact(r.chain) <= times(mass_exact(q), 6);
        fail += !ok;
        worst = std::max(worst, r.report.ratio);
    }
    std::ostringstream os;
    os << "100 chains, worst ratio " << worst << " (≤6), failures " << fail;
    return {fail == 0, os.str()};
}

Outcome criterion7()
{
    Rng rng(707);
    std::ostringstream os;
    bool pass = true;
    for (int family = 0; family < 2; ++family) {
        const int dconst = family == 0 ? 1 : 6;
        const Rational cap = Rational(2 + 2 * dconst) * (1 + kPipelineEpsilon);
        int fail = 0, nontrivial = 0, proj_fail = 0;
        double worst = 0;
        for (int it = 0; it < 100; ++it) {
            int d = it % 2 ? 3 : 2;
            int n = d == 2 ? 3 : 2;
            int k = family == 0 ? 1 : d - 1;
            auto inst = random_decomposed_circle_chain(rng, d, n, k, kPipelineEpsilon);
            nontrivial += !inst.decomposition.s.empty();
            auto fl = lift_flat(inst.t, kPipelineEpsilon, inst.decomposition,
                                family == 0 ? BrRoute::Loop : BrRoute::Cone);
            tally.check(fl.chain);
            bool proj = project_chain(fl.chain) == inst.t;
            proj_fail += !proj;
            fail += !(proj && mass_exact(fl.chain) <= times(mass_exact(inst.t), cap));
            worst = std::max(worst, fl.report.ratio);
        }
        pass = pass && fail == 0 && proj_fail == 0;
        os << (family == 0 ? "k=1: " : "; k=d-1: ") << "worst ratio " << worst << " (cap "
           << to_double(cap) << "), " << nontrivial << "/100 with nonzero S, failures " << fail;
    }
    return {pass, os.str()};
}

Outcome criterion8()
{
    Rng rng(808);
    ApproxBudget budget;
    int fail = 0;
    double worst_mass = 0, worst_eps = 0;
    for (int it = 0; it < 50; ++it) {
        int d = it % 2 ? 3 : 2;
        int n = d == 2 ? 3 : 2;
        int k = static_cast<int>(uniform_int(rng, 0, d - 1));
        auto t = random_flat_instance(rng, d, n, k, 4);
        if (t.empty())
            t = random_grid_chain(rng, GroupTag::real(), d, n, k, 2);
        tally.check(t);
        auto ce = cycle_extension(t, budget);
        SurdSum m = mass_exact(t);
        const SurdSum& eps_n = ce.defect;
        bool closed = k == 0 ? true : boundary(ce.t_prime).empty();
        if (k == 0) {
            // 0-chains: the augmentation vanishes
            Rational sum = 0;
            for (const auto& [s, g] : ce.t_prime.terms())
                sum += g.value();
            closed = sum == 0;
        }
        SurdSum cap = times(m, 2 + budget.epsilon);
        cap += eps_n;
        bool ok = closed && mass_exact(ce.t_prime) <= cap && ce.measured_defect <= eps_n &&
                  eps_n.to_double() <= 1e-3 * m.to_double() && restrict_to(ce.t_prime, ce.e) == t;
        fail += !ok;
        worst_mass = std::max(worst_mass, mass(ce.t_prime) / m.to_double());
        worst_eps = std::max(worst_eps, eps_n.to_double() / m.to_double());
    }
    std::ostringstream os;
    os << "50 instances, worst M(T')/M(T) " << worst_mass << ", worst ε_N/M(T) " << worst_eps << ", failures "
       << fail;
    return {fail == 0, os.str()};
}

Outcome criterion9()
{
    Rng rng(909);
    int fail = 0;
    for (int it = 0; it < 200; ++it) {
        int d = it % 2 ? 3 : 2;
        int n = static_cast<int>(uniform_int(rng, 1, 6));
        auto u = random_grid_function(rng, d, n, it % 4 < 2);
        auto rep = verify_coarea(u);
        fail += !(rep.gap.is_zero() && rep.ok());
    }
    return {fail == 0, "200 grid functions, " + std::to_string(fail) + " nonzero gaps"};
}

Outcome criterion10()
{
    return {tally.failed == 0 && tally.checked > 0,
            std::to_string(tally.checked) + " chains checked, " + std::to_string(tally.failed) + " violations"};
}

std::string run_script(const std::filesystem::path& dir)
{
    std::ostringstream all;
    auto call = [&](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        all << "$ " << args[0] << " -> " << code << '\n' << out.str();
    };
    auto f = [&](const char* name) { return (dir / name).string(); };
    for (int seed = 1; seed <= 3; ++seed) {
        const std::string s = std::to_string(seed);
        call({"gen", "--kind", "flat", "--grid", "2,2", "--k", "1", "--seed", s, "--out", f("flat.json")});
        call({"gen", "--kind", "chain", "--group", "circle", "--grid", "2,3", "--k", "2", "--seed", s, "--out",
              f("top.json")});
        call({"gen", "--kind", "integral-boundary", "--grid", "3,2", "--k", "2", "--seed", s, "--out", f("ib.json")});
        call({"gen", "--kind", "grid-function", "--grid", "3,3", "--seed", s, "--out", f("u.txt")});
        call({"mass", f("flat.json")});
        call({"flatnorm", f("flat.json")});
        call({"cycle-extend", f("flat.json")});
        call({"disjoint-rep", f("flat.json")});
        call({"lift", f("top.json")});
        call({"br-correct", f("ib.json")});
        call({"decompose-levels", f("u.txt")});
        all << read_text_file(f("flat.json")) << read_text_file(f("u.txt"));
    }
    return all.str();
}

Outcome criterion11()
{
    auto dir = std::filesystem::temp_directory_path() / "flatchain_acceptance";
    std::filesystem::create_directories(dir);
    std::string a = run_script(dir), b = run_script(dir);
    return {a == b && !a.empty(), std::to_string(a.size()) + " bytes of reports, identical: " + (a == b ? "yes" : "no")};
}

}   // namespace

int main()
{
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                             criterion5, criterion6, criterion7, criterion8,
                                                             criterion9, criterion10, criterion11};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::printf("CRITERION %zu: %s  %s  [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
