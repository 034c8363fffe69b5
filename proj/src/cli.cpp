#include "flatchain/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "flatchain/approx.hpp"
#include "flatchain/coarea.hpp"
#include "flatchain/flatnorm.hpp"
#include "flatchain/generators.hpp"
#include "flatchain/io.hpp"
#include "flatchain/lifting.hpp"

namespace flatchain {

namespace {

const char* const kModule = "cli";

struct Options
{
    std::string input;
    std::string grid;
    std::string group = "real";
    std::string epsilon = "1/10";
    std::string theta;
    std::string tolerance = "1e-9";
    std::string out;
    std::string report;
    std::string route = "auto";
    std::string kind = "chain";
    std::string r_file, s_file;
    std::uint64_t seed = 1;
    int k = -1;
    int terms = 6;
};

std::pair<int, int> parse_grid(const std::string& text)
{
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos)
            throw std::invalid_argument(text);
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error(Error::Kind::Parse, kModule, "--grid expects \"d,n\", got \"" + text + "\"");
    }
}

BrRoute parse_route(const std::string& r)
{
    if (r == "auto")
        return BrRoute::Auto;
    if (r == "loop")
        return BrRoute::Loop;
    if (r == "cone")
        return BrRoute::Cone;
    throw Error(Error::Kind::Parse, kModule, "--route must be auto, loop or cone");
}

void add_lift_report(Report& rep, const LiftReport& lr)
{
    rep.add("operation", lr.operation);
    rep.add("mass_in", lr.mass_in);
    rep.add("mass_out", lr.mass_out);
    rep.add("boundary_mass_in", lr.boundary_mass_in);
    rep.add("boundary_mass_out", lr.boundary_mass_out);
    rep.add("ratio", lr.ratio);
    rep.add("boundary_ratio", lr.boundary_ratio);
    if (lr.theta)
        rep.add("theta", *lr.theta);
    if (lr.d_constant)
        rep.add("d_constant", static_cast<long>(lr.d_constant));
    rep.add("loops", static_cast<long>(lr.loops.size()));
    rep.add("bound", lr.bound);
    rep.add("proof_bound", lr.proof_bound);
    rep.add("hypothesis_ok", lr.hypothesis_ok);
    rep.require(lr.verdict);
}

class Runner
{
  public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void emit_chain_output(const PolyChain& c)
    {
        if (!o_.out.empty())
            write_chain_file(o_.out, c);
    }

    void finish(const Report& rep)
    {
        if (o_.report.empty())
            out_ << rep.str();
        else
            write_text_file(o_.report, rep.str());
        verdict_ = rep.verdict();
    }

    PolyChain input() const
    {
        PolyChain c = read_chain_file(o_.input);
        if (o_.k >= 0 && c.dim() != o_.k)
            fail(kModule, "--k " + std::to_string(o_.k) + " does not match the chain dimension " + std::to_string(c.dim()));
        return c;
    }

    void mass()
    {
        PolyChain c = input();
        Report rep;
        rep.add("terms", static_cast<long>(c.size()));
        rep.add("mass", mass_exact(c));
        if (c.dim() > 0)
            rep.add("boundary_mass", mass_exact(boundary(c)));
        finish(rep);
    }

    void boundary_cmd()
    {
        PolyChain b = boundary(input());
        emit_chain_output(b);
        Report rep;
        rep.add("terms", static_cast<long>(b.size()));
        rep.add("mass", mass_exact(b));
        rep.add("is_cycle", b.dim() == 0 || boundary(b).empty());
        finish(rep);
    }

    void flatnorm()
    {
        PolyChain c = input();
        FlatOptions opt;
        opt.tolerance = to_double(parse_rational(o_.tolerance));
        auto w = flat_norm(c, opt);
        emit_chain_output(w.filling);
        Report rep;
        rep.add("flat_norm", w.value);
        rep.add("mass", mass_exact(c));
        rep.add("witness_mass", w.witness_mass);
        rep.add("filling_terms", static_cast<long>(w.filling.size()));
        rep.add("remainder_terms", static_cast<long>(w.remainder.size()));
        bool replay = w.remainder + boundary(w.filling) == c;
        rep.add("replay_identity", replay);
        rep.add("iterations", static_cast<long>(w.iterations));
        rep.require(replay && std::abs(w.witness_mass.to_double() - w.value) <= 1e-6 * std::max(1.0, w.value));
        finish(rep);
    }

    void project()
    {
        PolyChain c = input();
        PolyChain p = project_chain(c);
        emit_chain_output(p);
        Report rep;
        SurdSum mi = mass_exact(c), mo = mass_exact(p);
        rep.add("mass_in", mi);
        rep.add("mass_out", mo);
        bool commutes = c.dim() == 0 || boundary(p) == project_chain(boundary(c));
        rep.add("boundary_commutes", commutes);
        rep.require(mo <= mi && commutes);
        finish(rep);
    }

    void lift()
    {
        PolyChain c = input();
        Report rep;
        const Rational eps = parse_rational(o_.epsilon);
        if (c.dim() == c.ambient_dim() && c.group().kind == GroupTag::Kind::Circle) {
            PolyChain l;
            std::optional<Rational> theta;
            const SurdSum mb = c.dim() == 0 ? SurdSum() : mass_exact(boundary(c));
            if (!o_.theta.empty()) {
                theta = parse_rational(o_.theta);
                l = lift_top_threshold(c, *theta);
            } else {
                auto t = lift_top_optimal(c);
                theta = t.theta;
                l = t.chain;
                rep.add("profile_integral", t.profile.integral);
                rep.add("profile_intervals", static_cast<long>(t.profile.intervals.size()));
                SurdSum cap = mb;
                cap *= Rational(5, 2);
                rep.require(t.profile.integral <= cap);
            }
            emit_chain_output(l);
            const SurdSum mi = mass_exact(c), mo = mass_exact(l);
            const SurdSum mbo = c.dim() == 0 ? SurdSum() : mass_exact(boundary(l));
            rep.add("operation", std::string("lift-top"));
            rep.add("theta", *theta);
            rep.add("mass_in", mi);
            rep.add("mass_out", mo);
            rep.add("boundary_mass_in", mb);
            rep.add("boundary_mass_out", mbo);
            rep.add("ratio", mi.is_zero() ? 0.0 : mo.to_double() / mi.to_double());
            rep.add("boundary_ratio", mb.is_zero() ? 0.0 : mbo.to_double() / mb.to_double());
            SurdSum m3 = mi, b5 = mb;
            m3 *= Rational(3);
            b5 *= Rational(5);
            rep.add("mass_bound", 3L);
            rep.add("boundary_bound", 5L);
            rep.require(project_chain(l) == c && mo <= m3 && (o_.theta.empty() ? mbo <= b5 : true));
            finish(rep);
            return;
        }
        std::optional<FlatDecomposition> dec;
        if (!o_.r_file.empty() || !o_.s_file.empty()) {
            if (o_.r_file.empty() || o_.s_file.empty())
                fail(kModule, "--r and --s must be given together");
            dec = FlatDecomposition{read_chain_file(o_.r_file), read_chain_file(o_.s_file)};
        }
        auto fl = lift_flat(c, eps, dec, parse_route(o_.route));
        emit_chain_output(fl.chain);
        rep.add("epsilon", eps);
        add_lift_report(rep, fl.report);
        finish(rep);
    }

    void cancel_loops()
    {
        auto r = loop_cancel(input());
        emit_chain_output(r.chain);
        Report rep;
        add_lift_report(rep, r.report);
        finish(rep);
    }

    void br()
    {
        auto r = br_correct(input(), parse_route(o_.route));
        emit_chain_output(r.chain);
        Report rep;
        add_lift_report(rep, r.report);
        finish(rep);
    }

    ApproxBudget budget() const
    {
        ApproxBudget b;
        b.epsilon = parse_rational(o_.epsilon);
        return b;
    }

    void add_stages(Report& rep, const StageReport& sr)
    {
        rep.add("stages", static_cast<long>(sr.stages.size()));
        rep.add("mass_t", sr.mass_t);
        rep.add("residual_bound", sr.residual_bound);
        rep.add("mass_bound", sr.mass_bound);
    }

    void cycle_extend()
    {
        PolyChain t = input();
        auto ce = cycle_extension(t, budget());
        emit_chain_output(ce.t_prime);
        Report rep;
        add_stages(rep, ce.representative.report);
        SurdSum mo = mass_exact(ce.t_prime);
        rep.add("mass_out", mo);
        rep.add("defect", ce.defect);
        rep.add("measured_defect", ce.measured_defect);
        const bool closed = ce.t_prime.dim() == 0 || boundary(ce.t_prime).empty();
        rep.add("is_cycle", closed);
        SurdSum cap = ce.representative.report.mass_t;
        cap *= 2 + budget().epsilon;
        cap += ce.defect;
        rep.require(closed && mo <= cap && ce.measured_defect <= ce.defect);
        finish(rep);
    }

    void disjoint_rep()
    {
        PolyChain t = input();
        auto dr = disjoint_representative(t, budget());
        emit_chain_output(dr.r);
        Report rep;
        add_stages(rep, dr.report);
        SurdSum mr = mass_exact(dr.r);
        rep.add("mass_out", mr);
        rep.add("residual_mass", mass_exact(dr.residual));
        bool identity = dr.r + boundary(dr.filling) == t;
        rep.add("homology_identity", identity);
        rep.require(identity && mr <= dr.report.mass_bound);
        finish(rep);
    }

    void decompose_levels()
    {
        GridFunction u = parse_grid_function(read_text_file(o_.input));
        auto rep_c = verify_coarea(u);
        Report rep;
        rep.add("d", static_cast<long>(u.d));
        rep.add("n", static_cast<long>(u.n));
        rep.add("slices", static_cast<long>(rep_c.slices));
        long i = 0;
        for (const auto& sl : level_slices(u)) {
            const std::string key = "slice_" + std::to_string(i++);
            rep.add(key + "_interval", "(" + to_string(sl.t_low) + ", " + to_string(sl.t_high) + ")");
            rep.add(key + "_mass", mass_exact(sl.r));
        }
        rep.add("mass", rep_c.mass);
        rep.add("integral", rep_c.integral);
        rep.add("gap", rep_c.gap);
        rep.add("chain_identity", rep_c.chain_identity);
        rep.add("multiplicity_one", rep_c.multiplicity_one);
        rep.require(rep_c.ok());
        emit_chain_output(function_boundary(u));
        finish(rep);
    }

    void validate_cmd()
    {
        PolyChain c = input();
        Report rep;
        rep.add("group", c.group().name());
        rep.add("ambient_dim", static_cast<long>(c.ambient_dim()));
        rep.add("dim", static_cast<long>(c.dim()));
        rep.add("terms", static_cast<long>(c.size()));
        if (c.complex_resolution())
            rep.add("complex", "kuhn n=" + std::to_string(*c.complex_resolution()));
        rep.add("canonical_round_trip", parse_chain(emit_chain(c)) == c);
        finish(rep);
    }

    void gen()
    {
        if (o_.grid.empty())
            fail(kModule, "gen needs --grid d,n");
        auto [d, n] = parse_grid(o_.grid);
        Rng rng(o_.seed);
        const int k = o_.k >= 0 ? o_.k : d - 1;
        std::string text;
        if (o_.kind == "grid-function") {
            text = emit_grid_function(random_grid_function(rng, d, n, o_.group == "integer"));
        } else if (o_.kind == "integral-boundary") {
            text = emit_chain(random_integral_boundary_chain(rng, d, n, k, o_.terms / 2 + 1, o_.terms / 2));
        } else if (o_.kind == "flat") {
            text = emit_chain(random_flat_instance(rng, d, n, k, o_.terms));
        } else if (o_.kind == "chain") {
            text = emit_chain(random_grid_chain(rng, GroupTag::parse(o_.group), d, n, k, o_.terms));
        } else {
            throw Error(Error::Kind::Parse, kModule,
                        "--kind must be chain, flat, integral-boundary or grid-function");
        }
        if (o_.out.empty())
            out_ << text;
        else
            write_text_file(o_.out, text);
    }

    bool verdict() const { return verdict_; }

  private:
    const Options& o_;
    std::ostream& out_;
    bool verdict_ = true;
};

}   // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Polyhedral chains over normed groups: mass, flat norm, lifting, coarea"};
    app.name("flatchain");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--grid", o.grid, "complex as d,n");
    app.add_option("--group", o.group, "real | integer | circle | mod:p");
    app.add_option("--epsilon", o.epsilon, "accuracy parameter (rational or decimal)");
    app.add_option("--theta", o.theta, "fixed lifting threshold in (1/4, 3/4)");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--tolerance", o.tolerance, "LP tolerance");
    app.add_option("--out", o.out, "output chain file");
    app.add_option("--report", o.report, "report file (default stdout)");
    app.add_option("--k", o.k, "chain dimension");
    app.add_option("--route", o.route, "auto | loop | cone");
    app.add_option("--r", o.r_file, "decomposition chain R (lift)");
    app.add_option("--s", o.s_file, "decomposition chain S (lift)");
    app.add_option("--kind", o.kind, "gen: chain | flat | integral-boundary | grid-function");
    app.add_option("--terms", o.terms, "gen: number of cells");

    Runner runner(o, out);
    const std::vector<std::pair<std::string, void (Runner::*)()>> commands = {
        {"mass", &Runner::mass},
        {"boundary", &Runner::boundary_cmd},
        {"flatnorm", &Runner::flatnorm},
        {"project", &Runner::project},
        {"lift", &Runner::lift},
        {"cancel-loops", &Runner::cancel_loops},
        {"br-correct", &Runner::br},
        {"cycle-extend", &Runner::cycle_extend},
        {"disjoint-rep", &Runner::disjoint_rep},
        {"decompose-levels", &Runner::decompose_levels},
        {"validate", &Runner::validate_cmd},
        {"gen", &Runner::gen},
    };
    for (const auto& [name, fn] : commands) {
        auto* sub = app.add_subcommand(name);
        if (name != "gen")
            sub->add_option("input", o.input, "input file")->required();
        sub->callback([&runner, f = fn] { (runner.*f)(); });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == Error::Kind::Parse ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return runner.verdict() ? 0 : 2;
}

int run_cli(int argc, const char* const* argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}   // namespace flatchain
