#include "commands.hpp"

#include "satokdv/grassmann.hpp"
#include "satokdv/io.hpp"
#include "satokdv/spin3.hpp"
#include "satokdv/tau.hpp"
#include "satokdv/zhou.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>

namespace satokdv::cli {

namespace {

struct CoeffsOpts {
    std::string kind = "c";
    int max = 5;
};

struct AffineOpts {
    std::string source = "grassmann";
    int max_m = 6;
    int max_n = 6;
    std::string format = "csv";
};

struct IntersectOpts {
    std::string spec;
    bool json = false;
};

struct VerifyOpts {
    std::string suite;
    std::optional<int> depth;
    int flow = 1;
    std::string point;
};

struct GrassmannOpts {
    std::string point;
    std::vector<std::string> tasks;
    int depth = 12;
    std::string vars = "t";
    std::string format = "csv";
};

int cmd_coeffs(const CoeffsOpts& o, std::ostream& out)
{
    for (int k = 0; k <= o.max; ++k) {
        const Rational v = o.kind == "c" ? wk_c_coeff(k) : o.kind == "q" ? wk_q_coeff(k) : b_seq(k);
        out << k << ' ' << v.str() << '\n';
    }
    return kExitPass;
}

int cmd_affine(const AffineOpts& o, std::ostream& out)
{
    const AffineTable t = o.source == "zhou" ? zhou_table(o.max_m, o.max_n) : wk_affine_table(o.max_m, o.max_n);
    if (o.format == "csv")
        out << affine_to_csv(t);
    else
        out << dump(affine_to_json(t, o.source));
    return kExitPass;
}

int cmd_intersect(const IntersectOpts& o, std::ostream& out, std::ostream& err)
{
    const CorrelatorSpec spec = CorrelatorSpec::parse(o.spec);
    Correlator c;
    if (!spec.dimension_ok()) {
        c = intersection_number(spec, GradedPoly(Vars::T, 0));
        err << fmt::format("warning: {} violates the dimension constraint (sum k - n + 3 = {} is not a nonnegative multiple of 3)\n",
                           spec.str(), spec.sum() - spec.n() + 3);
    } else {
        c = intersection_number(spec, free_energy(wk_tau(std::max(spec.weight(), 1))));
    }
    if (o.json)
        out << dump(correlator_to_json(c));
    else if (c.dimension_mismatch)
        out << c.value.str() << '\n';
    else
        out << fmt::format("{} (g={})\n", c.value.str(), c.genus);
    return kExitPass;
}

using SuiteFn = std::function<VerificationReport(int depth, const VerifyOpts&)>;

struct Suite {
    const char* name;
    int default_depth;
    SuiteFn run;
};

TauSeries suite_tau(const VerifyOpts& o, int depth)
{
    if (o.point.empty())
        return wk_tau(depth);
    return point_tau(load_point(o.point), depth);
}

VerificationReport run_recursion(int d)
{
    const int zk = d / 2 + 1;
    const MatrixSeries g = wk_G(required_g_depth_for_z(zk, zk));
    const ZTable z = z_table_direct(g, zk, zk);
    VerificationReport r("recursion", d);
    r.merge(verify_two_step_recursion(to_affine_table(z), d));
    r.merge(verify_z_recursion(z));
    r.merge(verify_z_tables_agree(g, d / 2, d / 2));
    r.depth = d;
    return r;
}

VerificationReport run_symmetry(int d)
{
    const MatrixSeries g = wk_G(required_g_depth_for_z(d, d));
    const ZTable z = z_table_direct(g, d, d);
    VerificationReport r("symmetry", d);
    r.merge(verify_symmetry(z, g, d));
    r.merge(verify_affine_symmetry(to_affine_table(z), d));
    return r;
}

VerificationReport run_genfun(int d)
{
    const MatrixSeries g = wk_G(2 * d + 2);
    const ZTable z = z_table_direct(g, d, d);
    VerificationReport r("genfun", d);
    r.merge(verify_generating_function(g, z, d));
    r.merge(verify_z_generating(g, z, d));
    return r;
}

VerificationReport run_vmatrix(int d)
{
    const VTable v = v_table(2 * d + 1);
    VerificationReport r("vmatrix", d);
    r.merge(verify_v_relations(v, d));
    r.merge(verify_v_reconstruction(v));
    const VerificationReport signed_form = verify_v_relations_signed(v, d);
    r.note = fmt::format("signed variant V[k,l+1]+V[k+1,l] = -V[k,0]V[0,l]: {}", signed_form.ok() ? "holds" : "fails");
    return r;
}

VerificationReport run_correlators(int d)
{
    const TauSeries tau = wk_tau(d);
    VerificationReport r("correlators", d);
    r.merge(verify_dimension_filter(tau));
    r.merge(verify_string_relations(tau));
    const GradedPoly f = free_energy(tau);
    r.check("<tau0tau0tau0>", intersection_number(CorrelatorSpec({0, 0, 0}), f).value, Rational(1));
    r.check("<tau1>", intersection_number(CorrelatorSpec({1}), f).value, Rational(1, 24));
    return r;
}

VerificationReport run_bn(int d)
{
    const std::array<Rational, 4> xs{Rational(1), Rational(2), Rational(3), Rational(5)};
    VerificationReport r("bn-recursion", d);
    for (int n = 1; n <= d; ++n)
        r.merge(verify_Bn_recursion(n, xs));
    r.depth = d;
    return r;
}

VerificationReport run_combinatorics(int d)
{
    VerificationReport r("combinatorics", d);
    for (int m = 1; m <= d; ++m)
        for (int n = 1; n <= d; ++n)
            r.merge(verify_combinatorial_identity(m, n));
    r.depth = d;
    return r;
}

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all = {
        {"cq-identity", 30, [](int d, const VerifyOpts&) { return verify_cq_identity(d); }},
        {"kac-schwarz", 30, [](int d, const VerifyOpts&) { return verify_kac_schwarz(d); }},
        {"recursion", 40, [](int d, const VerifyOpts&) { return run_recursion(d); }},
        {"symmetry", 30, [](int d, const VerifyOpts&) { return run_symmetry(d); }},
        {"genfun", 15, [](int d, const VerifyOpts&) { return run_genfun(d); }},
        {"zhou-match", 30, [](int d, const VerifyOpts&) { return verify_zhou_match(wk_affine_table(d, d), d, d); }},
        {"string", 12, [](int d, const VerifyOpts& o) { return verify_string_equation(suite_tau(o, d)); }},
        {"kdv", 12, [](int d, const VerifyOpts& o) { return verify_kdv_flow(suite_tau(o, d), o.flow); }},
        {"correlators", 12, [](int d, const VerifyOpts&) { return run_correlators(d); }},
        {"rmatrix", 12, [](int d, const VerifyOpts&) { return verify_R_from_G(d); }},
        {"vmatrix", 3, [](int d, const VerifyOpts&) { return run_vmatrix(d); }},
        {"thm2", 3, [](int d, const VerifyOpts&) { return verify_thm2(d, d); }},
        {"bn-recursion", 5, [](int d, const VerifyOpts&) { return run_bn(d); }},
        {"combinatorics", 5, [](int d, const VerifyOpts&) { return run_combinatorics(d); }},
    };
    return all;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out)
{
    bool passed = true;
    for (const Suite& s : suites()) {
        if (o.suite != "all" && o.suite != s.name)
            continue;
        const int depth = o.suite == "all" ? s.default_depth : o.depth.value_or(s.default_depth);
        const VerificationReport r = s.run(depth, o);
        out << r.summary() << '\n';
        passed = passed && r.ok();
    }
    return passed ? kExitPass : kExitFail;
}

int cmd_grassmann(const GrassmannOpts& o, std::ostream& out)
{
    const GrassmannPoint point = load_point(o.point);
    for (const std::string& task : o.tasks) {
        if (task == "affine") {
            const int m = std::max(o.depth - 1, 0);
            const AffineTable t = point_affine_table(point, m, m);
            out << (o.format == "csv" ? affine_to_csv(t) : dump(affine_to_json(t, std::string("custom"))));
        } else if (task == "tau") {
            const TauSeries tau = point_tau(point, o.depth);
            out << dump(graded_poly_to_json(o.vars == "theta" ? tau.poly : to_t_variables(tau)));
        } else {
            const TauSeries tau = point_tau(point, o.depth);
            const std::vector<Rational> u0 = u0_coefficients(tau, o.depth - 2);
            const std::vector<Rational> s = initial_data(tau, o.depth - 2);
            Json j;
            j["u0"] = Json::array();
            j["s"] = Json::array();
            for (std::size_t n = 0; n < s.size(); ++n) {
                j["u0"].push_back(rational_to_json(u0[n]));
                j["s"].push_back(rational_to_json(s[n]));
            }
            out << dump(j);
        }
    }
    return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Sato Grassmannian and KdV tau-function toolkit", "satokdv"};
    app.require_subcommand(1);

    CoeffsOpts coeffs;
    auto* c = app.add_subcommand("coeffs", "Print c_k, q_k or b_k for k = 0..max");
    c->add_option("--kind", coeffs.kind, "c, q or b")->check(CLI::IsMember({"c", "q", "b"}));
    c->add_option("--max", coeffs.max, "Largest index")->check(CLI::NonNegativeNumber);

    AffineOpts affine;
    auto* a = app.add_subcommand("affine", "Export the affine coordinate table A_{m,n}");
    a->add_option("--source", affine.source, "grassmann or zhou")->check(CLI::IsMember({"grassmann", "zhou"}));
    a->add_option("--max-m", affine.max_m)->check(CLI::NonNegativeNumber);
    a->add_option("--max-n", affine.max_n)->check(CLI::NonNegativeNumber);
    a->add_option("--format", affine.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    IntersectOpts intersect;
    auto* in = app.add_subcommand("intersect", "Intersection number <tau_k1 ... tau_kn>");
    in->add_option("spec", intersect.spec, "Comma-separated exponents, e.g. 0,0,0")->required();
    in->add_flag("--json", intersect.json, "Print the correlator as JSON");

    VerifyOpts verify;
    auto* v = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> names{"all"};
    for (const Suite& s : suites())
        names.emplace_back(s.name);
    v->add_option("suite", verify.suite, "Suite name")->required()->check(CLI::IsMember(names));
    v->add_option("--depth", verify.depth, "Depth (suite specific)")->check(CLI::NonNegativeNumber);
    v->add_option("--flow", verify.flow, "KdV flow index p")->check(CLI::PositiveNumber);
    v->add_option("--point", verify.point, "Point file for the string and kdv suites")->check(CLI::ExistingFile);

    GrassmannOpts grassmann;
    auto* g = app.add_subcommand("grassmann", "Affine table, tau function or initial data of a custom point");
    g->add_option("--point", grassmann.point, "Point file {\"a\": series, \"b\": series}")->required()->check(CLI::ExistingFile);
    g->add_option("--task", grassmann.tasks, "affine, tau or initial-data (repeatable)")
        ->required()
        ->check(CLI::IsMember({"affine", "tau", "initial-data"}));
    g->add_option("--depth", grassmann.depth, "Tau degree D")->check(CLI::Range(2, 64));
    g->add_option("--vars", grassmann.vars, "theta or t")->check(CLI::IsMember({"theta", "t"}));
    g->add_option("--format", grassmann.format, "csv or json (affine task)")->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*c)
            return cmd_coeffs(coeffs, out);
        if (*a)
            return cmd_affine(affine, out);
        if (*in)
            return cmd_intersect(intersect, out, err);
        if (*v)
            return cmd_verify(verify, out);
        return cmd_grassmann(grassmann, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace satokdv::cli
