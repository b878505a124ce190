#include "satokdv/tau.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <fmt/format.h>

namespace satokdv {

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::Grassmann:
        return "grassmann";
    case Provenance::Zhou:
        return "zhou";
    case Provenance::Custom:
        return "custom";
    }
    return "custom";
}

int max_tau_degree(const AffineTable& table) { return std::min(table.max_m(), table.max_n()) + 1; }

TauSeries tau_truncated(const AffineTable& table, int degree, Provenance provenance)
{
    if (degree < 0)
        throw InvalidArgument("tau degree must be nonnegative");
    if (degree > max_tau_degree(table))
        throw InsufficientTable(fmt::format("tau degree {} needs an affine table of at least {}x{}, got {}x{}",
                                            degree, degree, degree, table.max_m() + 1, table.max_n() + 1));
    TauSeries tau{.poly = GradedPoly(Vars::Theta, degree), .degree = degree, .provenance = provenance};
    SchurCache schur(degree);
    for (const Partition& mu : partitions_up_to(degree)) {
        const Rational a = giambelli_coeff(mu, table);
        if (a.is_zero())
            continue;
        tau.poly += schur.get(mu) * a;
    }
    return tau;
}

namespace {

int table_extent(int degree) { return std::max(degree - 1, 0); }

} // namespace

TauSeries wk_tau(int degree)
{
    const int m = table_extent(degree);
    return tau_truncated(wk_affine_table(m, m), degree, Provenance::Grassmann);
}

TauSeries point_tau(const GrassmannPoint& p, int degree)
{
    const int m = table_extent(degree);
    return tau_truncated(point_affine_table(p, m, m), degree, Provenance::Custom);
}

GradedPoly to_t_variables(const TauSeries& tau)
{
    GradedPoly out(Vars::T, tau.degree);
    for (const auto& [mono, c] : tau.poly.terms()) {
        Monomial t;
        Rational coeff = c;
        bool even = false;
        for (std::size_t s = 0; s < mono.size(); ++s) {
            if (mono[s] == 0)
                continue;
            const int j = static_cast<int>(s) + 1;
            if (j % 2 == 0) {
                even = true;
                break;
            }
            const int k = (j - 1) / 2;
            coeff *= pow(-Rational(1) / odd_double_factorial(j), mono[s]);
            if (t.size() <= static_cast<std::size_t>(k))
                t.resize(static_cast<std::size_t>(k) + 1, 0);
            t[static_cast<std::size_t>(k)] = mono[s];
        }
        if (!even)
            out.add_term(std::move(t), coeff);
    }
    return out;
}

GradedPoly log_series(const GradedPoly& p, int degree)
{
    if (p.constant_term() != Rational(1))
        throw NonUnit(fmt::format("log needs constant term 1, got {}", p.constant_term().str()));
    const int bound = std::min(degree, p.bound());
    GradedPoly x = p.truncated(bound) - GradedPoly::constant(p.vars(), bound, Rational(1));
    GradedPoly out(p.vars(), bound);
    if (x.is_zero())
        return out;
    // x has no constant term, so x^n vanishes below weight n.
    GradedPoly power = x;
    for (int n = 1; n <= bound && !power.is_zero(); ++n) {
        out += power * Rational(n % 2 == 1 ? 1 : -1, n);
        power = (power * x).truncated(bound);
    }
    return out;
}

GradedPoly exp_series(const GradedPoly& p, int degree)
{
    if (!p.constant_term().is_zero())
        throw NonUnit(fmt::format("exp needs constant term 0, got {}", p.constant_term().str()));
    const int bound = std::min(degree, p.bound());
    const GradedPoly x = p.truncated(bound);
    GradedPoly out = GradedPoly::constant(p.vars(), bound, Rational(1));
    GradedPoly power = GradedPoly::constant(p.vars(), bound, Rational(1));
    for (int n = 1; n <= bound; ++n) {
        power = (power * x).truncated(bound) * Rational(1, n);
        if (power.is_zero())
            break;
        out += power;
    }
    return out;
}

GradedPoly free_energy(const TauSeries& tau) { return log_series(to_t_variables(tau), tau.degree); }

CorrelatorSpec::CorrelatorSpec(std::vector<int> exponents) : k(std::move(exponents))
{
    for (int v : k)
        if (v < 0)
            throw InvalidArgument("correlator exponents must be nonnegative");
    std::sort(k.begin(), k.end());
}

CorrelatorSpec CorrelatorSpec::parse(const std::string& text)
{
    std::vector<int> ks;
    if (text.empty())
        return {};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = 0;
        const char* first = item.data();
        const char* last = first + item.size();
        while (first < last && *first == ' ')
            ++first;
        while (last > first && last[-1] == ' ')
            --last;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last || v < 0)
            throw ParseError(fmt::format("bad correlator exponent '{}' in '{}'", item, text));
        ks.push_back(v);
    }
    if (!text.empty() && text.back() == ',')
        throw ParseError(fmt::format("trailing comma in '{}'", text));
    return CorrelatorSpec(std::move(ks));
}

int CorrelatorSpec::sum() const
{
    int s = 0;
    for (int v : k)
        s += v;
    return s;
}

int CorrelatorSpec::weight() const { return 2 * sum() + n(); }

bool CorrelatorSpec::dimension_ok() const
{
    const int d = sum() - n() + 3;
    return d >= 0 && d % 3 == 0;
}

int CorrelatorSpec::genus() const { return (sum() - n() + 3) / 3; }

Monomial CorrelatorSpec::monomial() const
{
    Monomial m;
    for (int v : k) {
        if (m.size() <= static_cast<std::size_t>(v))
            m.resize(static_cast<std::size_t>(v) + 1, 0);
        ++m[static_cast<std::size_t>(v)];
    }
    return m;
}

std::string CorrelatorSpec::str() const
{
    if (k.empty())
        return "<>";
    std::string out = "<";
    for (int v : k)
        out += fmt::format("tau{}", v);
    return out + ">";
}

Correlator intersection_number(const CorrelatorSpec& spec, const GradedPoly& free_energy)
{
    Correlator c;
    c.spec = spec;
    if (!spec.dimension_ok()) {
        c.dimension_mismatch = true;
        return c;
    }
    c.genus = spec.genus();
    const Monomial m = spec.monomial();
    Rational mult(1);
    for (int e : m)
        mult *= factorial(e);
    c.value = mult * free_energy.coeff(m);
    return c;
}

namespace {

void monomials_rec(int slot, int remaining, Monomial& cur, std::vector<Monomial>& out)
{
    const int w = 2 * slot + 1;
    if (w > remaining) {
        Monomial m = cur;
        while (!m.empty() && m.back() == 0)
            m.pop_back();
        out.push_back(std::move(m));
        return;
    }
    for (int e = 0; e * w <= remaining; ++e) {
        cur.push_back(e);
        monomials_rec(slot + 1, remaining - e * w, cur, out);
        cur.pop_back();
    }
}

/// Records one check per weight level that p is zero through p.bound().
void expect_zero(VerificationReport& r, const GradedPoly& p)
{
    for (int w = 0; w <= p.bound(); ++w) {
        const GradedPoly part = p.homogeneous_part(w);
        ++r.checks;
        if (!part.is_zero()) {
            r.fail(fmt::format("weight {}", w), part.str(), "0");
            return;
        }
    }
}

} // namespace

std::vector<Monomial> t_monomials_up_to(int max_weight)
{
    std::vector<Monomial> out;
    if (max_weight < 0)
        return out;
    Monomial cur;
    monomials_rec(0, max_weight, cur, out);
    return out;
}

VerificationReport verify_string_equation(const TauSeries& tau)
{
    const GradedPoly z = to_t_variables(tau);
    GradedPoly residual = z.times_variable(0).times_variable(0) * Rational(1, 2) - z.derivative(0);
    for (int p = 1; 2 * p - 1 <= tau.degree; ++p)
        residual += z.derivative(p - 1).times_variable(p);
    VerificationReport r("string", residual.bound());
    expect_zero(r, residual);
    return r;
}

VerificationReport verify_kdv_flow(const TauSeries& tau, int p)
{
    if (p < 1)
        throw InvalidArgument("KdV flow index must be >= 1");
    const GradedPoly f = free_energy(tau);
    const GradedPoly u = f.derivative(0).derivative(0);
    const GradedPoly ux = u.derivative(0);
    GradedPoly residual;
    if (p == 1) {
        residual = u.derivative(1) - u * ux - ux.derivative(0).derivative(0) * Rational(1, 12);
    } else {
        const GradedPoly w = u.derivative(p - 1);
        const GradedPoly w_int = f.derivative(0).derivative(p - 1);
        const GradedPoly rhs = (u * w * Rational(2) + ux * w_int + w.derivative(0).derivative(0) * Rational(1, 4)) * Rational(1, 2 * p + 1);
        residual = u.derivative(p) - rhs;
    }
    if (residual.bound() < 0)
        throw DegreeExceeded(fmt::format("tau degree {} leaves nothing reliable for flow {}", tau.degree, p));
    VerificationReport r(fmt::format("kdv-flow-{}", p), residual.bound());
    expect_zero(r, residual);
    return r;
}

std::vector<Rational> u0_coefficients(const TauSeries& tau, int max_n)
{
    if (max_n + 2 > tau.degree)
        throw DegreeExceeded(fmt::format("initial data through x^{} needs tau degree {}, have {}", max_n, max_n + 2, tau.degree));
    const GradedPoly f = free_energy(tau);
    std::vector<Rational> out;
    for (int n = 0; n <= max_n; ++n)
        out.push_back(Rational((n + 2) * (n + 1)) * f.coeff(GradedPoly::monomial(Vars::T, {{0, n + 2}})));
    return out;
}

std::vector<Rational> initial_data(const TauSeries& tau, int max_n)
{
    std::vector<Rational> s = u0_coefficients(tau, max_n);
    for (std::size_t n = 0; n < s.size(); ++n)
        s[n] *= factorial(static_cast<int>(n));
    return s;
}

namespace {

CorrelatorSpec spec_of(const Monomial& m)
{
    std::vector<int> ks;
    for (std::size_t a = 0; a < m.size(); ++a)
        for (int e = 0; e < m[a]; ++e)
            ks.push_back(static_cast<int>(a));
    return CorrelatorSpec(std::move(ks));
}

} // namespace

VerificationReport verify_dimension_filter(const TauSeries& tau)
{
    const GradedPoly f = free_energy(tau);
    VerificationReport r("dimension-filter", f.bound());
    for (const Monomial& mono : t_monomials_up_to(f.bound())) {
        const CorrelatorSpec spec = spec_of(mono);
        if (!spec.dimension_ok())
            r.check(spec.str(), f.coeff(mono), Rational(0));
    }
    return r;
}

VerificationReport verify_string_relations(const TauSeries& tau)
{
    const GradedPoly f = free_energy(tau);
    VerificationReport r("string-relations", f.bound());
    const CorrelatorSpec seed({0, 0, 0});
    for (const Monomial& rest : t_monomials_up_to(f.bound() - 1)) {
        CorrelatorSpec rest_spec = spec_of(rest);
        if (rest_spec.n() == 0)
            continue;
        std::vector<int> full = rest_spec.k;
        full.push_back(0);
        const CorrelatorSpec lhs_spec(full);
        if (lhs_spec.k == seed.k)
            continue;
        const Rational lhs = intersection_number(lhs_spec, f).value;
        Rational rhs;
        for (std::size_t i = 0; i < rest_spec.k.size(); ++i) {
            if (rest_spec.k[i] == 0 || (i > 0 && rest_spec.k[i] == rest_spec.k[i - 1]))
                continue;
            // Each equal exponent contributes the same term.
            const auto mult = std::count(rest_spec.k.begin(), rest_spec.k.end(), rest_spec.k[i]);
            std::vector<int> lowered = rest_spec.k;
            --lowered[i];
            rhs += Rational(static_cast<long>(mult)) * intersection_number(CorrelatorSpec(lowered), f).value;
        }
        r.check(lhs_spec.str(), lhs, rhs);
    }
    return r;
}

} // namespace satokdv
