#include "satokdv/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace satokdv {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw ParseError(fmt::format("expected a rational string, got {}", j.dump()));
}

namespace {

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw ParseError(fmt::format("missing field \"{}\"", name));
    return j.at(name);
}

int int_field(const Json& j, const char* name)
{
    const Json& v = field(j, name);
    if (!v.is_number_integer())
        throw ParseError(fmt::format("field \"{}\" must be an integer", name));
    return v.get<int>();
}

const Json& array_field(const Json& j, const char* name)
{
    const Json& v = field(j, name);
    if (!v.is_array())
        throw ParseError(fmt::format("field \"{}\" must be an array", name));
    return v;
}

int as_int(const Json& v, const char* what)
{
    if (!v.is_number_integer())
        throw ParseError(fmt::format("{} must be an integer, got {}", what, v.dump()));
    return v.get<int>();
}

} // namespace

Json series_to_json(const LaurentSeries& s)
{
    Json head = Json::array();
    for (auto it = s.terms().rbegin(); it != s.terms().rend() && it->first > 0; ++it)
        head.push_back(Json::array({it->first, rational_to_json(it->second)}));
    int order = s.tail_order();
    if (s.is_exact()) {
        order = 0;
        if (!s.terms().empty())
            order = std::max(0, -s.terms().begin()->first);
    }
    Json tail = Json::array();
    for (int k = 0; k <= order; ++k)
        tail.push_back(rational_to_json(s.tail(k)));
    Json out;
    out["head"] = head;
    out["tail_order"] = order;
    out["tail"] = tail;
    if (s.is_exact())
        out["exact"] = true;
    return out;
}

LaurentSeries series_from_json(const Json& j)
{
    const int order = int_field(j, "tail_order");
    if (order < 0)
        throw ParseError("tail_order must be nonnegative");
    const Json& tail = array_field(j, "tail");
    if (static_cast<int>(tail.size()) != order + 1)
        throw ParseError(fmt::format("tail has {} entries, expected tail_order + 1 = {}", tail.size(), order + 1));
    bool exact = false;
    if (j.contains("exact")) {
        if (!j.at("exact").is_boolean())
            throw ParseError("field \"exact\" must be a boolean");
        exact = j.at("exact").get<bool>();
    }
    LaurentSeries s = exact ? LaurentSeries::exact() : LaurentSeries(order);
    for (int k = 0; k <= order; ++k)
        s.set(-k, rational_from_json(tail[static_cast<std::size_t>(k)]));
    if (j.contains("head")) {
        const Json& head = array_field(j, "head");
        for (const Json& term : head) {
            if (!term.is_array() || term.size() != 2)
                throw ParseError("head entries must be [exponent, value] pairs");
            const int e = as_int(term[0], "head exponent");
            if (e <= 0)
                throw ParseError(fmt::format("head exponent must be positive, got {}", e));
            s.set(e, s.coeff(e) + rational_from_json(term[1]));
        }
    }
    return s;
}

Json point_to_json(const GrassmannPoint& p)
{
    Json out;
    out["a"] = series_to_json(p.a);
    out["b"] = series_to_json(p.b);
    return out;
}

GrassmannPoint point_from_json(const Json& j) { return {series_from_json(field(j, "a")), series_from_json(field(j, "b"))}; }

GrassmannPoint load_point(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(fmt::format("cannot open point file {}", path));
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(fmt::format("{}: {}", path, e.what()));
    }
    return point_from_json(j);
}

std::string affine_to_csv(const AffineTable& t)
{
    std::string out = "m\\n";
    for (int n = 0; n <= t.max_n(); ++n)
        out += fmt::format(",{}", n);
    out += '\n';
    for (int m = 0; m <= t.max_m(); ++m) {
        out += std::to_string(m);
        for (int n = 0; n <= t.max_n(); ++n)
            out += "," + t.at(m, n).str();
        out += '\n';
    }
    return out;
}

Json affine_to_json(const AffineTable& t, const std::optional<std::string>& source)
{
    Json out;
    if (source)
        out["source"] = *source;
    out["max_m"] = t.max_m();
    out["max_n"] = t.max_n();
    Json entries = Json::array();
    for (int m = 0; m <= t.max_m(); ++m)
        for (int n = 0; n <= t.max_n(); ++n)
            if (!t.at(m, n).is_zero())
                entries.push_back(Json::array({m, n, rational_to_json(t.at(m, n))}));
    out["entries"] = entries;
    return out;
}

AffineTable affine_from_json(const Json& j)
{
    AffineTable t(int_field(j, "max_m"), int_field(j, "max_n"));
    for (const Json& e : array_field(j, "entries")) {
        if (!e.is_array() || e.size() != 3)
            throw ParseError("affine entries must be [m, n, value]");
        const int m = as_int(e[0], "m"), n = as_int(e[1], "n");
        if (!t.contains(m, n))
            throw ParseError(fmt::format("entry ({}, {}) outside declared extents", m, n));
        t.at(m, n) = rational_from_json(e[2]);
    }
    return t;
}

Json graded_poly_to_json(const GradedPoly& p)
{
    Json terms = Json::array();
    for (const auto& [mono, c] : p.ordered_terms()) {
        Json powers = Json::array();
        for (std::size_t s = 0; s < mono.size(); ++s)
            if (mono[s] != 0)
                powers.push_back(Json::array({GradedPoly::index_of_slot(p.vars(), static_cast<int>(s)), mono[s]}));
        terms.push_back(Json::array({powers, rational_to_json(c)}));
    }
    Json out;
    out["degree"] = p.bound();
    out["vars"] = p.vars() == Vars::Theta ? "theta" : "t";
    out["terms"] = terms;
    return out;
}

GradedPoly graded_poly_from_json(const Json& j)
{
    Vars vars = Vars::Theta;
    if (j.contains("vars")) {
        const Json& v = j.at("vars");
        if (v == "theta")
            vars = Vars::Theta;
        else if (v == "t")
            vars = Vars::T;
        else
            throw ParseError(fmt::format("unknown vars {}", v.dump()));
    }
    GradedPoly p(vars, int_field(j, "degree"));
    for (const Json& term : array_field(j, "terms")) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_array())
            throw ParseError("terms must be [[[index, exponent], ...], value]");
        std::vector<std::pair<int, int>> powers;
        for (const Json& pe : term[0]) {
            if (!pe.is_array() || pe.size() != 2)
                throw ParseError("powers must be [index, exponent] pairs");
            powers.emplace_back(as_int(pe[0], "variable index"), as_int(pe[1], "exponent"));
        }
        Monomial mono;
        try {
            mono = GradedPoly::monomial(vars, powers);
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
        if (p.weight(mono) > p.bound())
            throw ParseError(fmt::format("term of weight {} exceeds declared degree {}", p.weight(mono), p.bound()));
        p.add_term(std::move(mono), rational_from_json(term[1]));
    }
    return p;
}

Json vtable_to_json(const VTable& v)
{
    Json entries = Json::array();
    for (int d = 0; d <= v.max_sum(); ++d)
        for (int k = d; k >= 0; --k) {
            const int l = d - k;
            const Mat2& m = v.at(k, l);
            entries.push_back(Json::array({k, l,
                                           Json::array({Json::array({rational_to_json(m(0, 0)), rational_to_json(m(0, 1))}),
                                                        Json::array({rational_to_json(m(1, 0)), rational_to_json(m(1, 1))})})}));
        }
    Json out;
    out["max_sum"] = v.max_sum();
    out["entries"] = entries;
    return out;
}

Json correlator_to_json(const Correlator& c)
{
    Json out;
    out["spec"] = c.spec.k;
    if (c.dimension_mismatch)
        out["genus"] = nullptr;
    else
        out["genus"] = c.genus;
    out["value"] = rational_to_json(c.value);
    if (c.dimension_mismatch)
        out["dimension_mismatch"] = true;
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace satokdv
