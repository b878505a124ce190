#include "satokdv/schur.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace satokdv {

Partition::Partition(std::vector<int> parts)
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidArgument("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const
{
    std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

std::string Partition::str() const { return fmt::format("({})", fmt::join(parts_, ",")); }

namespace {

void partitions_of(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_of(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_up_to(int max_weight)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    for (int w = 0; w <= max_weight; ++w)
        partitions_of(w, w, prefix, out);
    return out;
}

FrobeniusCoords frobenius(const Partition& mu)
{
    const Partition conj = mu.conjugate();
    FrobeniusCoords f;
    for (int i = 1; mu.part(i) >= i; ++i) {
        f.arms.push_back(mu.part(i) - i);
        f.legs.push_back(conj.part(i) - i);
    }
    return f;
}

Partition from_frobenius(const FrobeniusCoords& f)
{
    const int k = f.rank();
    if (static_cast<int>(f.legs.size()) != k)
        throw InvalidArgument("Frobenius arms and legs differ in length");
    for (int i = 1; i < k; ++i)
        if (f.arms[static_cast<std::size_t>(i)] >= f.arms[static_cast<std::size_t>(i - 1)]
            || f.legs[static_cast<std::size_t>(i)] >= f.legs[static_cast<std::size_t>(i - 1)])
            throw InvalidArgument("Frobenius coordinates must be strictly decreasing");
    std::vector<int> parts;
    for (int i = 1; i <= k; ++i)
        parts.push_back(f.arms[static_cast<std::size_t>(i - 1)] + i);
    // Rows below the diagonal block: row i meets column j iff mu'_j = n_j + j >= i.
    const int depth = k == 0 ? 0 : f.legs.front() + 1;
    for (int i = k + 1; i <= depth; ++i) {
        int len = 0;
        for (int j = 1; j <= k; ++j)
            if (f.legs[static_cast<std::size_t>(j - 1)] + j >= i)
                ++len;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

// GradedPoly

int GradedPoly::slot(Vars vars, int index)
{
    if (vars == Vars::Theta) {
        if (index < 1)
            throw InvalidArgument(fmt::format("theta index must be >= 1, got {}", index));
        return index - 1;
    }
    if (index < 0)
        throw InvalidArgument(fmt::format("t index must be >= 0, got {}", index));
    return index;
}

int GradedPoly::index_of_slot(Vars vars, int slot) { return vars == Vars::Theta ? slot + 1 : slot; }

int GradedPoly::slot_weight(Vars vars, int slot) { return vars == Vars::Theta ? slot + 1 : 2 * slot + 1; }

Monomial GradedPoly::monomial(Vars vars, const std::vector<std::pair<int, int>>& powers)
{
    Monomial mono;
    for (const auto& [index, e] : powers) {
        if (e < 0)
            throw InvalidArgument("negative exponent in monomial");
        auto s = static_cast<std::size_t>(slot(vars, index));
        if (mono.size() <= s)
            mono.resize(s + 1, 0);
        mono[s] += e;
    }
    while (!mono.empty() && mono.back() == 0)
        mono.pop_back();
    return mono;
}

GradedPoly GradedPoly::constant(Vars vars, int bound, const Rational& value)
{
    GradedPoly p(vars, bound);
    p.add_term({}, value);
    return p;
}

GradedPoly GradedPoly::variable(Vars vars, int bound, int index)
{
    GradedPoly p(vars, bound);
    p.add_term(monomial(vars, {{index, 1}}), Rational(1));
    return p;
}

int GradedPoly::weight(const Monomial& mono) const
{
    int w = 0;
    for (std::size_t s = 0; s < mono.size(); ++s)
        w += mono[s] * slot_weight(vars_, static_cast<int>(s));
    return w;
}

int GradedPoly::low_weight() const
{
    int low = bound_ + 1;
    for (const auto& [mono, c] : terms_)
        low = std::min(low, weight(mono));
    return low;
}

Rational GradedPoly::coeff(const Monomial& mono) const
{
    if (weight(mono) > bound_)
        throw DegreeExceeded(fmt::format("coefficient of weight {} requested from a polynomial known through weight {}", weight(mono), bound_));
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::add_term(Monomial mono, const Rational& value)
{
    while (!mono.empty() && mono.back() == 0)
        mono.pop_back();
    if (value.is_zero() || weight(mono) > bound_)
        return;
    auto [it, inserted] = terms_.try_emplace(std::move(mono), value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GradedPoly GradedPoly::truncated(int bound) const
{
    GradedPoly r(vars_, std::min(bound, bound_));
    for (const auto& [mono, c] : terms_)
        r.add_term(mono, c);
    return r;
}

GradedPoly GradedPoly::homogeneous_part(int w) const
{
    if (w > bound_)
        throw DegreeExceeded(fmt::format("weight-{} part requested, polynomial known through {}", w, bound_));
    GradedPoly r(vars_, bound_);
    for (const auto& [mono, c] : terms_)
        if (weight(mono) == w)
            r.terms_.emplace(mono, c);
    return r;
}

void GradedPoly::check_same_vars(const GradedPoly& o) const
{
    if (vars_ != o.vars_)
        throw InvalidArgument("graded polynomials in different variables");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o)
{
    check_same_vars(o);
    if (o.bound_ < bound_)
        *this = truncated(o.bound_);
    for (const auto& [mono, c] : o.terms_)
        add_term(mono, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o)
{
    check_same_vars(o);
    if (o.bound_ < bound_)
        *this = truncated(o.bound_);
    for (const auto& [mono, c] : o.terms_)
        add_term(mono, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_)
        c *= s;
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b)
{
    a.check_same_vars(b);
    // Unknown terms of a (weight > a.bound) meet b no lower than a.bound + 1 + low(b).
    const int bound = std::min(a.bound_ + b.low_weight(), b.bound_ + a.low_weight());
    GradedPoly r(a.vars_, bound);
    std::vector<std::pair<const Monomial*, int>> bw;
    bw.reserve(b.terms_.size());
    for (const auto& [mono, c] : b.terms_)
        bw.emplace_back(&mono, b.weight(mono));
    for (const auto& [ma, ca] : a.terms_) {
        const int wa = a.weight(ma);
        auto itb = b.terms_.begin();
        for (std::size_t i = 0; i < bw.size(); ++i, ++itb) {
            if (wa + bw[i].second > bound)
                continue;
            const Monomial& mb = *bw[i].first;
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t s = 0; s < ma.size(); ++s)
                m[s] += ma[s];
            for (std::size_t s = 0; s < mb.size(); ++s)
                m[s] += mb[s];
            r.add_term(std::move(m), ca * itb->second);
        }
    }
    return r;
}

GradedPoly GradedPoly::derivative(int index) const
{
    const auto s = static_cast<std::size_t>(slot(vars_, index));
    GradedPoly r(vars_, bound_ - slot_weight(vars_, static_cast<int>(s)));
    for (const auto& [mono, c] : terms_) {
        if (mono.size() <= s || mono[s] == 0)
            continue;
        Monomial m = mono;
        Rational factor(m[s]);
        --m[s];
        r.add_term(std::move(m), factor * c);
    }
    return r;
}

GradedPoly GradedPoly::times_variable(int index) const
{
    const auto s = static_cast<std::size_t>(slot(vars_, index));
    GradedPoly r(vars_, bound_ + slot_weight(vars_, static_cast<int>(s)));
    for (const auto& [mono, c] : terms_) {
        Monomial m = mono;
        if (m.size() <= s)
            m.resize(s + 1, 0);
        ++m[s];
        r.add_term(std::move(m), c);
    }
    return r;
}

GradedPoly GradedPoly::with_zeroed(const std::vector<int>& indices) const
{
    GradedPoly r(vars_, bound_);
    for (const auto& [mono, c] : terms_) {
        bool vanishes = false;
        for (int index : indices) {
            auto s = static_cast<std::size_t>(slot(vars_, index));
            if (s < mono.size() && mono[s] > 0)
                vanishes = true;
        }
        if (!vanishes)
            r.terms_.emplace(mono, c);
    }
    return r;
}

std::vector<std::pair<Monomial, Rational>> GradedPoly::ordered_terms() const
{
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(), [this](const auto& x, const auto& y) { return weight(x.first) < weight(y.first); });
    return out;
}

std::string GradedPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    const char* name = vars_ == Vars::Theta ? "theta" : "t";
    for (const auto& [mono, c] : ordered_terms()) {
        std::string factors;
        for (std::size_t s = 0; s < mono.size(); ++s) {
            if (mono[s] == 0)
                continue;
            if (!factors.empty())
                factors += "*";
            factors += fmt::format("{}{}", name, index_of_slot(vars_, static_cast<int>(s)));
            if (mono[s] > 1)
                factors += fmt::format("^{}", mono[s]);
        }
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        std::string term;
        if (factors.empty())
            term = mag.str();
        else if (mag == Rational(1))
            term = factors;
        else
            term = mag.str() + "*" + factors;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

std::vector<GradedPoly> h_polys(int max_degree)
{
    if (max_degree < 0)
        throw InvalidArgument("h_polys needs a nonnegative degree");
    std::vector<GradedPoly> h;
    h.reserve(static_cast<std::size_t>(max_degree) + 1);
    h.push_back(GradedPoly::constant(Vars::Theta, max_degree, Rational(1)));
    // k h_k = sum_{j=1}^{k} j theta_j h_{k-j}
    for (int k = 1; k <= max_degree; ++k) {
        GradedPoly acc(Vars::Theta, max_degree);
        for (int j = 1; j <= k; ++j)
            acc += h[static_cast<std::size_t>(k - j)].times_variable(j).truncated(max_degree) * Rational(j);
        h.push_back(acc * Rational(1, k));
    }
    return h;
}

namespace {

GradedPoly jacobi_trudi(const Partition& mu, const std::vector<GradedPoly>& h, int max_degree)
{
    const int len = mu.length();
    const int w = mu.weight();
    const GradedPoly zero(Vars::Theta, w);
    const GradedPoly one = GradedPoly::constant(Vars::Theta, w, Rational(1));
    std::vector<std::vector<GradedPoly>> m(static_cast<std::size_t>(len), std::vector<GradedPoly>(static_cast<std::size_t>(len), zero));
    for (int i = 1; i <= len; ++i)
        for (int j = 1; j <= len; ++j) {
            int idx = mu.part(i) - i + j;
            if (idx >= 0)
                m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = h[static_cast<std::size_t>(idx)].truncated(w);
        }
    GradedPoly det = determinant_by_expansion(m, zero, one, [](const GradedPoly& p) { return p.is_zero(); });
    // s_mu is homogeneous of weight |mu|; report it as known through max_degree.
    GradedPoly out(Vars::Theta, max_degree);
    for (const auto& [mono, c] : det.terms())
        out.add_term(mono, c);
    return out;
}

} // namespace

GradedPoly schur_poly(const Partition& mu, int max_degree)
{
    if (mu.weight() > max_degree)
        throw DegreeExceeded(fmt::format("Schur polynomial of weight {} exceeds degree bound {}", mu.weight(), max_degree));
    return jacobi_trudi(mu, h_polys(mu.weight()), max_degree);
}

SchurCache::SchurCache(int max_degree) : max_degree_(max_degree), h_(h_polys(max_degree)) {}

const GradedPoly& SchurCache::get(const Partition& mu)
{
    if (mu.weight() > max_degree_)
        throw DegreeExceeded(fmt::format("Schur polynomial of weight {} exceeds degree bound {}", mu.weight(), max_degree_));
    auto it = cache_.find(mu.parts());
    if (it == cache_.end())
        it = cache_.emplace(mu.parts(), jacobi_trudi(mu, h_, max_degree_)).first;
    return it->second;
}

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw InvalidArgument("determinant of a non-square matrix");
    if (n == 0)
        return Rational(1);
    Rational sign(1);
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero())
                ++p;
            if (p == n)
                return Rational(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = Rational(0);
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational giambelli_coeff(const Partition& mu, const AffineTable& table)
{
    const FrobeniusCoords f = frobenius(mu);
    const std::size_t k = f.arms.size();
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    int leg_sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
        leg_sum += f.legs[i];
        for (std::size_t j = 0; j < k; ++j) {
            if (!table.contains(f.arms[i], f.legs[j]))
                throw OutOfRange(fmt::format("A[{},{}] needed for partition {} lies outside the affine table [{},{}]",
                                             f.arms[i], f.legs[j], mu.str(), table.max_m(), table.max_n()));
            m[i][j] = table.at(f.arms[i], f.legs[j]);
        }
    }
    Rational d = determinant(std::move(m));
    return leg_sum % 2 == 0 ? d : -d;
}

} // namespace satokdv
