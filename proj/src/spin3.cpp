#include "satokdv/spin3.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace satokdv {

const Mat2& RMatrixSeries::operator[](int k) const
{
    if (k < 0 || k > depth)
        throw InsufficientDepth(fmt::format("R_{} requested from an R series of depth {}", k, depth));
    return blocks[static_cast<std::size_t>(k)];
}

RMatrixSeries r_matrix(int depth)
{
    if (depth < 0)
        throw InvalidArgument("R depth must be nonnegative");
    RMatrixSeries r;
    r.depth = depth;
    for (int k = 0; k <= depth; ++k) {
        const Rational q = wk_q_coeff(k), c = wk_c_coeff(k);
        if (k % 2 == 0)
            r.blocks.push_back(Mat2::diagonal(q, c));
        else
            r.blocks.emplace_back(Rational(0), -q, -c, Rational(0));
    }
    return r;
}

RMatrixSeries r_star(const RMatrixSeries& r)
{
    RMatrixSeries s;
    s.depth = r.depth;
    for (const Mat2& m : r.blocks)
        s.blocks.push_back(eta_adjoint(m));
    return s;
}

VerificationReport verify_R_from_G(int depth)
{
    VerificationReport rep("rmatrix", depth);
    const RMatrixSeries r = r_matrix(depth);
    // The largest e with n = (2e + delta)/3 <= depth.
    const int e_max = (3 * depth + 1) / 2;
    const MatrixSeries u = matrix_series_inverse(wk_G(e_max));
    struct Entry {
        int row, col, delta;
    };
    constexpr Entry entries[] = {{0, 0, 0}, {0, 1, 1}, {1, 0, -1}, {1, 1, 0}};
    for (int e = 0; e <= e_max; ++e) {
        for (const Entry& en : entries) {
            const Rational ue = u[e](en.row, en.col);
            const int three_n = 2 * e + en.delta;
            const std::string idx = fmt::format("U_{}({},{})", e, en.row + 1, en.col + 1);
            if (three_n % 3 != 0) {
                rep.check(idx, ue, Rational(0));
                continue;
            }
            const int n = three_n / 3;
            if (n > depth)
                continue;
            rep.check(fmt::format("{} vs R_{}", idx, n), r[n](en.row, en.col), ue);
        }
    }
    return rep;
}

VTable::VTable(int max_sum) : max_sum_(max_sum)
{
    if (max_sum >= 0)
        entries_.resize(static_cast<std::size_t>((max_sum + 1) * (max_sum + 2) / 2));
}

namespace {

std::size_t triangle_index(int k, int l)
{
    const int d = k + l;
    return static_cast<std::size_t>(d * (d + 1) / 2 + l);
}

} // namespace

const Mat2& VTable::at(int k, int l) const
{
    if (!contains(k, l))
        throw OutOfRange(fmt::format("V[{},{}] outside table with k + l <= {}", k, l, max_sum_));
    return entries_[triangle_index(k, l)];
}

Mat2& VTable::at(int k, int l)
{
    if (!contains(k, l))
        throw OutOfRange(fmt::format("V[{},{}] outside table with k + l <= {}", k, l, max_sum_));
    return entries_[triangle_index(k, l)];
}

namespace {

/// Coefficient of w^i z^j in R*(w) R(z) - I.
Mat2 numerator(const RMatrixSeries& rs, const RMatrixSeries& r, int i, int j)
{
    Mat2 n = rs[i] * r[j];
    if (i == 0 && j == 0)
        n -= Mat2::identity();
    return n;
}

Rational sign(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

} // namespace

VTable v_table(int max_sum)
{
    if (max_sum < 0)
        throw InvalidArgument("V table size must be nonnegative");
    const RMatrixSeries r = r_matrix(max_sum + 1);
    const RMatrixSeries rs = r_star(r);
    // Y_{k,l} = (-1)^{k+l} V_{k,l}; the coefficient of w^i z^j gives Y_{i-1,j} + Y_{i,j-1} = N_{i,j}.
    VTable y(max_sum);
    if (!numerator(rs, r, 0, 0).is_zero())
        throw InconsistentDivision("R*(0) R(0) != I");
    for (int d = 1; d <= max_sum + 1; ++d) {
        y.at(d - 1, 0) = numerator(rs, r, d, 0);
        for (int j = 1; j <= d - 1; ++j)
            y.at(d - j - 1, j) = numerator(rs, r, d - j, j) - y.at(d - j, j - 1);
        const Mat2 last = numerator(rs, r, 0, d);
        if (y.at(0, d - 1) != last)
            throw InconsistentDivision(fmt::format("w^0 z^{} coefficient: expected {}, solved {}", d, last.str(), y.at(0, d - 1).str()));
    }
    VTable v(max_sum);
    for (int k = 0; k <= max_sum; ++k)
        for (int l = 0; k + l <= max_sum; ++l)
            v.at(k, l) = y.at(k, l) * sign(k + l);
    return v;
}

namespace {

VerificationReport v_relations(const VTable& v, int max_index, bool negated, const char* suite)
{
    if (2 * max_index + 1 > v.max_sum())
        throw InsufficientDepth(fmt::format("V relations up to index {} need V with k + l <= {}, have {}",
                                            max_index, 2 * max_index + 1, v.max_sum()));
    VerificationReport r(suite, max_index);
    for (int k = 0; k <= max_index; ++k)
        for (int l = 0; l <= max_index; ++l) {
            Mat2 rhs = v.at(k, 0) * v.at(0, l);
            if (negated)
                rhs = -rhs;
            r.check(fmt::format("V[{},{}]+V[{},{}]", k, l + 1, k + 1, l), v.at(k, l + 1) + v.at(k + 1, l), rhs);
            r.check(fmt::format("V*[{},{}]", k, l), eta_adjoint(v.at(k, l)), v.at(l, k));
        }
    return r;
}

} // namespace

VerificationReport verify_v_relations(const VTable& v, int max_index) { return v_relations(v, max_index, false, "vmatrix"); }

VerificationReport verify_v_relations_signed(const VTable& v, int max_index)
{
    return v_relations(v, max_index, true, "vmatrix-signed");
}

VerificationReport verify_v_reconstruction(const VTable& v)
{
    const int top = v.max_sum() + 1;
    const RMatrixSeries r = r_matrix(top);
    const RMatrixSeries rs = r_star(r);
    VerificationReport rep("v-reconstruction", v.max_sum());
    auto y = [&](int k, int l) { return v.contains(k, l) ? v.at(k, l) * sign(k + l) : Mat2::zero(); };
    for (int i = 0; i <= top; ++i)
        for (int j = 0; i + j <= top; ++j)
            rep.check(fmt::format("w^{} z^{}", i, j), y(i - 1, j) + y(i, j - 1), numerator(rs, r, i, j));
    return rep;
}

VerificationReport verify_thm2(const VTable& v, const ZTable& z, int max_k, int max_l)
{
    const int m = std::max(max_k, max_l);
    if (2 * max_k + 2 * max_l + 2 > v.max_sum())
        throw InsufficientDepth(fmt::format("V-Z relations need V with k + l <= {}, have {}", 2 * max_k + 2 * max_l + 2, v.max_sum()));
    if (z.max_k() < 3 * m + 2 || z.max_l() < 3 * m + 2)
        throw InsufficientDepth(fmt::format("V-Z relations need Z up to {}, have {}x{}", 3 * m + 2, z.max_k(), z.max_l()));
    VerificationReport r("thm2", std::min(max_k, max_l));
    for (int k = 0; k <= max_k; ++k)
        for (int l = 0; l <= max_l; ++l) {
            r.check(fmt::format("a1 V[{},{}]", 2 * k, 2 * l + 1), v.at(2 * k, 2 * l + 1), z.at(3 * k, 3 * l + 2));
            r.check(fmt::format("a1 V[{},{}]", 2 * l + 1, 2 * k), v.at(2 * l + 1, 2 * k), -z.at(3 * l + 2, 3 * k));
            r.check(fmt::format("a2 V[{},{}]", 2 * k, 2 * l), v.at(2 * k, 2 * l), -z.at(3 * k, 3 * l + 1) - z.at(3 * k, 3 * l));
            r.check(fmt::format("a2 V[{},{}]", 2 * k + 1, 2 * l + 1), v.at(2 * k + 1, 2 * l + 1),
                    z.at(3 * k + 2, 3 * l + 2) + z.at(3 * k + 2, 3 * l + 1));
        }
    return r;
}

VerificationReport verify_thm2(int max_k, int max_l)
{
    const int zmax = 3 * std::max(max_k, max_l) + 2;
    const ZTable z = z_table_direct(wk_G(required_g_depth_for_z(zmax, zmax)), zmax, zmax);
    return verify_thm2(v_table(2 * max_k + 2 * max_l + 2), z, max_k, max_l);
}

} // namespace satokdv
