#include "satokdv/grassmann.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include <fmt/format.h>

namespace satokdv {

Rational wk_c_coeff(int k)
{
    if (k < 0)
        throw InvalidArgument(fmt::format("c_k needs k >= 0, got {}", k));
    Rational v = factorial(6 * k) / (pow(Rational(288), k) * factorial(3 * k) * factorial(2 * k));
    return k % 2 == 0 ? v : -v;
}

Rational wk_q_coeff(int k)
{
    return Rational(1 + 6 * k, 1 - 6 * k) * wk_c_coeff(k);
}

namespace {

LaurentSeries series_in_lambda_cubed(int depth, Rational (*coeff)(int))
{
    LaurentSeries s(depth);
    for (int k = 0; 3 * k <= depth; ++k)
        s.set(-3 * k, coeff(k));
    return s;
}

std::string idx(int a, int b) { return fmt::format("[{},{}]", a, b); }

} // namespace

LaurentSeries wk_c_series(int depth) { return series_in_lambda_cubed(depth, wk_c_coeff); }
LaurentSeries wk_q_series(int depth) { return series_in_lambda_cubed(depth, wk_q_coeff); }

GrassmannPoint wk_point(int depth) { return {wk_c_series(depth), wk_q_series(depth)}; }

bool is_normalized(const GrassmannPoint& p)
{
    if (p.a.head_degree() > 0 || p.b.head_degree() > 0)
        return false;
    if (!p.a.known(0) || !p.b.known(-1))
        return false;
    return p.a.coeff(0) == Rational(1) && p.b.coeff(0) == Rational(1) && p.b.coeff(-1).is_zero();
}

GrassmannPoint normalize_point(const GrassmannPoint& p)
{
    if (p.a.head_degree() > 0 || p.b.head_degree() > 0 || p.a.coeff(0) != Rational(1) || p.b.coeff(0) != Rational(1))
        throw NotNormalized("a point needs a = 1 + O(1/lambda) and b = 1 + O(1/lambda)");
    const Rational b1 = p.b.coeff(-1);
    if (b1.is_zero())
        return p;
    return {p.a, p.b - p.a.shifted(-1).scaled(b1)};
}

int max_g_depth(const GrassmannPoint& p)
{
    long oa = p.a.tail_order();
    long ob = p.b.tail_order();
    long d = std::min(oa / 2, (ob - 1) / 2);
    return static_cast<int>(std::clamp<long>(d, -1, INT_MAX / 4));
}

MatrixSeries build_G(const GrassmannPoint& p, int depth)
{
    if (!is_normalized(p))
        throw NotNormalized("build_G requires a_0 = b_0 = 1 and b_1 = 0; normalize the point first");
    if (depth > max_g_depth(p))
        throw InsufficientDepth(fmt::format("G_{} needs a through lambda^-{} and b through lambda^-{}; point has orders {} and {}",
                                            depth, 2 * depth, 2 * depth + 1, p.a.tail_order(), p.b.tail_order()));
    std::vector<Mat2> blocks;
    blocks.reserve(static_cast<std::size_t>(depth) + 1);
    for (int k = 0; k <= depth; ++k) {
        Rational a_lower = k >= 1 ? p.a.tail(2 * k - 1) : Rational(0);
        blocks.emplace_back(p.a.tail(2 * k), p.b.tail(2 * k + 1), a_lower, p.b.tail(2 * k));
    }
    return MatrixSeries(std::move(blocks));
}

MatrixSeries wk_G(int depth) { return build_G(wk_point(2 * depth + 1), depth); }

ZTable::ZTable(int max_k, int max_l)
    : max_k_(max_k), max_l_(max_l), blocks_(static_cast<std::size_t>((max_k + 1) * (max_l + 1)))
{
    if (max_k < 0 || max_l < 0)
        throw OutOfRange("Z table extents must be nonnegative");
}

const Mat2& ZTable::at(int k, int l) const
{
    if (!contains(k, l))
        throw OutOfRange(fmt::format("Z{} outside table of extent [{},{}]", idx(k, l), max_k_, max_l_));
    return blocks_[static_cast<std::size_t>(k * (max_l_ + 1) + l)];
}

Mat2& ZTable::at(int k, int l)
{
    return const_cast<Mat2&>(std::as_const(*this).at(k, l));
}

AffineTable::AffineTable(int max_m, int max_n)
    : max_m_(max_m), max_n_(max_n), entries_(static_cast<std::size_t>((max_m + 1) * (max_n + 1)))
{
    if (max_m < 0 || max_n < 0)
        throw OutOfRange("affine table extents must be nonnegative");
}

const Rational& AffineTable::at(int m, int n) const
{
    if (!contains(m, n))
        throw OutOfRange(fmt::format("A{} outside table of extent [{},{}]", idx(m, n), max_m_, max_n_));
    return entries_[static_cast<std::size_t>(m * (max_n_ + 1) + n)];
}

Rational& AffineTable::at(int m, int n)
{
    return const_cast<Rational&>(std::as_const(*this).at(m, n));
}

AffineTable AffineTable::cropped(int max_m, int max_n) const
{
    if (max_m > max_m_ || max_n > max_n_)
        throw OutOfRange(fmt::format("cannot crop [{},{}] table to [{},{}]", max_m_, max_n_, max_m, max_n));
    AffineTable t(max_m, max_n);
    for (int m = 0; m <= max_m; ++m)
        for (int n = 0; n <= max_n; ++n)
            t.at(m, n) = at(m, n);
    return t;
}

namespace {

void require_depth(const MatrixSeries& g, int needed, const char* what)
{
    if (g.tail_order() < needed)
        throw InsufficientDepth(fmt::format("{} needs G through G_{}, have G_{}", what, needed, g.tail_order()));
}

} // namespace

ZTable z_table_direct(const MatrixSeries& g, int max_k, int max_l)
{
    require_depth(g, required_g_depth_for_z(max_k, max_l), "z_table_direct");
    const MatrixSeries u = matrix_series_inverse(g);
    ZTable z(max_k, max_l);
    for (int k = 0; k <= max_k; ++k) {
        for (int l = 0; l <= max_l; ++l) {
            Mat2 acc;
            for (int j = 0; j <= k; ++j) {
                const Mat2& gj = g[j];
                const Mat2& uj = u[k + l + 1 - j];
                if (!gj.is_zero() && !uj.is_zero())
                    acc += gj * uj;
            }
            z.at(k, l) = -acc;
        }
    }
    return z;
}

ZTable z_table_recursive(const MatrixSeries& g, int max_k, int max_l)
{
    require_depth(g, required_g_depth_for_z(max_k, max_l), "z_table_recursive");
    const MatrixSeries u = matrix_series_inverse(g);
    const int span = max_k + max_l;
    // Triangle k + l <= span; row k holds l = 0..span-k.
    std::vector<std::vector<Mat2>> tri(static_cast<std::size_t>(span) + 1);
    for (int k = 0; k <= span; ++k)
        tri[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(span - k) + 1);
    auto at = [&tri](int k, int l) -> Mat2& { return tri[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]; };

    for (int s = 0; s <= span; ++s) {
        at(s, 0) = g[s + 1];
        at(0, s) = -u[s + 1];
        for (int k = 1; k < s; ++k) {
            int l = s - k;
            at(k, l) = at(k - 1, l + 1) + at(k - 1, 0) * at(0, l);
        }
    }
    ZTable z(max_k, max_l);
    for (int k = 0; k <= max_k; ++k)
        for (int l = 0; l <= max_l; ++l)
            z.at(k, l) = at(k, l);
    return z;
}

Rational affine_coordinate(const ZTable& z, int m, int n)
{
    if (m < 0 || n < 0 || !z.contains(m / 2, n / 2))
        throw OutOfRange(fmt::format("A{} not covered by a Z table of extent [{},{}]", idx(m, n), z.max_k(), z.max_l()));
    const Mat2& block = z.at(m / 2, n / 2);
    return block(m % 2 == 1 ? 0 : 1, n % 2);
}

AffineTable to_affine_table(const ZTable& z)
{
    AffineTable t(2 * z.max_k() + 1, 2 * z.max_l() + 1);
    for (int m = 0; m <= t.max_m(); ++m)
        for (int n = 0; n <= t.max_n(); ++n)
            t.at(m, n) = affine_coordinate(z, m, n);
    return t;
}

AffineTable affine_table(const MatrixSeries& g, int max_m, int max_n)
{
    return to_affine_table(z_table_direct(g, max_m / 2, max_n / 2)).cropped(max_m, max_n);
}

AffineTable wk_affine_table(int max_m, int max_n) { return affine_table(wk_G(required_g_depth(max_m, max_n)), max_m, max_n); }

AffineTable point_affine_table(const GrassmannPoint& p, int max_m, int max_n)
{
    const GrassmannPoint normalized = normalize_point(p);
    return affine_table(build_G(normalized, required_g_depth(max_m, max_n)), max_m, max_n);
}

VerificationReport verify_z_tables_agree(const MatrixSeries& g, int max_k, int max_l)
{
    VerificationReport r("z-direct-vs-recursive", std::min(max_k, max_l));
    const ZTable direct = z_table_direct(g, max_k, max_l);
    const ZTable recursive = z_table_recursive(g, max_k, max_l);
    for (int k = 0; k <= max_k; ++k)
        for (int l = 0; l <= max_l; ++l)
            r.check("Z" + idx(k, l), direct.at(k, l), recursive.at(k, l));
    return r;
}

VerificationReport verify_z_recursion(const ZTable& z)
{
    VerificationReport r("z-recursion", std::min(z.max_k(), z.max_l()) - 1);
    for (int k = 0; k + 1 <= z.max_k(); ++k)
        for (int l = 0; l + 1 <= z.max_l(); ++l)
            r.check("Z" + idx(k, l), Mat2(z.at(k + 1, l) - z.at(k, l + 1)), Mat2(z.at(k, 0) * z.at(0, l)));
    return r;
}

VerificationReport verify_z_generating(const MatrixSeries& g, const ZTable& z, int max_k)
{
    VerificationReport r("z-generating", max_k);
    if (max_k > z.max_l())
        throw OutOfRange(fmt::format("generating check to k = {} needs Z columns through {}, have {}", max_k, max_k, z.max_l()));
    const MatrixLaurent gl = g.to_laurent();
    const MatrixLaurent ginv = matrix_series_inverse(g).to_laurent();
    int min_rows = INT_MAX;
    for (int k = 0; k <= max_k; ++k) {
        const MatrixLaurent lhs = gl * ginv.shifted(k).polynomial_part();
        for (int e = 0; e <= std::max(k, lhs.head_degree()); ++e)
            r.check(fmt::format("k={} lambda^{}", k, e), lhs.coeff(e), e == k ? Mat2::identity() : Mat2::zero());
        int rows = 0;
        for (int l = 0; l <= z.max_k() && lhs.known(-l - 1); ++l, ++rows)
            r.check(fmt::format("k={} Z{}", k, idx(l, k)), lhs.coeff(-l - 1), z.at(l, k));
        min_rows = std::min(min_rows, rows);
    }
    r.note = fmt::format("rows l < {} compared in every column", min_rows);
    return r;
}

VerificationReport verify_generating_function(const MatrixSeries& g, const ZTable& z, int bidegree)
{
    VerificationReport r("generating-function", bidegree);
    const int span = 2 * bidegree + 1;
    require_depth(g, span, "generating-function check");
    if (!z.contains(bidegree, bidegree))
        throw OutOfRange(fmt::format("Z table of extent [{},{}] does not reach bi-degree {}", z.max_k(), z.max_l(), bidegree));
    const MatrixSeries u = matrix_series_inverse(g);

    // Numerator coefficients: I - G(alpha) G(beta)^{-1} = sum N_{i,j} alpha^{-i} beta^{-j}.
    auto numerator = [&](int i, int j) -> Mat2 {
        if (i == 0 && j == 0)
            return Mat2::identity() - g[0] * u[0];
        return -(g[i] * u[j]);
    };

    // Quotient X_{k,l} (coefficient of alpha^{-k-1} beta^{-l-1}) on the triangle k + l < span.
    // Matching alpha^{-i} beta^{-j} in (alpha - beta) X = N gives X_{i,j-1} - X_{i-1,j} = N_{i,j}.
    std::map<std::pair<int, int>, Mat2> x;
    auto xv = [&x](int k, int l) -> Mat2 {
        if (k < 0 || l < 0)
            return Mat2::zero();
        return x.at({k, l});
    };
    for (int s = 0; s < span; ++s)
        for (int k = 0; k <= s; ++k)
            x[{k, s - k}] = numerator(k, s - k + 1) + xv(k - 1, s - k + 1);

    // Divisibility: every equation, including the j = 0 ones not used above.
    for (int s = 0; s <= span; ++s)
        for (int i = 0; i <= s; ++i) {
            int j = s - i;
            r.check("N" + idx(i, j), Mat2(xv(i, j - 1) - xv(i - 1, j)), numerator(i, j));
        }

    for (int k = 0; k <= bidegree; ++k)
        for (int l = 0; l <= bidegree; ++l)
            r.check("Z" + idx(k, l), xv(k, l), z.at(k, l));
    return r;
}

VerificationReport verify_symmetry(const ZTable& z, const MatrixSeries& g, int depth)
{
    VerificationReport r("symmetry", depth);
    require_depth(g, depth, "symmetry check");
    const LaurentSeries det = g.det();
    for (int k = 0; k <= depth; ++k) {
        if (det.tail(k) != Rational(k == 0 ? 1 : 0)) {
            r.skip(fmt::format("det G differs from 1 at lambda^-{}", k));
            return r;
        }
    }
    const MatrixSeries u = matrix_series_inverse(g);
    for (int k = 0; k <= depth; ++k)
        r.check(fmt::format("U{}", k), u[k], sigma2_conjugate_transpose(g[k]));
    for (int k = 0; k <= z.max_k(); ++k)
        for (int l = 0; l <= z.max_l(); ++l)
            if (k + l <= depth && z.contains(l, k))
                r.check("Z" + idx(k, l), z.at(l, k), Mat2(-sigma2_conjugate_transpose(z.at(k, l))));
    const AffineTable t = to_affine_table(z);
    const int side = std::min(t.max_m(), t.max_n());
    for (int m = 0; m <= side; ++m)
        for (int n = 0; n <= side; ++n)
            if (m / 2 + n / 2 <= depth) {
                Rational sign((m + n) % 2 == 0 ? 1 : -1);
                r.check("A" + idx(n, m), t.at(n, m), Rational(sign * t.at(m, n)));
            }
    return r;
}

VerificationReport verify_two_step_recursion(const AffineTable& t, int max_sum)
{
    VerificationReport r("two-step-recursion", max_sum);
    if (t.max_m() < max_sum + 2 || t.max_n() < max_sum + 2)
        throw InsufficientDepth(fmt::format("two-step recursion to m + n <= {} needs a [{},{}] table", max_sum, max_sum + 2, max_sum + 2));
    for (int m = 0; m <= max_sum; ++m)
        for (int n = 0; m + n <= max_sum; ++n)
            r.check("A" + idx(m, n), Rational(t.at(m + 2, n) - t.at(m, n + 2)),
                    Rational(t.at(m, 0) * t.at(1, n) + t.at(m, 1) * t.at(0, n)));
    return r;
}

VerificationReport verify_affine_symmetry(const AffineTable& t, int max_index)
{
    VerificationReport r("affine-symmetry", max_index);
    if (t.max_m() < max_index || t.max_n() < max_index)
        throw InsufficientDepth(fmt::format("symmetry to index {} needs a square table of that size", max_index));
    for (int m = 0; m <= max_index; ++m)
        for (int n = 0; n <= max_index; ++n) {
            Rational sign((m + n) % 2 == 0 ? 1 : -1);
            r.check("A" + idx(n, m), t.at(n, m), Rational(sign * t.at(m, n)));
        }
    return r;
}

VerificationReport verify_cq_identity(int depth)
{
    VerificationReport r("cq-identity", depth);
    const LaurentSeries c = wk_c_series(depth);
    const LaurentSeries q = wk_q_series(depth);
    const LaurentSeries lhs = c * q.negate_argument() + c.negate_argument() * q;
    r.depth = std::min(depth, lhs.tail_order());
    for (int k = 0; k <= r.depth; ++k)
        r.check(fmt::format("lambda^-{}", k), lhs.tail(k), Rational(k == 0 ? 2 : 0));
    return r;
}

VerificationReport verify_kac_schwarz(int depth)
{
    VerificationReport r("kac-schwarz", depth);
    const LaurentSeries c = wk_c_series(depth);
    const LaurentSeries sc = kac_schwarz_apply(c);
    const LaurentSeries residual = kac_schwarz_apply(sc) - c.shifted(2);
    for (int e = residual.lead_bound(); e >= residual.valid_low(); --e)
        r.check(fmt::format("ode lambda^{}", e), residual.coeff(e), Rational(0));

    const LaurentSeries q_from_c = -sc.shifted(-1);
    const LaurentSeries q = wk_q_series(depth);
    const int q_low = std::max(q_from_c.valid_low(), q.valid_low());
    for (int e = 0; e >= q_low; --e)
        r.check(fmt::format("q lambda^{}", e), q_from_c.coeff(e), q.coeff(e));
    r.depth = std::min(residual.tail_order(), -q_low);
    r.note = fmt::format("ode residual valid through lambda^-{}, q through lambda^-{}", residual.tail_order(), -q_low);
    return r;
}

VerificationReport verify_wk_block_structure(const MatrixSeries& g)
{
    VerificationReport r("wk-block-structure", g.tail_order());
    for (int k = 0; k <= g.tail_order(); ++k) {
        int j = k / 3;
        Mat2 expected;
        switch (k % 3) {
        case 0: expected = Mat2::diagonal(wk_c_coeff(2 * j), wk_q_coeff(2 * j)); break;
        case 1: expected = Mat2(Rational(0), wk_q_coeff(2 * j + 1), Rational(0), Rational(0)); break;
        default: expected = Mat2(Rational(0), Rational(0), wk_c_coeff(2 * j + 1), Rational(0)); break;
        }
        r.check(fmt::format("G{}", k), g[k], expected);
    }
    return r;
}

} // namespace satokdv
