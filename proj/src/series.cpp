#include "satokdv/series.hpp"

namespace satokdv {

const Mat2& MatrixSeries::operator[](int k) const
{
    if (k < 0 || k > tail_order())
        throw InsufficientDepth(fmt::format("block {} requested from a matrix series of tail order {}", k, tail_order()));
    return blocks_[static_cast<std::size_t>(k)];
}

MatrixSeries MatrixSeries::truncated(int tail_order) const
{
    if (tail_order > this->tail_order())
        throw InsufficientDepth(fmt::format("cannot extend matrix series from order {} to {}", this->tail_order(), tail_order));
    return MatrixSeries(std::vector<Mat2>(blocks_.begin(), blocks_.begin() + tail_order + 1));
}

MatrixLaurent MatrixSeries::to_laurent() const
{
    MatrixLaurent s(tail_order());
    for (int k = 0; k <= tail_order(); ++k)
        s.set(-k, blocks_[static_cast<std::size_t>(k)]);
    return s;
}

LaurentSeries MatrixSeries::entry(int r, int c) const
{
    LaurentSeries s(tail_order());
    for (int k = 0; k <= tail_order(); ++k)
        s.set(-k, blocks_[static_cast<std::size_t>(k)](r, c));
    return s;
}

LaurentSeries MatrixSeries::det() const
{
    return entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0);
}

LaurentSeries series_inverse(const LaurentSeries& a)
{
    if (a.is_exact())
        throw InsufficientDepth("inverse of an exact series needs a truncation; call truncated() first");
    if (a.head_degree() > 0)
        throw NonUnit(fmt::format("series with positive power lambda^{} is not a unit", a.head_degree()));
    const Rational a0 = a.coeff(0);
    if (a0.is_zero())
        throw NonUnit("series with zero constant term is not a unit");
    const int order = a.tail_order();
    const Rational inv0 = Rational(1) / a0;
    std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
    b[0] = inv0;
    for (int k = 1; k <= order; ++k) {
        Rational acc;
        for (const auto& [e, v] : a.terms()) {
            int j = -e;
            if (j >= 1 && j <= k)
                acc += v * b[static_cast<std::size_t>(k - j)];
        }
        b[static_cast<std::size_t>(k)] = -acc * inv0;
    }
    return LaurentSeries::from_tail(b);
}

MatrixSeries matrix_series_inverse(const MatrixSeries& g)
{
    if (!g.normalized())
        throw NotNormalized("matrix series inverse requires G_0 = I");
    const int order = g.tail_order();
    std::vector<Mat2> u(static_cast<std::size_t>(order) + 1);
    u[0] = Mat2::identity();
    for (int k = 1; k <= order; ++k) {
        Mat2 acc;
        for (int j = 1; j <= k; ++j) {
            const Mat2& gj = g[j];
            if (!gj.is_zero())
                acc += gj * u[static_cast<std::size_t>(k - j)];
        }
        u[static_cast<std::size_t>(k)] = -acc;
    }
    return MatrixSeries(std::move(u));
}

LaurentSeries kac_schwarz_apply(const LaurentSeries& a)
{
    // Unknown coefficients at lambda^{low-1} and below reach lambda^{low} via the -lambda term.
    LaurentSeries r = a.is_exact() ? LaurentSeries::exact() : LaurentSeries(a.tail_order() - 1);
    const Rational half(1, 2);
    auto add = [&r](int e, const Rational& v) {
        if (r.known(e))
            r.set(e, r.coeff(e) + v);
    };
    for (const auto& [e, v] : a.terms()) {
        add(e - 2, Rational(e) * v - half * v);
        add(e + 1, -v);
    }
    return r;
}

} // namespace satokdv
