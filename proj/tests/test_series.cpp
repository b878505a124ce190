#include "satokdv/grassmann.hpp"
#include "satokdv/series.hpp"

#include <doctest.h>

using namespace satokdv;

namespace {

LaurentSeries poly(std::initializer_list<std::pair<int, long>> terms, int tail_order)
{
    LaurentSeries s(tail_order);
    for (auto [e, v] : terms)
        s.set(e, Rational(v));
    return s;
}

LaurentSeries exact_poly(std::initializer_list<std::pair<int, Rational>> terms)
{
    LaurentSeries s = LaurentSeries::exact();
    for (const auto& [e, v] : terms)
        s.set(e, v);
    return s;
}

} // namespace

TEST_SUITE("series")
{
    TEST_CASE("products")
    {
        const LaurentSeries p = exact_poly({{0, 1}, {-1, 1}}) * exact_poly({{0, 1}, {-1, -1}});
        CHECK(p.is_exact());
        CHECK(p.tail(0) == Rational(1));
        CHECK(p.tail(1) == Rational(0));
        CHECK(p.tail(2) == Rational(-1));
        CHECK(p.terms().size() == 2);

        const LaurentSeries one = exact_poly({{1, 1}}) * exact_poly({{-1, 1}});
        CHECK(one == LaurentSeries::exact_constant(Rational(1)));

        const LaurentSeries cq = wk_c_series(6) * wk_q_series(6);
        CHECK(cq.tail_order() == 6);
        CHECK(cq.tail(3) == Rational(1, 12));
        CHECK(cq.tail(3) == wk_c_coeff(1) + wk_q_coeff(1));
    }

    TEST_CASE("product validity is the overlap of both inputs")
    {
        // (1 + O(l^-3)) * (l^2 + O(l^-1)): the unknown tail of the first meets l^2.
        const LaurentSeries a = poly({{0, 1}}, 2);
        const LaurentSeries b = poly({{2, 1}}, 0);
        const LaurentSeries p = a * b;
        CHECK(p.valid_low() == 0);
        CHECK_THROWS_AS(p.coeff(-1), InsufficientDepth);
    }

    TEST_CASE("inverse")
    {
        CHECK(series_inverse(LaurentSeries::constant(Rational(1), 5)) == LaurentSeries::constant(Rational(1), 5));
        const LaurentSeries g = series_inverse(poly({{0, 1}, {-1, 1}}, 8));
        for (int k = 0; k <= 8; ++k)
            CHECK(g.tail(k) == Rational(k % 2 == 0 ? 1 : -1));
        const LaurentSeries h = series_inverse(poly({{0, 1}, {-2, -2}}, 10));
        for (int k = 0; k <= 10; ++k)
            CHECK(h.tail(k) == (k % 2 == 0 ? pow(Rational(2), k / 2) : Rational(0)));
        CHECK_THROWS_AS(series_inverse(poly({{-1, 1}}, 4)), NonUnit);
        CHECK_THROWS_AS(series_inverse(poly({{1, 1}, {0, 1}}, 4)), NonUnit);
    }

    TEST_CASE("a * inverse(a) = 1 through the propagated order")
    {
        for (int depth : {3, 9, 20}) {
            const LaurentSeries c = wk_c_series(depth);
            const LaurentSeries p = c * series_inverse(c);
            CHECK(p.tail_order() == depth);
            CHECK(p.equal_on_overlap(LaurentSeries::exact_constant(Rational(1))));
        }
    }

    TEST_CASE("matrix inverse")
    {
        const MatrixSeries id({Mat2::identity(), Mat2::zero(), Mat2::zero()});
        CHECK(matrix_series_inverse(id) == id);
        const Mat2 n(Rational(0), Rational(3), Rational(0), Rational(0));
        const MatrixSeries g({Mat2::identity(), n, Mat2::zero(), Mat2::zero()});
        const MatrixSeries u = matrix_series_inverse(g);
        CHECK(u[1] == -n);
        CHECK(u[2].is_zero());
        CHECK(u[3].is_zero());
        CHECK_THROWS_AS(matrix_series_inverse(MatrixSeries({n})), NotNormalized);
        CHECK_THROWS_AS(u[4], InsufficientDepth);
    }

    TEST_CASE("polynomial part and argument negation")
    {
        CHECK(polynomial_part(exact_poly({{2, 1}, {0, 1}, {-1, 1}})) == exact_poly({{2, 1}, {0, 1}}));
        CHECK(polynomial_part(exact_poly({{-3, 1}})) == LaurentSeries::exact());
        const LaurentSeries prod = exact_poly({{1, 1}}) * exact_poly({{0, 1}, {-1, 1}, {-2, 1}});
        CHECK(polynomial_part(prod) == exact_poly({{1, 1}, {0, 1}}));
        CHECK_THROWS_AS(polynomial_part(poly({{3, 1}}, -1)), InsufficientDepth);

        CHECK(negate_argument(exact_poly({{0, 1}, {-1, 1}})) == exact_poly({{0, 1}, {-1, -1}}));
        CHECK(negate_argument(exact_poly({{1, 1}})) == exact_poly({{1, -1}}));
        const LaurentSeries c = wk_c_series(9);
        CHECK(negate_argument(c).tail(3) == Rational(5, 24));
        CHECK(negate_argument(negate_argument(c)) == c);
    }

    TEST_CASE("Kac-Schwarz operator")
    {
        const LaurentSeries s1 = kac_schwarz_apply(LaurentSeries::exact_constant(Rational(1)));
        CHECK(s1 == exact_poly({{1, -1}, {-2, Rational(-1, 2)}}));
        const LaurentSeries s3 = kac_schwarz_apply(exact_poly({{-3, 1}}));
        CHECK(s3 == exact_poly({{-2, -1}, {-5, Rational(-7, 2)}}));

        const LaurentSeries c = wk_c_series(12);
        const LaurentSeries sc = kac_schwarz_apply(c);
        CHECK(sc.tail_order() == 11);
        const LaurentSeries q = (exact_poly({{-1, -1}}) * sc);
        CHECK(q.tail(0) == Rational(1));
        CHECK(q.tail(3) == Rational(7, 24));
        CHECK(q.equal_on_overlap(wk_q_series(12)));
    }

    TEST_CASE("truncation soundness")
    {
        const LaurentSeries lo = wk_c_series(9) * series_inverse(wk_q_series(9));
        const LaurentSeries hi = wk_c_series(21) * series_inverse(wk_q_series(21));
        CHECK(lo.tail_order() == 9);
        CHECK(lo.equal_on_overlap(hi));
        CHECK(kac_schwarz_apply(wk_c_series(9)).equal_on_overlap(kac_schwarz_apply(wk_c_series(21))));
    }
}
