#include "oracles.hpp"

#include "satokdv/grassmann.hpp"

#include <doctest.h>

using namespace satokdv;

namespace {

Mat2 m2(Rational a, Rational b, Rational c, Rational d) { return Mat2(a, b, c, d); }

std::vector<Rational> tail_of(const LaurentSeries& s, int order)
{
    std::vector<Rational> out;
    for (int k = 0; k <= order; ++k)
        out.push_back(s.tail(k));
    return out;
}

GrassmannPoint example_point(const Rational& c)
{
    GrassmannPoint p{LaurentSeries::exact_constant(Rational(1)), LaurentSeries::exact_constant(Rational(1))};
    p.b.set(-3, c);
    return p;
}

} // namespace

TEST_SUITE("grassmann")
{
    TEST_CASE("Witten-Kontsevich coefficients")
    {
        CHECK(wk_c_coeff(0) == Rational(1));
        CHECK(wk_c_coeff(1) == Rational(-5, 24));
        CHECK(wk_c_coeff(2) == Rational(385, 1152));
        CHECK(wk_q_coeff(0) == Rational(1));
        CHECK(wk_q_coeff(1) == Rational(7, 24));
        CHECK(wk_q_coeff(2) == Rational(-455, 1152));

        const GrassmannPoint p = wk_point(3);
        CHECK(p.a.tail(3) == Rational(-5, 24));
        CHECK(p.b.tail(3) == Rational(7, 24));
        CHECK(p.b.tail(1) == Rational(0));
        CHECK(wk_point(0).a == LaurentSeries::constant(Rational(1), 0));
        CHECK(is_normalized(p));
    }

    TEST_CASE("normalization")
    {
        GrassmannPoint p{LaurentSeries::exact_constant(Rational(1)), LaurentSeries::exact_constant(Rational(1))};
        p.b.set(-1, Rational(3));
        CHECK_FALSE(is_normalized(p));
        CHECK_THROWS_AS(build_G(p, 2), NotNormalized);
        const GrassmannPoint n = normalize_point(p);
        CHECK(n.b == LaurentSeries::exact_constant(Rational(1)));
        CHECK(normalize_point(n).b == n.b);
        const GrassmannPoint wk = wk_point(12);
        CHECK(normalize_point(wk).b == wk.b);
    }

    TEST_CASE("G and U blocks")
    {
        const MatrixSeries g = wk_G(4);
        CHECK(g[0] == Mat2::identity());
        CHECK(g[1] == m2(0, Rational(7, 24), 0, 0));
        CHECK(g[2] == m2(0, 0, Rational(-5, 24), 0));
        const MatrixSeries u = matrix_series_inverse(g);
        CHECK(u[1] == m2(0, Rational(-7, 24), 0, 0));
        CHECK(u[2] == m2(0, 0, Rational(5, 24), 0));
        CHECK(u[3] == Mat2::diagonal(Rational(-455, 1152), Rational(385, 1152)));
        CHECK_THROWS_AS(build_G(wk_point(6), 4), InsufficientDepth);
        CHECK(verify_wk_block_structure(wk_G(30)).ok());

        const MatrixSeries ge = build_G(example_point(Rational(5)), 3);
        CHECK(ge[1] == m2(0, 5, 0, 0));
        CHECK(ge[2].is_zero());
    }

    TEST_CASE("Z tables")
    {
        const MatrixSeries g = wk_G(required_g_depth_for_z(6, 6));
        const ZTable direct = z_table_direct(g, 6, 6);
        const ZTable rec = z_table_recursive(g, 6, 6);
        CHECK(direct == rec);
        CHECK(direct.at(0, 0) == m2(0, Rational(7, 24), 0, 0));
        CHECK(direct.at(0, 1) == m2(0, 0, Rational(-5, 24), 0));
        for (int k = 0; k <= 5; ++k)
            CHECK(direct.at(k, 0) == g[k + 1]);
        CHECK(affine_coordinate(direct, 1, 1) == Rational(7, 24));
        CHECK(affine_coordinate(direct, 0, 2) == Rational(-5, 24));
        CHECK(affine_coordinate(direct, 2, 0) == Rational(-5, 24));
        CHECK(affine_coordinate(direct, 0, 0) == Rational(0));
        CHECK_THROWS_AS(affine_coordinate(direct, 14, 0), OutOfRange);
        CHECK_THROWS_AS(z_table_direct(wk_G(5), 3, 3), InsufficientDepth);
        CHECK(verify_z_tables_agree(g, 6, 6).ok());
        CHECK(verify_z_recursion(direct).ok());
        CHECK(verify_z_generating(g, direct, 6).ok());
    }

    TEST_CASE("affine coordinates agree with direct elimination")
    {
        const int k = 14, l = 14;
        const int order = k + l + 2;
        const auto ref = oracle::affine_by_elimination(tail_of(wk_c_series(order), order), tail_of(wk_q_series(order), order), k, l);
        const AffineTable t = wk_affine_table(k, l);
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= l; ++n)
                CHECK_MESSAGE(t.at(m, n) == ref[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)], "A[", m, ",", n, "]");
    }

    TEST_CASE("elimination oracle on a non-normalized point")
    {
        // b_1 != 0 is handled by normalization in the pipeline and by elimination in the oracle.
        GrassmannPoint p{LaurentSeries(20), LaurentSeries(20)};
        const std::vector<Rational> a{1, Rational(1, 2), -2, 0, Rational(3, 7), 1, 0, -1, 2, 0, 1, 0, 0, 5, 0, 0, 0, 1, 0, 0, 0};
        const std::vector<Rational> b{1, 3, 0, Rational(-1, 3), 2, 0, 1, 0, 0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 1, 0, 0};
        for (int i = 0; i <= 20; ++i) {
            p.a.set(-i, a[static_cast<std::size_t>(i)]);
            p.b.set(-i, b[static_cast<std::size_t>(i)]);
        }
        const auto ref = oracle::affine_by_elimination(a, b, 8, 8);
        const AffineTable t = point_affine_table(p, 8, 8);
        for (int m = 0; m <= 8; ++m)
            for (int n = 0; n <= 8; ++n)
                CHECK(t.at(m, n) == ref[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
    }

    TEST_CASE("example point has a single affine coordinate")
    {
        for (const Rational& c : {Rational(1), Rational(-3, 4), Rational(7)}) {
            const AffineTable t = point_affine_table(example_point(c), 9, 9);
            for (int m = 0; m <= 9; ++m)
                for (int n = 0; n <= 9; ++n)
                    CHECK(t.at(m, n) == (m == 1 && n == 1 ? c : Rational(0)));
            const MatrixSeries g = build_G(example_point(c), 12);
            const ZTable z = z_table_direct(g, 5, 5);
            CHECK(z_table_recursive(g, 5, 5) == z);
            CHECK(verify_generating_function(g, z, 5).ok());
            CHECK(verify_symmetry(z, g, 5).ok());
        }
    }

    TEST_CASE("identities on the WK table")
    {
        const MatrixSeries g = wk_G(24);
        const ZTable z = z_table_direct(g, 11, 11);
        CHECK(verify_generating_function(g, z, 5).ok());
        CHECK(verify_symmetry(z, g, 6).ok());
        const AffineTable t = to_affine_table(z);
        CHECK(verify_two_step_recursion(t, 20).ok());
        CHECK(verify_affine_symmetry(t, 20).ok());
        CHECK(verify_cq_identity(0).ok());
        CHECK(verify_cq_identity(3).ok());
        CHECK(verify_kac_schwarz(12).ok());
    }

    TEST_CASE("identity G")
    {
        std::vector<Mat2> blocks(12, Mat2::zero());
        blocks[0] = Mat2::identity();
        const MatrixSeries id(blocks);
        const ZTable z = z_table_direct(id, 5, 5);
        CHECK(z == ZTable(5, 5));
        CHECK(verify_generating_function(id, z, 5).ok());
    }

    TEST_CASE("tables stabilize as depth grows")
    {
        CHECK(wk_affine_table(8, 8) == wk_affine_table(12, 12).cropped(8, 8));
    }

    TEST_CASE("a corrupted table fails the recursion")
    {
        AffineTable t = wk_affine_table(10, 10);
        t.at(4, 3) += Rational(1);
        const VerificationReport r = verify_two_step_recursion(t, 8);
        CHECK_FALSE(r.passed);
        CHECK_FALSE(r.failing_index.empty());
    }
}
