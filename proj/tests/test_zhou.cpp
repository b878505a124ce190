#include "satokdv/grassmann.hpp"
#include "satokdv/zhou.hpp"

#include <doctest.h>

#include <array>

using namespace satokdv;

TEST_SUITE("zhou")
{
    TEST_CASE("b_k and B_n")
    {
        CHECK(b_seq(0) == Rational(1));
        CHECK(b_seq(1) == Rational(105));
        CHECK(b_seq(2) == Rational(45045, 2));
        CHECK(B_poly(0, Rational(7)) == Rational(0));
        for (long x : {1L, 4L, -3L})
            CHECK(B_poly(1, Rational(x)) == Rational(18));
        CHECK(B_poly(2, Rational(1)) == Rational(7722));
    }

    TEST_CASE("index classification")
    {
        CHECK(classify_zhou_index(2, 0).cls == ZhouClass::TwoZero);
        CHECK(classify_zhou_index(0, 2).cls == ZhouClass::ZeroTwo);
        CHECK(classify_zhou_index(1, 1).cls == ZhouClass::OneOne);
        CHECK(classify_zhou_index(0, 0).cls == ZhouClass::Zero);
        CHECK(classify_zhou_index(3, 3).cls == ZhouClass::Zero);
        const ZhouIndex i = classify_zhou_index(5, 3);
        CHECK(i.m == 2);
        CHECK(i.n == 1);
        CHECK_THROWS_AS(classify_zhou_index(-1, 0), OutOfRange);
    }

    TEST_CASE("closed forms")
    {
        CHECK(zhou_A(2, 0) == ExtRational(Rational(0), Rational(-5, 96)));
        CHECK(zhou_A(1, 1) == ExtRational(Rational(0), Rational(7, 96)));
        CHECK(zhou_A(0, 0).is_zero());
        CHECK(rescale_B(2, 0) == Rational(-5, 24));
        CHECK(rescale_B(1, 1) == Rational(7, 24));
        CHECK(rescale_B(0, 2) == Rational(-5, 24));
        CHECK(rescale_B(0, 0) == Rational(0));
    }

    TEST_CASE("B vanishes off m + n = -1 mod 3 and B_{3m-1,3n} = B_{3m-3,3n+2}")
    {
        for (int r = 0; r <= 20; ++r)
            for (int c = 0; c <= 20; ++c)
                if ((r + c) % 3 != 2)
                    CHECK(rescale_B(r, c) == Rational(0));
        for (int m = 1; m <= 6; ++m)
            for (int n = 0; n <= 6; ++n)
                CHECK(rescale_B(3 * m - 1, 3 * n) == rescale_B(3 * m - 3, 3 * n + 2));
    }

    TEST_CASE("Grassmannian and closed form agree")
    {
        const AffineTable g = wk_affine_table(20, 20);
        CHECK(verify_zhou_match(g, 20, 20).ok());
        CHECK(zhou_table(20, 20) == g);
        CHECK_THROWS_AS(verify_zhou_match(g, 21, 20), InsufficientDepth);
    }

    TEST_CASE("B_n recursion")
    {
        const std::array<Rational, 3> xs{Rational(1), Rational(2), Rational(5)};
        for (int n = 1; n <= 6; ++n)
            CHECK(verify_Bn_recursion(n, xs).ok());
        const std::array<Rational, 1> zero{Rational(0)};
        CHECK_THROWS_AS(verify_Bn_recursion(2, zero), InvalidArgument);
    }

    TEST_CASE("three-term relation behind the combinatorial identity")
    {
        for (int m = 1; m <= 5; ++m)
            for (int n = 1; n <= 5; ++n) {
                CHECK(rescale_B(3 * m - 2, 3 * n + 1) - rescale_B(3 * m, 3 * n - 1) == -rescale_B(3 * m - 2, 1) * rescale_B(0, 3 * n - 1));
                const CombinatorialSides s = combinatorial_sides(m, n);
                CHECK(s.lhs == s.rhs_from_recursion);
            }
    }

    TEST_CASE("printed combinatorial identity matches only at n = 2")
    {
        // Independent evaluation: lhs / printed rhs = 2^{n-1} (m+1)...(m+n-1) / (2m+2).
        for (int m = 1; m <= 5; ++m)
            for (int n = 1; n <= 5; ++n) {
                const CombinatorialSides s = combinatorial_sides(m, n);
                Rational rising(1);
                for (int j = m + 1; j <= m + n - 1; ++j)
                    rising *= Rational(j);
                CHECK(s.lhs / s.rhs == pow(Rational(2), n - 1) * rising / Rational(2 * m + 2));
                CHECK(verify_combinatorial_identity(m, n).ok() == (n == 2));
            }
    }
}
