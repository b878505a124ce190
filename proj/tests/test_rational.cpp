#include "satokdv/errors.hpp"
#include "satokdv/rational.hpp"

#include <doctest.h>

#include <random>

using namespace satokdv;

TEST_SUITE("exactnum")
{
    TEST_CASE("parse and canonical printing")
    {
        CHECK(Rational::parse("6/-8").str() == "-3/4");
        CHECK(Rational::parse("-14/4").str() == "-7/2");
        CHECK(Rational::parse("10/5").str() == "2");
        CHECK(Rational(0).str() == "0");
        CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
        CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
        CHECK_THROWS_AS(Rational::parse(""), ParseError);
        CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
    }

    TEST_CASE("factorials")
    {
        CHECK(factorial(0) == Rational(1));
        CHECK(factorial(5) == Rational(120));
        CHECK(factorial(12) == Rational(479001600));
        CHECK(odd_double_factorial(-1) == Rational(1));
        CHECK(odd_double_factorial(1) == Rational(1));
        CHECK(odd_double_factorial(7) == Rational(105));
        CHECK(odd_double_factorial(13) == Rational(135135));
        CHECK_THROWS_AS(odd_double_factorial(4), InvalidArgument);
        CHECK_THROWS_AS(odd_double_factorial(-3), InvalidArgument);
        CHECK(falling_factorial(Rational(5), 0) == Rational(1));
        CHECK(falling_factorial(Rational(5), 2) == Rational(20));
        CHECK(falling_factorial(Rational(3, 2), 2) == Rational(3, 4));
        CHECK(falling_factorial(Rational(2), 4) == Rational(0));
    }

    TEST_CASE("factorial matches a direct product")
    {
        Rational p(1);
        for (int n = 1; n <= 30; ++n) {
            p *= Rational(n);
            CHECK(factorial(n) == p);
        }
        Rational d(1);
        for (int n = 1; n <= 31; n += 2) {
            if (n > 1)
                d *= Rational(n);
            CHECK(odd_double_factorial(n) == d);
        }
    }

    TEST_CASE("quadratic extension")
    {
        const ExtRational s = ExtRational::sqrt_minus_two();
        CHECK(s * s == ExtRational(Rational(-2)));
        CHECK(pow(s, 4) == ExtRational(Rational(4)));
        CHECK(to_rational(ExtRational(Rational(7, 24))) == Rational(7, 24));
        CHECK(to_rational(ExtRational()) == Rational(0));
        CHECK_THROWS_AS(to_rational(ExtRational(Rational(1), Rational(1))), NonRational);
    }

    TEST_CASE("field laws on random triples")
    {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
        auto r = [&] { return Rational(num(rng), den(rng)); };
        for (int i = 0; i < 200; ++i) {
            const Rational a = r(), b = r(), c = r();
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            const ExtRational x(a, b), y(b, c), z(c, a);
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            // Canonical form is idempotent.
            CHECK(Rational::parse(a.str()) == a);
            CHECK(Rational::parse(a.str()).str() == a.str());
        }
    }
}
