#include "satokdv/rational.hpp"

#include "satokdv/errors.hpp"

#include <fmt/format.h>

namespace satokdv {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw InvalidArgument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto bad = [&] { return ParseError(fmt::format("malformed rational '{}'", s)); };
    if (s.empty())
        throw bad();
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+'))
            part.remove_prefix(1);
        if (part.empty())
            return false;
        for (char ch : part)
            if (ch < '0' || ch > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, true))
        throw bad();
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw bad();
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const
{
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw InvalidArgument("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational pow(const Rational& base, int exponent)
{
    if (exponent < 0)
        return Rational(1) / pow(base, -exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

ExtRational& ExtRational::operator+=(const ExtRational& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

ExtRational& ExtRational::operator-=(const ExtRational& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

ExtRational& ExtRational::operator*=(const ExtRational& o)
{
    // (a + b s)(c + d s) = (ac - 2bd) + (ad + bc) s
    Rational r = re * o.re - Rational(2) * im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string ExtRational::str() const
{
    if (im.is_zero())
        return re.str();
    return fmt::format("{} + ({})*sqrt(-2)", re.str(), im.str());
}

ExtRational pow(const ExtRational& base, unsigned exponent)
{
    ExtRational result(Rational(1));
    ExtRational sq = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= sq;
        exponent >>= 1U;
        if (exponent != 0)
            sq *= sq;
    }
    return result;
}

Rational to_rational(const ExtRational& x)
{
    if (!x.is_rational())
        throw NonRational(fmt::format("value {} is not rational", x.str()));
    return x.re;
}

Rational factorial(int n)
{
    if (n < 0)
        throw InvalidArgument(fmt::format("factorial of negative integer {}", n));
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational odd_double_factorial(int n)
{
    if (n < -1 || n % 2 == 0)
        throw InvalidArgument(fmt::format("odd double factorial needs odd n >= -1, got {}", n));
    if (n <= 1)
        return Rational(1);
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational falling_factorial(const Rational& y, int j)
{
    if (j < 0)
        throw InvalidArgument(fmt::format("falling factorial with negative length {}", j));
    Rational r(1);
    for (int i = 0; i < j; ++i)
        r *= y - Rational(i);
    return r;
}

} // namespace satokdv
