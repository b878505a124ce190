#pragma once

// Exact scalars: arbitrary-precision rationals and the quadratic extension Q[s]/(s^2 + 2).

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace satokdv {

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p" or "p/q"; throws ParseError.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Canonical "p/q" form, or "p" when the denominator is 1.
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

/// Integer power, negative exponents allowed for nonzero bases.
Rational pow(const Rational& base, int exponent);

/// An element re + im*s of Q[s] with s^2 = -2.
struct ExtRational {
    Rational re;
    Rational im;

    ExtRational() = default;
    ExtRational(Rational r) : re(std::move(r)) {} // NOLINT(google-explicit-constructor)
    ExtRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    /// The generator s = sqrt(-2).
    static ExtRational sqrt_minus_two() { return {Rational(0), Rational(1)}; }

    bool is_rational() const { return im.is_zero(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    ExtRational& operator+=(const ExtRational& o);
    ExtRational& operator-=(const ExtRational& o);
    ExtRational& operator*=(const ExtRational& o);

    friend ExtRational operator+(ExtRational a, const ExtRational& b) { return a += b; }
    friend ExtRational operator-(ExtRational a, const ExtRational& b) { return a -= b; }
    friend ExtRational operator*(ExtRational a, const ExtRational& b) { return a *= b; }
    friend ExtRational operator-(const ExtRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const ExtRational& a, const ExtRational& b) = default;

    std::string str() const;
};

ExtRational pow(const ExtRational& base, unsigned exponent);

/// Returns x.re, or throws NonRational when x.im != 0.
Rational to_rational(const ExtRational& x);

/// n!
Rational factorial(int n);
/// n!! for odd n >= -1, with (-1)!! = 1!! = 1. Throws InvalidArgument for even or smaller n.
Rational odd_double_factorial(int n);
/// y (y-1) ... (y-j+1); the empty product for j = 0.
Rational falling_factorial(const Rational& y, int j);

} // namespace satokdv
