#pragma once

#include "satokdv/rational.hpp"

#include <array>
#include <string>

namespace satokdv {

/// 2x2 matrix over Rational. Entries are addressed zero-based, (row, col).
class Mat2 {
public:
    Mat2() = default;
    Mat2(Rational a11, Rational a12, Rational a21, Rational a22)
        : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)}
    {
    }

    static Mat2 identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }
    static Mat2 zero() { return {}; }
    static Mat2 diagonal(Rational d1, Rational d2) { return {std::move(d1), Rational(0), Rational(0), std::move(d2)}; }

    Rational& operator()(int r, int c) { return e_[static_cast<std::size_t>(2 * r + c)]; }
    const Rational& operator()(int r, int c) const { return e_[static_cast<std::size_t>(2 * r + c)]; }

    bool is_zero() const;
    bool is_identity() const { return *this == identity(); }

    Rational det() const;
    Mat2 transpose() const;
    /// adj(M) = [[d, -b], [-c, a]].
    Mat2 adjugate() const;

    Mat2& operator+=(const Mat2& o);
    Mat2& operator-=(const Mat2& o);
    Mat2& operator*=(const Rational& s);

    friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
    friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
    friend Mat2 operator-(const Mat2& a);
    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend Mat2 operator*(Mat2 a, const Rational& s) { return a *= s; }
    friend Mat2 operator*(const Rational& s, Mat2 a) { return a *= s; }
    friend bool operator==(const Mat2& a, const Mat2& b) = default;

    /// "[[a, b], [c, d]]" with canonical rational strings.
    std::string str() const;

private:
    std::array<Rational, 4> e_{};
};

/// sigma_2 M^T sigma_2 for sigma_2 = [[0, -i], [i, 0]]; the imaginary units cancel
/// and the result is adj(M).
inline Mat2 sigma2_conjugate_transpose(const Mat2& m) { return m.adjugate(); }

/// eta M^T eta for eta = [[0, 1], [1, 0]].
Mat2 eta_adjoint(const Mat2& m);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Mat2& m) { return m.is_zero(); }

} // namespace satokdv
