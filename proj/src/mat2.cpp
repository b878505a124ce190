#include "satokdv/mat2.hpp"

#include <fmt/format.h>

namespace satokdv {

bool Mat2::is_zero() const
{
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

Rational Mat2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

Mat2 Mat2::transpose() const { return {e_[0], e_[2], e_[1], e_[3]}; }

Mat2 Mat2::adjugate() const { return {e_[3], -e_[1], -e_[2], e_[0]}; }

Mat2& Mat2::operator+=(const Mat2& o)
{
    for (std::size_t i = 0; i < 4; ++i)
        e_[i] += o.e_[i];
    return *this;
}

Mat2& Mat2::operator-=(const Mat2& o)
{
    for (std::size_t i = 0; i < 4; ++i)
        e_[i] -= o.e_[i];
    return *this;
}

Mat2& Mat2::operator*=(const Rational& s)
{
    for (auto& x : e_)
        x *= s;
    return *this;
}

Mat2 operator-(const Mat2& a) { return {-a.e_[0], -a.e_[1], -a.e_[2], -a.e_[3]}; }

Mat2 operator*(const Mat2& a, const Mat2& b)
{
    return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
            a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
}

std::string Mat2::str() const
{
    return fmt::format("[[{}, {}], [{}, {}]]", e_[0].str(), e_[1].str(), e_[2].str(), e_[3].str());
}

Mat2 eta_adjoint(const Mat2& m)
{
    // eta M^T eta swaps both indices then transposes: [[d, b], [c, a]].
    return {m(1, 1), m(0, 1), m(1, 0), m(0, 0)};
}

} // namespace satokdv
