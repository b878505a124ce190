#pragma once

// Truncated formal Laurent series in 1/lambda with a finite polynomial head.
//
// A series stores its nonzero coefficients sparsely together with the lowest
// exponent whose coefficient is known ("valid_low"). Coefficients of lambda^e
// with e < valid_low are unknown, never zero. tail_order() = -valid_low.
// Every operation derives the exact valid range of its output from those of
// its inputs and drops anything below it.

#include "satokdv/errors.hpp"
#include "satokdv/mat2.hpp"
#include "satokdv/rational.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include <fmt/format.h>

namespace satokdv {

/// valid_low for series that are exact (every coefficient known).
inline constexpr int kExactLow = -(1 << 28);

template <class T>
class Laurent {
public:
    Laurent() = default;

    /// The zero series known through lambda^{-tail_order}.
    explicit Laurent(int tail_order) : low_(clamp_low(-tail_order)) {}

    static Laurent exact() { return Laurent(-kExactLow); }

    static Laurent constant(T value, int tail_order)
    {
        Laurent s(tail_order);
        s.set(0, std::move(value));
        return s;
    }

    static Laurent exact_constant(T value)
    {
        Laurent s = exact();
        s.set(0, std::move(value));
        return s;
    }

    /// sum_k tail[k] lambda^{-k}, known through lambda^{-(tail.size()-1)}.
    static Laurent from_tail(const std::vector<T>& tail)
    {
        Laurent s(static_cast<int>(tail.size()) - 1);
        for (std::size_t k = 0; k < tail.size(); ++k)
            s.set(-static_cast<int>(k), tail[k]);
        return s;
    }

    bool is_exact() const { return low_ == kExactLow; }
    int valid_low() const { return low_; }
    int tail_order() const { return -low_; }

    /// Highest exponent with a nonzero coefficient, clamped below at 0.
    int head_degree() const { return terms_.empty() ? 0 : std::max(0, terms_.rbegin()->first); }

    /// Upper bound on the exponent of the leading term: the highest nonzero
    /// exponent, or valid_low - 1 when every known coefficient is zero.
    int lead_bound() const
    {
        if (!terms_.empty())
            return terms_.rbegin()->first;
        return is_exact() ? kExactLow : low_ - 1;
    }

    bool known(int e) const { return e >= low_; }

    T coeff(int e) const
    {
        if (e < low_)
            throw InsufficientDepth(fmt::format("coefficient of lambda^{} requested but series is only valid down to lambda^{}", e, low_));
        auto it = terms_.find(e);
        return it == terms_.end() ? T{} : it->second;
    }

    /// Coefficient of lambda^{-k}.
    T tail(int k) const { return coeff(-k); }

    void set(int e, T value)
    {
        if (e < low_)
            throw InsufficientDepth(fmt::format("cannot set lambda^{} below valid order lambda^{}", e, low_));
        if (is_zero(value))
            terms_.erase(e);
        else
            terms_[e] = std::move(value);
    }

    const std::map<int, T>& terms() const { return terms_; }

    /// Forgets every coefficient below lambda^{-tail_order}.
    Laurent truncated(int tail_order) const
    {
        Laurent r = *this;
        r.low_ = std::max(low_, clamp_low(-tail_order));
        r.terms_.erase(r.terms_.begin(), r.terms_.lower_bound(r.low_));
        return r;
    }

    Laurent& operator+=(const Laurent& o) { return accumulate(o, false); }
    Laurent& operator-=(const Laurent& o) { return accumulate(o, true); }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator-(const Laurent& a)
    {
        Laurent r(a);
        for (auto& [e, v] : r.terms_)
            v = -v;
        return r;
    }

    /// Cauchy product. Unknown coefficients of either factor reach the product
    /// no higher than (its valid_low - 1) + (lead exponent of the other factor).
    friend Laurent operator*(const Laurent& a, const Laurent& b)
    {
        long low = std::max(static_cast<long>(a.low_) + b.lead_bound(), static_cast<long>(b.low_) + a.lead_bound());
        Laurent r;
        r.low_ = a.is_exact() && b.is_exact() ? kExactLow : clamp_low(low);
        for (const auto& [ea, va] : a.terms_) {
            for (const auto& [eb, vb] : b.terms_) {
                int e = ea + eb;
                if (e < r.low_)
                    continue;
                auto [it, inserted] = r.terms_.try_emplace(e, va * vb);
                if (!inserted)
                    it->second += va * vb;
            }
        }
        r.prune();
        return r;
    }

    template <class S>
    Laurent scaled(const S& s) const
    {
        Laurent r;
        r.low_ = low_;
        for (const auto& [e, v] : terms_)
            r.terms_.emplace(e, v * s);
        r.prune();
        return r;
    }

    /// Multiplication by lambda^k.
    Laurent shifted(int k) const
    {
        Laurent r;
        r.low_ = is_exact() ? kExactLow : clamp_low(static_cast<long>(low_) + k);
        for (const auto& [e, v] : terms_)
            r.terms_.emplace(e + k, v);
        return r;
    }

    /// Keeps exponents >= 0. The result is exact: its tail is identically zero.
    Laurent polynomial_part() const
    {
        if (low_ > 0)
            throw InsufficientDepth(fmt::format("polynomial part needs lambda^0, series valid only down to lambda^{}", low_));
        Laurent r = exact();
        for (auto it = terms_.lower_bound(0); it != terms_.end(); ++it)
            r.terms_.emplace(it->first, it->second);
        return r;
    }

    /// lambda -> -lambda: the coefficient of lambda^e picks up (-1)^e.
    Laurent negate_argument() const
    {
        Laurent r(*this);
        for (auto& [e, v] : r.terms_)
            if (e % 2 != 0)
                v = -v;
        return r;
    }

    /// Same validity range and same stored coefficients.
    friend bool operator==(const Laurent&, const Laurent&) = default;

    /// Equality of all coefficients known in both operands.
    bool equal_on_overlap(const Laurent& o) const { return first_mismatch(o) == kNoMismatch; }

    static constexpr int kNoMismatch = 1 << 29;

    /// Highest exponent (scanning downward) at which the known parts differ, or kNoMismatch.
    int first_mismatch(const Laurent& o) const
    {
        int low = std::max(low_, o.low_);
        std::vector<int> exps;
        for (const auto& [e, v] : terms_)
            if (e >= low)
                exps.push_back(e);
        for (const auto& [e, v] : o.terms_)
            if (e >= low)
                exps.push_back(e);
        std::sort(exps.begin(), exps.end(), std::greater<>());
        for (int e : exps)
            if (!(coeff(e) == o.coeff(e)))
                return e;
        return kNoMismatch;
    }

private:
    static int clamp_low(long low) { return low <= kExactLow ? kExactLow : static_cast<int>(low); }

    Laurent& accumulate(const Laurent& o, bool subtract)
    {
        low_ = std::max(low_, o.low_);
        terms_.erase(terms_.begin(), terms_.lower_bound(low_));
        for (auto it = o.terms_.lower_bound(low_); it != o.terms_.end(); ++it) {
            auto [pos, inserted] = terms_.try_emplace(it->first, subtract ? -it->second : it->second);
            if (!inserted) {
                if (subtract)
                    pos->second -= it->second;
                else
                    pos->second += it->second;
            }
        }
        prune();
        return *this;
    }

    void prune()
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }

    std::map<int, T> terms_;
    int low_ = 0;
};

using LaurentSeries = Laurent<Rational>;
using MatrixLaurent = Laurent<Mat2>;

/// sum_k G_k lambda^{-k} for k = 0..tail_order, a pure tail with 2x2 rational blocks.
class MatrixSeries {
public:
    MatrixSeries() = default;
    explicit MatrixSeries(std::vector<Mat2> blocks) : blocks_(std::move(blocks)) {}

    int tail_order() const { return static_cast<int>(blocks_.size()) - 1; }
    const std::vector<Mat2>& blocks() const { return blocks_; }

    /// G_k; throws InsufficientDepth beyond tail_order.
    const Mat2& operator[](int k) const;

    bool normalized() const { return !blocks_.empty() && blocks_.front().is_identity(); }

    MatrixSeries truncated(int tail_order) const;
    MatrixLaurent to_laurent() const;
    /// Entry (r, c) as a scalar series.
    LaurentSeries entry(int r, int c) const;
    /// det G as a scalar series, known through the same order.
    LaurentSeries det() const;

    friend bool operator==(const MatrixSeries&, const MatrixSeries&) = default;

private:
    std::vector<Mat2> blocks_;
};

/// Multiplies two scalar series (exact Cauchy product with truncation bookkeeping).
inline LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }

/// Inverse of a unit series: no positive powers, nonzero constant term. Throws NonUnit.
LaurentSeries series_inverse(const LaurentSeries& a);

/// I + sum U_k lambda^{-k}, the inverse of a series with G_0 = I. Throws NotNormalized.
MatrixSeries matrix_series_inverse(const MatrixSeries& g);

template <class T>
Laurent<T> polynomial_part(const Laurent<T>& a) { return a.polynomial_part(); }

inline LaurentSeries negate_argument(const LaurentSeries& a) { return a.negate_argument(); }

/// Kac-Schwarz operator S = lambda^{-1} d/dlambda - (1/2) lambda^{-2} - lambda.
LaurentSeries kac_schwarz_apply(const LaurentSeries& a);

} // namespace satokdv
