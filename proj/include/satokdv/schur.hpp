#pragma once

// Partitions, graded polynomials in theta_1, theta_2, ... (deg theta_j = j) or
// t_0, t_1, ... (deg t_k = 2k+1), Schur polynomials via Jacobi-Trudi, and the
// Giambelli-type Pluecker coefficients A_mu.

#include "satokdv/errors.hpp"
#include "satokdv/grassmann.hpp"
#include "satokdv/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace satokdv {

/// Weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Zero parts are dropped; throws InvalidArgument if not weakly decreasing or negative.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    /// mu_i for 1-based i; zero past the length.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
    Partition conjugate() const;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Every partition of weight <= max_weight, ordered by weight and then
/// lexicographically descending: {}, (1), (2), (1,1), (3), (2,1), (1,1,1), ...
std::vector<Partition> partitions_up_to(int max_weight);

/// (m_1 > ... > m_k | n_1 > ... > n_k) with m_i = mu_i - i and n_i = mu'_i - i.
struct FrobeniusCoords {
    std::vector<int> arms;
    std::vector<int> legs;

    int rank() const { return static_cast<int>(arms.size()); }
    friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

FrobeniusCoords frobenius(const Partition& mu);
Partition from_frobenius(const FrobeniusCoords& f);

enum class Vars { Theta, T };

/// Exponent vector; slot i is theta_{i+1} (Theta) or t_i (T). No trailing zeros.
using Monomial = std::vector<int>;

/// Sparse polynomial over Rational, known through graded weight `bound()`.
///
/// Terms of weight above the bound are unknown and never stored. Products and
/// derivatives derive the bound of the result from their inputs, so an identity
/// checked on the result is never asserted on truncated coefficients.
class GradedPoly {
public:
    GradedPoly() = default;
    GradedPoly(Vars vars, int bound) : vars_(vars), bound_(bound) {}

    static GradedPoly constant(Vars vars, int bound, const Rational& value);
    /// theta_index (index >= 1) or t_index (index >= 0).
    static GradedPoly variable(Vars vars, int bound, int index);

    /// Slot of the user-facing variable index.
    static int slot(Vars vars, int index);
    /// User-facing variable index of a slot.
    static int index_of_slot(Vars vars, int slot);
    static int slot_weight(Vars vars, int slot);
    static int var_weight(Vars vars, int index) { return slot_weight(vars, slot(vars, index)); }
    /// Monomial from (index, exponent) pairs.
    static Monomial monomial(Vars vars, const std::vector<std::pair<int, int>>& powers);

    Vars vars() const { return vars_; }
    int bound() const { return bound_; }
    int weight(const Monomial& mono) const;
    /// Lowest weight of a nonzero term, or bound() + 1 for the zero polynomial.
    int low_weight() const;
    bool is_zero() const { return terms_.empty(); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    /// Throws DegreeExceeded when the monomial's weight exceeds the bound.
    Rational coeff(const Monomial& mono) const;
    Rational constant_term() const { return coeff({}); }
    /// Adds value to the coefficient; silently ignored above the bound.
    void add_term(Monomial mono, const Rational& value);

    GradedPoly truncated(int bound) const;
    GradedPoly homogeneous_part(int weight) const;

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const Rational& s);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator-(GradedPoly a) { return a *= Rational(-1); }
    friend GradedPoly operator*(GradedPoly a, const Rational& s) { return a *= s; }
    friend GradedPoly operator*(const Rational& s, GradedPoly a) { return a *= s; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

    /// d/d(variable index); the bound drops by the variable's weight.
    GradedPoly derivative(int index) const;
    /// Multiplication by the variable; the bound rises by its weight.
    GradedPoly times_variable(int index) const;
    /// Sets every variable in `indices` to zero.
    GradedPoly with_zeroed(const std::vector<int>& indices) const;

    /// Same variables, bound and coefficients.
    friend bool operator==(const GradedPoly& a, const GradedPoly& b) = default;

    /// Terms ordered by weight, then exponent vector, e.g. "1/3*t0^3 - 1/3*t1".
    std::string str() const;
    /// Terms in the deterministic export order (weight, then exponent vector).
    std::vector<std::pair<Monomial, Rational>> ordered_terms() const;

private:
    void check_same_vars(const GradedPoly& o) const;

    Vars vars_ = Vars::Theta;
    int bound_ = 0;
    std::map<Monomial, Rational> terms_;
};

/// h_0, ..., h_D from sum_k h_k z^k = exp(sum_j theta_j z^j); each known through weight D.
std::vector<GradedPoly> h_polys(int max_degree);

/// s_mu = det(h_{mu_i - i + j}) with h_{<0} = 0, known through weight max_degree.
/// Throws DegreeExceeded when |mu| > max_degree.
GradedPoly schur_poly(const Partition& mu, int max_degree);

/// Schur polynomial with cached h polynomials.
class SchurCache {
public:
    explicit SchurCache(int max_degree);
    const GradedPoly& get(const Partition& mu);
    int max_degree() const { return max_degree_; }

private:
    int max_degree_;
    std::vector<GradedPoly> h_;
    std::map<std::vector<int>, GradedPoly> cache_;
};

/// Exact determinant over Q by fraction-free (Bareiss) elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Determinant over a commutative ring by row expansion memoized on the set
/// of used columns. Zero entries are skipped.
template <class R, class IsZero>
R determinant_by_expansion(const std::vector<std::vector<R>>& m, const R& zero, const R& one, IsZero is_zero_entry)
{
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return one;
    std::unordered_map<std::uint32_t, R> memo;
    auto minor = [&](auto&& self, std::uint32_t used) -> R {
        const int row = __builtin_popcount(used);
        if (row == n)
            return one;
        if (auto it = memo.find(used); it != memo.end())
            return it->second;
        R acc = zero;
        int free_before = 0;
        for (int c = 0; c < n; ++c) {
            if (used & (1U << c))
                continue;
            const R& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            if (!is_zero_entry(entry)) {
                R term = entry * self(self, used | (1U << c));
                if (free_before % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++free_before;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return minor(minor, 0U);
}

/// A_mu = (-1)^{n_1+...+n_k} det(A_{m_i, n_j}); A_{empty} = 1. Throws OutOfRange.
Rational giambelli_coeff(const Partition& mu, const AffineTable& table);

} // namespace satokdv
