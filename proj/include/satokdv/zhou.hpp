#pragma once

// Closed-form coefficients A^Zhou_{m,n} in Q[sqrt(-2)], their rational
// rescaling B_{m,n} = (sqrt(-2))^{m+n+1} A^Zhou_{m,n}, and the auxiliary
// identities used to match them with Grassmannian affine coordinates.

#include "satokdv/grassmann.hpp"
#include "satokdv/rational.hpp"
#include "satokdv/report.hpp"

#include <span>

namespace satokdv {

/// Residue pattern of (row mod 3, col mod 3) selecting one of the closed forms.
enum class ZhouClass { TwoZero, ZeroTwo, OneOne, Zero };

/// A table index resolved to its closed-form family and parameters m >= 1, n >= 0.
struct ZhouIndex {
    int row = 0;
    int col = 0;
    ZhouClass cls = ZhouClass::Zero;
    int m = 0;
    int n = 0;
};

ZhouIndex classify_zhou_index(int row, int col);

/// b_k = 2^k (6k+1)!! / (2k)!
Rational b_seq(int k);

/// B_n(x) = (1/6) sum_{j=1}^{n} 108^j b_{n-j} (x+n)_{[j-1]}; B_0 = 0.
Rational B_poly(int n, const Rational& x);

/// A^Zhou at (row, col), evaluated verbatim in Q[sqrt(-2)].
ExtRational zhou_A(int row, int col);
ExtRational zhou_A(const ZhouIndex& idx);

/// (sqrt(-2))^{row+col+1} A^Zhou_{row,col}; throws NonRational if the product is not rational.
Rational rescale_B(int row, int col);

/// Rescaled Zhou coefficients B_{m,n} for 0 <= m <= max_m, 0 <= n <= max_n.
AffineTable zhou_table(int max_m, int max_n);

/// Entrywise A_{m,n} (Grassmannian) == B_{m,n} (Zhou) over the given extents.
VerificationReport verify_zhou_match(const AffineTable& grassmann, int max_m, int max_n);

/// B_n(x) = 108 (x+2) B_{n-1}(x+1) + 105 B_{n-1}(x+1)/x - 18 (n-1) b_{n-1}/x + 18 b_{n-1}
/// at each nonzero sample x.
VerificationReport verify_Bn_recursion(int n, std::span<const Rational> xs);

/// Both sides of the three-term combinatorial identity at (m, n), m, n >= 1.
struct CombinatorialSides {
    /// m(2m+1)(B_n(m) + b_n/(6m-1)) - (6m+7)(6m+5)(6m+3)(B_{n-1}(m+1) + b_{n-1}/(6m+7))
    Rational lhs;
    /// (6n-1)!!/(6m-1) * (2m+2n)(2m+2)!/((2m)!(2n)!) * 1/((m+1)...(m+n-1)), as printed.
    Rational rhs;
    /// The value the right side must take for B_{3m-2,3n+1} - B_{3m,3n-1} = -B_{3m-2,1} B_{0,3n-1}
    /// to hold, obtained by dividing that relation by the common closed-form prefactor.
    Rational rhs_from_recursion;
};

CombinatorialSides combinatorial_sides(int m, int n);

/// lhs == rhs of the printed combinatorial identity. The note also records whether
/// lhs matches rhs_from_recursion.
VerificationReport verify_combinatorial_identity(int m, int n);

} // namespace satokdv
