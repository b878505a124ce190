#pragma once

// Points of the KdV Grassmannian GM_2, their loop-group matrix G(lambda), and
// matrix-valued affine coordinates Z_{k,l} computed two independent ways.

#include "satokdv/mat2.hpp"
#include "satokdv/rational.hpp"
#include "satokdv/report.hpp"
#include "satokdv/series.hpp"

#include <vector>

namespace satokdv {

/// c_k = (-1)^k (6k)! / (288^k (3k)! (2k)!)
Rational wk_c_coeff(int k);
/// q_k = (1 + 6k) / (1 - 6k) c_k
Rational wk_q_coeff(int k);

/// c(lambda) = sum_k c_k lambda^{-3k}, known through lambda^{-depth}.
LaurentSeries wk_c_series(int depth);
/// q(lambda) = sum_k q_k lambda^{-3k}, known through lambda^{-depth}.
LaurentSeries wk_q_series(int depth);

/// W = span{lambda^{2k} a, lambda^{2k+1} b}, with a, b = 1 + O(1/lambda).
struct GrassmannPoint {
    LaurentSeries a;
    LaurentSeries b;
};

/// The Witten-Kontsevich point a = c, b = q, both known through lambda^{-depth}.
GrassmannPoint wk_point(int depth);

/// True when a_0 = b_0 = 1, b_1 = 0 and neither series has positive powers.
bool is_normalized(const GrassmannPoint& p);

/// b -> b - b_1 lambda^{-1} a, which keeps the span and sets b_1 = 0.
GrassmannPoint normalize_point(const GrassmannPoint& p);

/// Largest k such that G_0..G_k are determined by the known coefficients of p.
int max_g_depth(const GrassmannPoint& p);

/// G(lambda) up to G_depth via the interleaving
/// G11 = sum a_{2k} l^{-k}, G12 = sum b_{2k+1} l^{-k}, G21 = sum a_{2k-1} l^{-k}, G22 = sum b_{2k} l^{-k}.
/// Throws NotNormalized or InsufficientDepth.
MatrixSeries build_G(const GrassmannPoint& p, int depth);

/// G(lambda) of the Witten-Kontsevich point up to G_depth.
MatrixSeries wk_G(int depth);

/// Blocks Z_{k,l}, 0 <= k <= max_k, 0 <= l <= max_l, laid out as
/// Z_{k,l} = [[A_{2k+1,2l}, A_{2k+1,2l+1}], [A_{2k,2l}, A_{2k,2l+1}]].
class ZTable {
public:
    ZTable() = default;
    ZTable(int max_k, int max_l);

    int max_k() const { return max_k_; }
    int max_l() const { return max_l_; }
    bool contains(int k, int l) const { return k >= 0 && l >= 0 && k <= max_k_ && l <= max_l_; }

    const Mat2& at(int k, int l) const;
    Mat2& at(int k, int l);

    friend bool operator==(const ZTable&, const ZTable&) = default;

private:
    int max_k_ = -1;
    int max_l_ = -1;
    std::vector<Mat2> blocks_;
};

/// Scalar affine coordinates A_{m,n}, 0 <= m <= max_m, 0 <= n <= max_n.
class AffineTable {
public:
    AffineTable() = default;
    AffineTable(int max_m, int max_n);

    int max_m() const { return max_m_; }
    int max_n() const { return max_n_; }
    bool contains(int m, int n) const { return m >= 0 && n >= 0 && m <= max_m_ && n <= max_n_; }

    const Rational& at(int m, int n) const;
    Rational& at(int m, int n);

    /// The sub-table 0..max_m x 0..max_n.
    AffineTable cropped(int max_m, int max_n) const;

    friend bool operator==(const AffineTable&, const AffineTable&) = default;

private:
    int max_m_ = -1;
    int max_n_ = -1;
    std::vector<Rational> entries_;
};

/// G-depth needed for a Z table with the given extents: max_k + max_l + 1.
inline int required_g_depth_for_z(int max_k, int max_l) { return max_k + max_l + 1; }
/// G-depth needed for an affine table with the given extents.
inline int required_g_depth(int max_m, int max_n) { return max_m / 2 + max_n / 2 + 1; }

/// Z_{k,l} = -sum_{j=0}^{k} G_j U_{k+l+1-j}.
ZTable z_table_direct(const MatrixSeries& g, int max_k, int max_l);

/// Seeds Z_{k,0} = G_{k+1}, Z_{0,l} = -U_{l+1} and fills Z_{k+1,l} = Z_{k,l+1} + Z_{k,0} Z_{0,l}
/// by ascending anti-diagonals.
ZTable z_table_recursive(const MatrixSeries& g, int max_k, int max_l);

/// Reads A_{m,n} out of the block layout. Throws OutOfRange.
Rational affine_coordinate(const ZTable& z, int m, int n);

/// The scalar table covering every entry of z (max_m = 2 max_k + 1, max_n = 2 max_l + 1).
AffineTable to_affine_table(const ZTable& z);

/// Affine coordinates of the point with loop matrix g, through max_m x max_n.
AffineTable affine_table(const MatrixSeries& g, int max_m, int max_n);

/// Affine coordinates of the Witten-Kontsevich point.
AffineTable wk_affine_table(int max_m, int max_n);

/// Affine coordinates of an arbitrary point, normalized first. Throws InsufficientDepth.
AffineTable point_affine_table(const GrassmannPoint& p, int max_m, int max_n);

// Identity checks. Every verifier reports the depth it actually covered.

/// z_table_direct and z_table_recursive agree entrywise.
VerificationReport verify_z_tables_agree(const MatrixSeries& g, int max_k, int max_l);

/// Z_{k+1,l} - Z_{k,l+1} = Z_{k,0} Z_{0,l} wherever all four blocks are in the table.
VerificationReport verify_z_recursion(const ZTable& z);

/// G (lambda^k G^{-1})_+ = lambda^k + sum_l Z_{l,k} lambda^{-l-1} for k <= max_k.
VerificationReport verify_z_generating(const MatrixSeries& g, const ZTable& z, int max_k);

/// (I - G(alpha) G(beta)^{-1}) / (alpha - beta) = sum Z_{k,l} alpha^{-k-1} beta^{-l-1},
/// compared for 0 <= k, l <= bidegree.
VerificationReport verify_generating_function(const MatrixSeries& g, const ZTable& z, int bidegree);

/// When det G = 1 through lambda^{-depth}: U_k = sigma2 G_k^T sigma2, Z_{l,k} = -sigma2 Z_{k,l}^T sigma2
/// and A_{n,m} = (-1)^{m+n} A_{m,n}, for k + l <= depth. Skipped when det G != 1.
VerificationReport verify_symmetry(const ZTable& z, const MatrixSeries& g, int depth);

/// A_{m+2,n} - A_{m,n+2} = A_{m,0} A_{1,n} + A_{m,1} A_{0,n} for m + n <= max_sum.
VerificationReport verify_two_step_recursion(const AffineTable& t, int max_sum);

/// A_{n,m} = (-1)^{m+n} A_{m,n} for m, n <= max_index.
VerificationReport verify_affine_symmetry(const AffineTable& t, int max_index);

/// c(lambda) q(-lambda) + c(-lambda) q(lambda) = 2 through lambda^{-depth}.
VerificationReport verify_cq_identity(int depth);

/// (S^2 - lambda^2) c = 0 and q = -lambda^{-1} S c, starting from c known through lambda^{-depth}.
VerificationReport verify_kac_schwarz(int depth);

/// G_{3j} diagonal, G_{3j+1} upper-right only, G_{3j+2} lower-left only.
VerificationReport verify_wk_block_structure(const MatrixSeries& g);

} // namespace satokdv
