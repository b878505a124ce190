#pragma once

// The R-matrix series of the A_2 (3-spin) Frobenius manifold, its relation to
// the Witten-Kontsevich G-matrix, and the V-matrices of (R*(w)R(z) - I)/(w + z).

#include "satokdv/grassmann.hpp"
#include "satokdv/mat2.hpp"
#include "satokdv/report.hpp"

#include <vector>

namespace satokdv {

/// R(z) = sum_{k=0}^{depth} R_k z^k with
/// R_{2j} = diag(q_{2j}, c_{2j}) and R_{2j+1} = [[0, -q_{2j+1}], [-c_{2j+1}, 0]].
struct RMatrixSeries {
    int depth = 0;
    std::vector<Mat2> blocks;

    const Mat2& operator[](int k) const;
};

RMatrixSeries r_matrix(int depth);

/// R* = eta R^T eta with eta = [[0, 1], [1, 0]], coefficientwise.
RMatrixSeries r_star(const RMatrixSeries& r);

/// R(z) = z^{sigma3/6} G(z^{-2/3})^{-1} z^{-sigma3/6} through z^depth, checked via
/// the exponent map 3n = 2e + delta between z^n in R and lambda^{-e} in U = G^{-1}
/// (delta = 0 on the diagonal, +1 at (1,2), -1 at (2,1)). U entries with no
/// integral partner must vanish.
VerificationReport verify_R_from_G(int depth);

/// V_{k,l} on the triangle k + l <= max_sum.
class VTable {
public:
    VTable() = default;
    explicit VTable(int max_sum);

    int max_sum() const { return max_sum_; }
    bool contains(int k, int l) const { return k >= 0 && l >= 0 && k + l <= max_sum_; }
    const Mat2& at(int k, int l) const;
    Mat2& at(int k, int l);

    friend bool operator==(const VTable&, const VTable&) = default;

private:
    int max_sum_ = -1;
    std::vector<Mat2> entries_;
};

/// Solves (w + z) sum (-1)^{k+l} V_{k,l} w^k z^l = R*(w) R(z) - I layer by layer
/// for k + l <= max_sum. Throws InconsistentDivision if the numerator is not divisible.
VTable v_table(int max_sum);

/// V_{k,l+1} + V_{k+1,l} = V_{k,0} V_{0,l} and V*_{k,l} = V_{l,k} for k, l <= max_index.
VerificationReport verify_v_relations(const VTable& v, int max_index);

/// V_{k,l+1} + V_{k+1,l} = -V_{k,0} V_{0,l}, the form compatible with the signed definition.
VerificationReport verify_v_relations_signed(const VTable& v, int max_index);

/// (w + z) times the solved V series reproduces R*(w) R(z) - I through total degree max_sum + 1.
VerificationReport verify_v_reconstruction(const VTable& v);

/// V_{2k,2l+1} = Z_{3k,3l+2}, V_{2l+1,2k} = -Z_{3l+2,3k},
/// V_{2k,2l} = -Z_{3k,3l+1} - Z_{3k,3l}, V_{2k+1,2l+1} = Z_{3k+2,3l+2} + Z_{3k+2,3l+1}
/// for k <= max_k, l <= max_l. Builds the WK Z table and V table it needs.
VerificationReport verify_thm2(int max_k, int max_l);

/// Same relations against caller-supplied tables. Throws InsufficientDepth.
VerificationReport verify_thm2(const VTable& v, const ZTable& z, int max_k, int max_l);

} // namespace satokdv
