#pragma once

// Truncated KdV tau functions built from affine coordinates, the change to
// the coupling constants t_k, intersection numbers read off log Z, and the
// string-equation and KdV-flow checks.

#include "satokdv/grassmann.hpp"
#include "satokdv/rational.hpp"
#include "satokdv/report.hpp"
#include "satokdv/schur.hpp"

#include <string>
#include <vector>

namespace satokdv {

enum class Provenance { Grassmann, Zhou, Custom };

std::string to_string(Provenance p);

/// tau = sum_{|mu| <= degree} A_mu s_mu(theta), known through graded weight `degree`.
struct TauSeries {
    GradedPoly poly;
    int degree = 0;
    Provenance provenance = Provenance::Grassmann;
};

/// Largest tau degree the table supports: every Frobenius arm and leg of a
/// partition of weight D is at most D - 1.
int max_tau_degree(const AffineTable& table);

/// Throws InsufficientTable when the table is smaller than (D-1) x (D-1).
TauSeries tau_truncated(const AffineTable& table, int degree, Provenance provenance = Provenance::Grassmann);

/// Witten-Kontsevich tau through degree D from the Grassmannian table.
TauSeries wk_tau(int degree);
/// Tau of an arbitrary point through degree D.
TauSeries point_tau(const GrassmannPoint& p, int degree);

/// theta_{2k+1} = -t_k / (2k+1)!!, theta_{2j} = 0.
GradedPoly to_t_variables(const TauSeries& tau);

/// log p through weight `degree` (capped at p.bound()). Throws NonUnit unless p(0) = 1.
GradedPoly log_series(const GradedPoly& p, int degree);
/// exp p through weight `degree`. Throws NonUnit unless p(0) = 0.
GradedPoly exp_series(const GradedPoly& p, int degree);

/// log tau in the t variables.
GradedPoly free_energy(const TauSeries& tau);

/// <tau_{k_1} ... tau_{k_n}>, stored sorted.
struct CorrelatorSpec {
    std::vector<int> k;

    CorrelatorSpec() = default;
    explicit CorrelatorSpec(std::vector<int> exponents);
    /// "k1,k2,..."; the empty string is the empty correlator. Throws ParseError.
    static CorrelatorSpec parse(const std::string& text);

    int n() const { return static_cast<int>(k.size()); }
    int sum() const;
    /// sum (2 k_i + 1): the t-weight of the monomial.
    int weight() const;
    /// 3g - 3 + n = sum k_i with g >= 0.
    bool dimension_ok() const;
    /// (sum k_i - n + 3) / 3; meaningful only when dimension_ok().
    int genus() const;
    Monomial monomial() const;
    std::string str() const;
};

struct Correlator {
    CorrelatorSpec spec;
    Rational value;
    int genus = 0;
    bool dimension_mismatch = false;
};

/// (prod e_a!) [prod t_a^{e_a}] F. A spec violating the dimension constraint
/// gives 0 with the flag set; otherwise throws DegreeExceeded past F's bound.
Correlator intersection_number(const CorrelatorSpec& spec, const GradedPoly& free_energy);

/// Every monomial in the T variables of weight <= max_weight.
std::vector<Monomial> t_monomials_up_to(int max_weight);

/// sum_{p>=1} t_p dZ/dt_{p-1} + t_0^2/2 Z - dZ/dt_0 = 0, reported through weight D - 1.
VerificationReport verify_string_equation(const TauSeries& tau);

/// u = d_0^2 log tau against the p-th KdV flow (epsilon = 1):
///   p = 1: u_{t_1} = u u_x + u_xxx / 12
///   p >= 2: u_{t_p} = (2 u w + u_x d_0^{-1} w + w_xx / 4) / (2p + 1), w = u_{t_{p-1}},
/// with d_0^{-1} w = d_{t_{p-1}} d_0 log tau. Reported through weight D - 2p - 3.
VerificationReport verify_kdv_flow(const TauSeries& tau, int p);

/// [t_0^n] u(t_0, 0, 0, ...) for n = 0..max_n. Throws DegreeExceeded when max_n + 2 > D.
std::vector<Rational> u0_coefficients(const TauSeries& tau, int max_n);
/// Taylor data s_n = n! [t_0^n] u(t_0, 0, 0, ...).
std::vector<Rational> initial_data(const TauSeries& tau, int max_n);

/// Every coefficient of log Z whose correlator violates the dimension constraint vanishes.
VerificationReport verify_dimension_filter(const TauSeries& tau);

/// <tau_0 tau_{k_1} ... tau_{k_n}> = sum_i <... tau_{k_i - 1} ...> for every spec of
/// weight <= D except the seed <tau_0^3>.
VerificationReport verify_string_relations(const TauSeries& tau);

} // namespace satokdv
