/*
 * kraus.hpp: the character-induced decomposition of the semigroup
 * P_t: lambda(g) -> exp(-t l(g)) lambda(g) into multipliers
 * sigma_r: lambda(g) -> chi_r(g) lambda(g), with coefficients
 *
 *     p_r(t) = sum_j (#C_j/#G) exp(-t l(C_j)) conj(chi_rj),
 *
 * plus the group-algebra machinery needed to verify it: convolution,
 * star, central idempotents, the fusion convolution identity, and the
 * obstruction to an honest Kraus family inside the algebra.
 */

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gck/characters.hpp"
#include "gck/group.hpp"
#include "gck/lengths.hpp"

namespace gck {

// An element sum_g coeffs[g] lambda(g) of the group algebra.
struct GroupAlgebraElement {
    GroupPtr group;
    Eigen::VectorXcd coeffs;

    static GroupAlgebraElement zero(const GroupPtr& g);
    static GroupAlgebraElement basis(const GroupPtr& g, ElementId x); // lambda(x)

    // (sum a_g lambda(g))* = sum conj(a_g) lambda(g^{-1})
    GroupAlgebraElement star() const;

    // convolution product induced by lambda(g) lambda(h) = lambda(gh)
    GroupAlgebraElement mul(const GroupAlgebraElement& rhs) const;

    // <x, y> = <delta_e, x* y delta_e>, which reduces to the coefficient
    // inner product sum_g conj(x_g) y_g in the regular representation
    std::complex<double> inner(const GroupAlgebraElement& y) const;
    double norm() const;
};

struct KrausCoefficients {
    double t = 0.0;
    std::vector<double> p;          // one per irrep, canonical row order
    std::vector<int> alpha;         // sum-rule weights chi_i(e)
    double sum_rule_residual = 0.0; // |sum_i p_i alpha_i - 1|
};

// Coefficients of P_t in the sigma basis. Throws
// imaginary-residue-too-large or sum-rule-violation as internal errors.
KrausCoefficients decompose(const CharacterTable& table, const LengthFunction& l, double t);

// Convexity of the decomposition for all t >= 0. The constraint route is
// authoritative; the t-grid positivity scan is an audit. A disagreement
// farther than 1e-7 from the constraint boundary is an internal error.
bool is_convex(const CharacterTable& table, const LengthFunction& l);
bool is_convex(const CharacterTable& table, const LengthFunction& l,
               const std::vector<double>& t_grid);

GroupAlgebraElement apply_semigroup(const LengthFunction& l, double t,
                                    const GroupAlgebraElement& x);
GroupAlgebraElement apply_sigma(const CharacterTable& table, int r, const GroupAlgebraElement& x);

// max_c |p_c(t1+t2) - sum_{a,b} p_a(t1) p_b(t2) n_ab^c|
double convolution_check(const CharacterTable& table, const LengthFunction& l, double t1,
                         double t2);

// e_r = (chi_r(e)/|G|) sum_g chi_r(g^{-1}) lambda(g)
GroupAlgebraElement idempotent(const CharacterTable& table, int r);

struct NonexistenceReport {
    double t = 0.0;
    double discrepancy = 0.0;    // ||P_t h - h|| for h = sum_{g != e} lambda(g)
    double closed_form = 0.0;    // sqrt(sum_{C != C_1} #C (1 - e^{-t l(C)})^2)
    bool obstruction = false;    // discrepancy > 0: no algebra-internal Kraus family exists
};

// h is fixed by conjugation, so any family {E_i} in the algebra with
// sum E_i E_i* = lambda(e) would act on h as the identity; a nonzero
// discrepancy is the contradiction.
NonexistenceReport nonexistence_demo(const LengthFunction& l, double t);

// For abelian groups the p vector is literally a probability measure.
bool abelian_probability_check(const CharacterTable& table, const LengthFunction& l, double t);

} // namespace gck
