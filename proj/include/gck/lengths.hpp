/*
 * lengths.hpp: class-function length functions and conditional
 * negative-definiteness, decided by three mutually independent routes:
 *
 *   1. the definition: the quadratic form on zero-sum coefficient vectors,
 *   2. the linear constraints Phi_i(l) >= 0 for every nontrivial irrep,
 *   3. the Schoenberg route: exp(-t l) positive semidefinite over a t-grid.
 *
 * Route 2 is exact and finite; routes 1 and 3 are the audits.
 */

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gck/characters.hpp"
#include "gck/group.hpp"

namespace gck {

struct LengthFunction {
    GroupPtr group;
    std::vector<double> values; // one value per conjugacy class
    bool strict = false;        // all values off the identity class are > 0

    double at_class(int c) const { return values[c]; }
    double at_element(ElementId g) const { return values[group->classes().class_of[g]]; }
};

// Validates l(e) = 0, l >= 0, and l(C) = l(C^{-1}) (within 1e-12).
// Errors: length-arity-mismatch, nonzero-at-identity, negative-value,
// inversion-asymmetric.
LengthFunction make_length(const GroupPtr& group, const std::vector<double>& per_class_values);

// Word-length powers on the symmetric group S_n: l(C) = (n - cycles(C))^e.
LengthFunction word_length_from_cycles(int n, double exponent);

struct DefinitionVerdict {
    bool negative_definite = false;
    double max_eigenvalue = 0.0; // of the quadratic form restricted to zero-sum vectors
    Eigen::VectorXd witness;     // violating zero-sum vector; empty when the verdict is true
};

// Route 1: project L_ij = l(g_i^{-1} g_j) onto {a : sum a_i = 0} and test
// the top eigenvalue against 1e-9.
DefinitionVerdict is_cond_negative_definition(const LengthFunction& l);

// The kernel K_ij = exp(-t l(g_i g_j^{-1})); real symmetric with unit diagonal.
Eigen::MatrixXd schoenberg_kernel(const LengthFunction& l, double t);

// 25 logarithmically spaced points covering [2^-8, 2^3].
std::vector<double> default_t_grid();

// Route 3: minimum kernel eigenvalue over the grid; PSD iff >= -1e-9.
double kernel_sweep_min_eigenvalue(const LengthFunction& l, const std::vector<double>& t_grid);
bool is_cond_negative_schoenberg(const LengthFunction& l, const std::vector<double>& t_grid);

struct PhiVector {
    std::vector<double> full;        // Phi_i for every irrep, trivial first
    std::vector<double> constrained; // the entries i >= 2 that carry the constraints
};

// Phi_i(l) = -sum_j (#C_j/#G) l(C_j) conj(chi_ij); the derivative of the
// decomposition coefficients at t = 0.
PhiVector phi(const CharacterTable& table, const LengthFunction& l);

// Route 2.
bool is_cond_negative_constraints(const CharacterTable& table, const LengthFunction& l);

// Inverse of the constrained Phi map. Reconstructs Phi_1 from the weighted
// sum rule, solves the linear system for the class values, and validates the
// result as a LengthFunction (so inputs outside the image of valid lengths
// surface the make_length errors). phi_inverse_raw skips that validation and
// returns the bare class values.
LengthFunction phi_inverse(const CharacterTable& table, const std::vector<double>& constrained);
std::vector<double> phi_inverse_raw(const CharacterTable& table, const std::vector<double>& constrained);

} // namespace gck
