/*
 * circulant.hpp: G-circulant matrices A_ij = f(g_i g_j^{-1}) for class
 * functions f, their decomposition A = sum_r (|G| p_r / chi_r(e)) Pi_r over
 * the rescaled character projections Pi_r, and positive semidefiniteness by
 * two independent routes (recovered coefficients vs a dense eigensolver).
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "gck/characters.hpp"
#include "gck/group.hpp"

namespace gck {

// A_ij = f(g_i g_j^{-1}) is the published convention; the transposed pairing
// f(g_i^{-1} g_j) appears in the composition arguments. Verdicts agree for
// Hermitian class functions, which the tests assert rather than assuming.
enum class CirculantOrientation { RowInverse, InverseRow };

struct GCirculant {
    GroupPtr group;
    std::vector<std::complex<double>> f; // generating class function, per class
    Eigen::MatrixXcd A;
    bool hermitian = false;
    CirculantOrientation orientation = CirculantOrientation::RowInverse;
};

GCirculant build_circulant(const GroupPtr& group, const std::vector<std::complex<double>>& f,
                           CirculantOrientation orientation = CirculantOrientation::RowInverse);

struct ProjectionFamily {
    std::vector<Eigen::MatrixXcd> projections; // Pi_r = (chi_r(e)/|G|)(chi_r(g_i g_j^{-1}))
    std::vector<int> ranks;                    // chi_r(e)^2 each
};

// Throws table-corrupt when the family misses mutual orthogonality,
// completeness, or integral traces beyond 1e-9.
ProjectionFamily projection_family(const CharacterTable& table);

struct SpectralComponent {
    int irrep = 0;
    std::complex<double> p;          // coefficient of chi_r in f
    std::complex<double> eigenvalue; // |G| p_r / chi_r(e)
    int multiplicity = 0;            // chi_r(e)^2
};

struct SpectralDecomposition {
    std::vector<SpectralComponent> components;
    double dense_mismatch = 0.0; // worst pairing distance against the dense solver
};

// Recovers p_r = <chi_r, f> by the weighted inner product and cross-checks
// the predicted eigenvalue multiset against a dense eigensolver; a pairing
// distance beyond 1e-8 throws spectral-mismatch.
SpectralDecomposition spectral_decompose(const GCirculant& A, const CharacterTable& table);

struct PsdEquivalenceReport {
    bool dense_psd = false;              // (a) min dense eigenvalue >= -1e-9
    bool coefficients_nonnegative = false; // (b) all recovered p_r >= -1e-9
    std::optional<bool> definition_route;  // (c) when f = e^{-l} for a valid length
    double min_eigenvalue = 0.0;
    double min_coefficient = 0.0;
};

// Requires f Hermitian with f(identity) = 1. Routes (a) and (b) must agree;
// a disagreement farther than 1e-7 from both boundaries is an internal
// error. Route (c) is skipped when -log f is not a valid length.
PsdEquivalenceReport psd_equivalence(const CharacterTable& table,
                                     const std::vector<std::complex<double>>& f);

} // namespace gck
