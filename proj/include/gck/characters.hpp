/*
 * characters.hpp: irreducible character tables over the complex field.
 *
 * The table is computed with the Burnside-Dixon class-sum method and stored
 * with a fixed row order: trivial character first, then ascending degree,
 * ties broken lexicographically by real parts (then imaginary parts) along
 * the canonical class order. Columns follow the canonical class order of the
 * group, so chi(i, j) = chi_i(C_j).
 */

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "gck/group.hpp"

namespace gck {

struct CharacterTable {
    GroupPtr group;
    Eigen::MatrixXcd chi;      // irreps x classes, chi(i, j) = chi_i(C_j)
    Eigen::MatrixXcd chi_hat;  // chi_hat(i, j) = chi(i, j) * sqrt(#C_j / #G), unitary
    std::vector<int> class_sizes;
    std::vector<int> degrees;  // chi_i(e), rounded
    int group_order = 0;

    int irrep_count() const { return static_cast<int>(chi.rows()); }
    int class_count() const { return static_cast<int>(chi.cols()); }

    // Weighted inner product <f, g> = sum_j (#C_j / #G) conj(f_j) g_j.
    std::complex<double> inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) const;
};

struct TableValidation {
    double row_orthogonality = 0.0;     // max |<chi_i, chi_j> - delta_ij|
    double column_orthogonality = 0.0;  // max |sum_i conj(chi_ia) chi_ib - delta_ab |G|/#C_a| (scaled)
    double unitarity = 0.0;             // max |chi_hat chi_hat^dagger - I|
    double degree_integrality = 0.0;    // max |chi_i(e) - nearest integer|
    bool passed = false;
};

// Burnside-Dixon with deterministic retries from the given seed. Throws
// InternalError("eigen-splitting-failed") if 20 random combinations in a row
// fail to separate the common eigenspaces.
CharacterTable character_table(const GroupPtr& group, unsigned seed = 12345);

TableValidation validate_table(const CharacterTable& table);

// Multiplicities n_ab^c of irrep c inside the tensor product a (x) b.
// Throws InternalError("table-corrupt") when an inner product strays from an
// integer by more than 1e-6.
std::vector<int> fusion_coefficients(const CharacterTable& table, int a, int b);

} // namespace gck
