#include "gck/lengths.hpp"

#include <algorithm>
#include <cmath>

#include "gck/errors.hpp"
#include "gck/tolerances.hpp"

namespace gck {

LengthFunction make_length(const GroupPtr& group, const std::vector<double>& per_class_values) {
    const auto& cc = group->classes();
    if (static_cast<int>(per_class_values.size()) != cc.count())
        throw DomainError("length-arity-mismatch",
                          "expected " + std::to_string(cc.count()) + " class values, got " +
                              std::to_string(per_class_values.size()));
    for (double v : per_class_values)
        if (!std::isfinite(v)) throw DomainError("negative-value", "class values must be finite");
    if (std::abs(per_class_values[0]) > 0.0)
        throw DomainError("nonzero-at-identity", "l must vanish on the identity class");
    for (double v : per_class_values)
        if (v < 0.0) throw DomainError("negative-value", "l must be nonnegative");
    for (int c = 0; c < cc.count(); ++c)
        if (std::abs(per_class_values[c] - per_class_values[cc.inverse_class[c]]) > 1e-12)
            throw DomainError("inversion-asymmetric",
                              "l differs on class " + std::to_string(c) + " and its inverse class");

    LengthFunction l;
    l.group = group;
    l.values = per_class_values;
    l.strict = true;
    for (int c = 1; c < cc.count(); ++c)
        if (per_class_values[c] <= 0.0) l.strict = false;
    return l;
}

LengthFunction word_length_from_cycles(int n, double exponent) {
    if (exponent <= 0.0)
        throw DomainError("exponent-not-positive", "the cycle-length exponent must be > 0");
    GroupPtr g = build_group("S" + std::to_string(n));
    const auto& cc = g->classes();
    const auto& images = g->perm_images();

    std::vector<double> values(cc.count());
    for (int c = 0; c < cc.count(); ++c) {
        const auto& rep = images[cc.classes[c][0]];
        std::vector<char> seen(n, 0);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = rep[j]) seen[j] = 1;
        }
        int moved = n - cycles;
        values[c] = moved == 0 ? 0.0 : std::pow(static_cast<double>(moved), exponent);
    }
    return make_length(g, values);
}

DefinitionVerdict is_cond_negative_definition(const LengthFunction& l) {
    const int n = l.group->order();
    Eigen::MatrixXd L(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            L(i, j) = l.at_element(l.group->mul(l.group->inv(i), j));

    // Restrict the form to zero-sum vectors with P = I - J/n; the all-ones
    // direction sits in the kernel of PLP, so the top eigenvalue of PLP is
    // the supremum of the form over the constraint subspace (and >= 0).
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    Eigen::MatrixXd projected = P * L * P;
    projected = 0.5 * (projected + projected.transpose().eval()); // scrub asymmetry noise

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(projected);
    DefinitionVerdict v;
    v.max_eigenvalue = solver.eigenvalues().maxCoeff();
    v.negative_definite = v.max_eigenvalue <= tol::kEig;
    if (!v.negative_definite) v.witness = solver.eigenvectors().col(n - 1);
    return v;
}

Eigen::MatrixXd schoenberg_kernel(const LengthFunction& l, double t) {
    if (t <= 0.0) throw DomainError("t-not-positive", "Schoenberg kernels require t > 0");
    const int n = l.group->order();
    Eigen::MatrixXd K(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            K(i, j) = std::exp(-t * l.at_element(l.group->mul(i, l.group->inv(j))));
    return K;
}

std::vector<double> default_t_grid() {
    // 2^-8 up to 2^3, geometric with 25 points
    std::vector<double> grid(25);
    for (int i = 0; i < 25; ++i) grid[i] = std::exp2(-8.0 + 11.0 * i / 24.0);
    return grid;
}

double kernel_sweep_min_eigenvalue(const LengthFunction& l, const std::vector<double>& t_grid) {
    double worst = std::numeric_limits<double>::infinity();
    for (double t : t_grid) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(schoenberg_kernel(l, t),
                                                              Eigen::EigenvaluesOnly);
        worst = std::min(worst, solver.eigenvalues().minCoeff());
    }
    return worst;
}

bool is_cond_negative_schoenberg(const LengthFunction& l, const std::vector<double>& t_grid) {
    return kernel_sweep_min_eigenvalue(l, t_grid) >= -tol::kEig;
}

PhiVector phi(const CharacterTable& table, const LengthFunction& l) {
    const int k = table.irrep_count();
    PhiVector out;
    out.full.resize(k);
    for (int i = 0; i < k; ++i) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < k; ++j)
            acc -= (static_cast<double>(table.class_sizes[j]) / table.group_order) * l.values[j] *
                   std::conj(table.chi(i, j));
        if (std::abs(acc.imag()) > tol::kImagResidue)
            throw InternalError("imaginary-residue-too-large",
                                "Phi_" + std::to_string(i + 1) + " has imaginary part " +
                                    std::to_string(acc.imag()));
        out.full[i] = acc.real();
    }
    out.constrained.assign(out.full.begin() + 1, out.full.end());
    return out;
}

bool is_cond_negative_constraints(const CharacterTable& table, const LengthFunction& l) {
    PhiVector p = phi(table, l);
    for (double v : p.constrained)
        if (v < -tol::kEig) return false;
    return true;
}

std::vector<double> phi_inverse_raw(const CharacterTable& table,
                                    const std::vector<double>& constrained) {
    const int k = table.irrep_count();
    if (static_cast<int>(constrained.size()) != k - 1)
        throw DomainError("length-arity-mismatch",
                          "expected " + std::to_string(k - 1) + " constrained entries, got " +
                              std::to_string(constrained.size()));

    // The weighted sum rule sum_i Phi_i chi_i(e) = -l(identity class) = 0
    // pins the trivial entry: Phi_1 = -sum_{i>=2} deg_i Phi_i.
    Eigen::VectorXcd full(k);
    double phi1 = 0.0;
    for (int i = 1; i < k; ++i) phi1 -= table.degrees[i] * constrained[i - 1];
    full[0] = phi1;
    for (int i = 1; i < k; ++i) full[i] = constrained[i - 1];

    // Phi = -A l with A_ij = (#C_j/#G) conj(chi_ij); A is the conjugated
    // character matrix scaled by the class weights, invertible whenever the
    // table is valid.
    Eigen::MatrixXcd A(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            A(i, j) = (static_cast<double>(table.class_sizes[j]) / table.group_order) *
                      std::conj(table.chi(i, j));
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A);
    if (!qr.isInvertible())
        throw InternalError("singular-system",
                            "the weighted character matrix is singular; table is corrupt");
    Eigen::VectorXcd sol = qr.solve(-full);

    std::vector<double> values(k);
    for (int j = 0; j < k; ++j) {
        if (std::abs(sol[j].imag()) > tol::kImagResidue)
            throw InternalError("imaginary-residue-too-large",
                                "recovered class value " + std::to_string(j) +
                                    " has imaginary part " + std::to_string(sol[j].imag()));
        values[j] = sol[j].real();
    }
    // The identity entry is zero by construction of Phi_1; scrub solver noise.
    if (std::abs(values[0]) > tol::kInversion)
        throw InternalError("singular-system", "identity class value did not vanish in inversion");
    values[0] = 0.0;
    return values;
}

LengthFunction phi_inverse(const CharacterTable& table, const std::vector<double>& constrained) {
    std::vector<double> values = phi_inverse_raw(table, constrained);
    // any real solution is inversion-symmetric exactly, so pair-averaging
    // only scrubs solver noise
    const auto& cc = table.group->classes();
    for (int c = 0; c < cc.count(); ++c) {
        int ic = cc.inverse_class[c];
        values[c] = values[ic] = 0.5 * (values[c] + values[ic]);
    }
    // boundary inputs (e.g. the zero vector) may land a hair below zero
    for (double& v : values)
        if (v < 0.0 && v >= -tol::kInversion) v = 0.0;
    return make_length(table.group, values);
}

} // namespace gck
