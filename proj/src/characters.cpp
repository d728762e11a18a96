#include "gck/characters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "gck/errors.hpp"
#include "gck/tolerances.hpp"

namespace gck {

namespace {

constexpr int kMaxAttempts = 20;
constexpr double kSplitGap = 1e-6;

// Lexicographic comparison of table rows along the canonical class order,
// real parts first, then imaginary parts, with a fuzz that absorbs solver
// noise on mathematically equal entries.
bool row_less(const Eigen::MatrixXcd& m, int a, int b) {
    constexpr double eps = 1e-8;
    for (int k = 0; k < m.cols(); ++k) {
        double d = m(a, k).real() - m(b, k).real();
        if (std::abs(d) > eps) return d < 0;
    }
    for (int k = 0; k < m.cols(); ++k) {
        double d = m(a, k).imag() - m(b, k).imag();
        if (std::abs(d) > eps) return d < 0;
    }
    return false;
}

// One Burnside-Dixon attempt: eigendecompose a random real combination of
// the class-sum multiplication matrices. Returns rows in solver order, or
// nothing when the combination fails to split the common eigenspaces.
std::optional<Eigen::MatrixXcd> dixon_attempt(const FiniteGroup& g, std::mt19937& rng) {
    const auto& cc = g.classes();
    const int k = cc.count();
    const int n = g.order();

    std::uniform_real_distribution<double> unit(1.0, 2.0);
    std::vector<double> coeff(k);
    for (double& c : coeff) c = unit(rng);

    // M = sum_i coeff_i M_i where (M_i w)_j = omega(i) w_j for the class
    // scalars omega(i) = #C_i chi(C_i) / chi(e). Entry (j, z) accumulates the
    // structure constants a_{ijz} = #{(x,y) in C_i x C_j : xy = rep(C_z)}.
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(k, k);
    for (int x = 0; x < n; ++x) {
        const double cx = coeff[cc.class_of[x]];
        for (int y = 0; y < n; ++y) {
            int z = cc.class_of[g.mul(x, y)];
            M(cc.class_of[y], z) += cx / cc.class_sizes[z];
        }
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(M);
    if (solver.info() != Eigen::Success) return std::nullopt;
    Eigen::VectorXcd evals = solver.eigenvalues();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (std::abs(evals[a] - evals[b]) < kSplitGap) return std::nullopt;

    Eigen::MatrixXcd rows(k, k);
    for (int r = 0; r < k; ++r) {
        Eigen::VectorXcd w = solver.eigenvectors().col(r);
        if (std::abs(w[0]) < 1e-12) return std::nullopt; // omega(identity) = 1
        w /= w[0];

        // First orthogonality fixes the degree: chi(C_j) = d w_j / #C_j with
        // d = sqrt(|G| / sum_j |w_j|^2 / #C_j).
        double s = 0.0;
        for (int j = 0; j < k; ++j) s += std::norm(w[j]) / cc.class_sizes[j];
        double degree = std::sqrt(n / s);
        if (std::abs(degree - std::round(degree)) > 1e-6 || std::round(degree) < 1.0)
            return std::nullopt;
        for (int j = 0; j < k; ++j) rows(r, j) = degree * w[j] / static_cast<double>(cc.class_sizes[j]);
    }
    return rows;
}

} // namespace

std::complex<double> CharacterTable::inner(const Eigen::VectorXcd& f,
                                           const Eigen::VectorXcd& g) const {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < static_cast<int>(class_sizes.size()); ++j)
        acc += (static_cast<double>(class_sizes[j]) / group_order) * std::conj(f[j]) * g[j];
    return acc;
}

CharacterTable character_table(const GroupPtr& group, unsigned seed) {
    const auto& cc = group->classes();
    const int k = cc.count();

    std::mt19937 rng(seed);
    std::optional<Eigen::MatrixXcd> rows;
    for (int attempt = 0; attempt < kMaxAttempts && !rows; ++attempt)
        rows = dixon_attempt(*group, rng);
    if (!rows)
        throw InternalError("eigen-splitting-failed",
                            "no random class-sum combination split the eigenspaces of " +
                                group->name() + " after " + std::to_string(kMaxAttempts) +
                                " attempts; re-seed and retry");

    // Row order: trivial character first, then ascending degree with the
    // lexicographic tie-break.
    std::vector<int> order(k);
    int trivial = -1;
    for (int r = 0; r < k; ++r) {
        order[r] = r;
        if ((rows->row(r).array() - 1.0).abs().maxCoeff() < 1e-6) trivial = r;
    }
    if (trivial < 0)
        throw InternalError("eigen-splitting-failed", "trivial character missing from solver output");
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (a == trivial || b == trivial) return a == trivial;
        double da = std::round((*rows)(a, 0).real());
        double db = std::round((*rows)(b, 0).real());
        if (da != db) return da < db;
        return row_less(*rows, a, b);
    });

    CharacterTable t;
    t.group = group;
    t.group_order = group->order();
    t.class_sizes = cc.class_sizes;
    t.chi.resize(k, k);
    for (int r = 0; r < k; ++r) t.chi.row(r) = rows->row(order[r]);
    t.degrees.resize(k);
    for (int r = 0; r < k; ++r) t.degrees[r] = static_cast<int>(std::llround(t.chi(r, 0).real()));
    t.chi_hat.resize(k, k);
    for (int j = 0; j < k; ++j)
        t.chi_hat.col(j) = t.chi.col(j) * std::sqrt(static_cast<double>(cc.class_sizes[j]) / t.group_order);
    return t;
}

TableValidation validate_table(const CharacterTable& t) {
    const int k = t.irrep_count();
    TableValidation v;

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::complex<double> ip = t.inner(t.chi.row(i).transpose(), t.chi.row(j).transpose());
            double target = (i == j) ? 1.0 : 0.0;
            v.row_orthogonality = std::max(v.row_orthogonality, std::abs(ip - target));
        }

    // Column orthogonality, scaled by sqrt(#C_a #C_b)/|G| so the tolerance is
    // uniform across classes; this equals |(chi_hat^dagger chi_hat - I)_ab|.
    Eigen::MatrixXcd gram = t.chi_hat.adjoint() * t.chi_hat - Eigen::MatrixXcd::Identity(k, k);
    v.column_orthogonality = gram.cwiseAbs().maxCoeff();

    Eigen::MatrixXcd unit = t.chi_hat * t.chi_hat.adjoint() - Eigen::MatrixXcd::Identity(k, k);
    v.unitarity = unit.cwiseAbs().maxCoeff();

    for (int i = 0; i < k; ++i) {
        double re = t.chi(i, 0).real();
        double dev = std::max(std::abs(re - std::round(re)), std::abs(t.chi(i, 0).imag()));
        v.degree_integrality = std::max(v.degree_integrality, dev);
    }

    v.passed = v.row_orthogonality <= tol::kTableValidation &&
               v.column_orthogonality <= tol::kTableValidation &&
               v.unitarity <= tol::kTableValidation &&
               v.degree_integrality <= tol::kTableValidation;
    return v;
}

std::vector<int> fusion_coefficients(const CharacterTable& t, int a, int b) {
    const int k = t.irrep_count();
    if (a < 0 || a >= k || b < 0 || b >= k)
        throw DomainError("irrep-index-out-of-range",
                          "fusion indices must lie in [0, " + std::to_string(k) + ")");
    Eigen::VectorXcd prod = t.chi.row(a).cwiseProduct(t.chi.row(b)).transpose();
    std::vector<int> out(k);
    for (int c = 0; c < k; ++c) {
        std::complex<double> n = t.inner(prod, t.chi.row(c).transpose());
        double re = n.real();
        if (std::abs(re - std::round(re)) > tol::kFusionInteger ||
            std::abs(n.imag()) > tol::kFusionInteger || std::llround(re) < 0)
            throw InternalError("table-corrupt",
                                "fusion multiplicity for (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") -> " + std::to_string(c) +
                                    " is not a nonnegative integer");
        out[c] = static_cast<int>(std::llround(re));
    }
    return out;
}

} // namespace gck
