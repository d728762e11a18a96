#include "gck/circulant.hpp"

#include <algorithm>
#include <cmath>

#include "gck/errors.hpp"
#include "gck/lengths.hpp"
#include "gck/tolerances.hpp"

namespace gck {

namespace {

// pattern(i, j) = class of g_i g_j^{-1} (or g_i^{-1} g_j for the transposed
// orientation); every circulant and projection is constant on this pattern.
int pattern_class(const FiniteGroup& g, int i, int j, CirculantOrientation o) {
    ElementId x = o == CirculantOrientation::RowInverse ? g.mul(i, g.inv(j)) : g.mul(g.inv(i), j);
    return g.classes().class_of[x];
}

} // namespace

GCirculant build_circulant(const GroupPtr& group, const std::vector<std::complex<double>>& f,
                           CirculantOrientation orientation) {
    const auto& cc = group->classes();
    if (static_cast<int>(f.size()) != cc.count())
        throw DomainError("class-function-arity-mismatch",
                          "expected " + std::to_string(cc.count()) + " class values, got " +
                              std::to_string(f.size()));

    GCirculant out;
    out.group = group;
    out.f = f;
    out.orientation = orientation;
    const int n = group->order();
    out.A.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.A(i, j) = f[pattern_class(*group, i, j, orientation)];

    out.hermitian = true;
    for (int c = 0; c < cc.count() && out.hermitian; ++c)
        if (std::abs(f[cc.inverse_class[c]] - std::conj(f[c])) > 1e-12) out.hermitian = false;
    return out;
}

ProjectionFamily projection_family(const CharacterTable& table) {
    const GroupPtr& g = table.group;
    const int n = g->order();
    const int k = table.irrep_count();

    ProjectionFamily fam;
    fam.projections.reserve(k);
    fam.ranks.reserve(k);
    for (int r = 0; r < k; ++r) {
        Eigen::MatrixXcd P(n, n);
        const double scale = static_cast<double>(table.degrees[r]) / n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                P(i, j) = scale *
                          table.chi(r, pattern_class(*g, i, j, CirculantOrientation::RowInverse));
        double trace = P.trace().real();
        if (std::abs(P.trace() - std::complex<double>(std::round(trace))) > tol::kProjection)
            throw InternalError("table-corrupt",
                                "projection trace for irrep " + std::to_string(r + 1) +
                                    " is not integral");
        fam.projections.push_back(std::move(P));
        fam.ranks.push_back(static_cast<int>(std::llround(trace)));
    }

    // mutual orthogonality and completeness certify the family
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(n, n);
    for (int r = 0; r < k; ++r) {
        total += fam.projections[r];
        for (int s = 0; s < k; ++s) {
            Eigen::MatrixXcd prod = fam.projections[r] * fam.projections[s];
            if (r == s) prod -= fam.projections[r];
            if (prod.cwiseAbs().maxCoeff() > tol::kProjection)
                throw InternalError("table-corrupt", "projections " + std::to_string(r + 1) +
                                                         " and " + std::to_string(s + 1) +
                                                         " are not orthogonal");
        }
    }
    if ((total - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > tol::kProjection)
        throw InternalError("table-corrupt", "projections do not sum to the identity");
    return fam;
}

SpectralDecomposition spectral_decompose(const GCirculant& A, const CharacterTable& table) {
    if (A.group->ordering_hash() != table.group->ordering_hash())
        throw DomainError("group-mismatch", "circulant and table live on different groups");
    const int k = table.irrep_count();
    const int n = A.group->order();

    SpectralDecomposition out;
    out.components.resize(k);
    for (int r = 0; r < k; ++r) {
        std::complex<double> p = 0.0;
        for (int j = 0; j < k; ++j)
            p += (static_cast<double>(table.class_sizes[j]) / table.group_order) *
                 std::conj(table.chi(r, j)) * A.f[j];
        out.components[r].irrep = r;
        out.components[r].p = p;
        out.components[r].eigenvalue = static_cast<double>(n) * p / static_cast<double>(table.degrees[r]);
        out.components[r].multiplicity = table.degrees[r] * table.degrees[r];
    }

    // cross-check the multiset {eigenvalue_r with multiplicity deg_r^2}
    // against a dense solve by greedy nearest pairing
    std::vector<std::complex<double>> predicted;
    predicted.reserve(n);
    for (const auto& c : out.components)
        predicted.insert(predicted.end(), c.multiplicity, c.eigenvalue);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(A.A);
    if (solver.info() != Eigen::Success)
        throw InternalError("spectral-mismatch", "dense eigensolver failed to converge");
    std::vector<std::complex<double>> dense(solver.eigenvalues().data(),
                                            solver.eigenvalues().data() + n);

    std::vector<char> used(n, 0);
    for (const auto& want : predicted) {
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            double d = std::abs(dense[i] - want);
            if (d < best_dist) {
                best_dist = d;
                best = i;
            }
        }
        used[best] = 1;
        out.dense_mismatch = std::max(out.dense_mismatch, best_dist);
    }
    if (out.dense_mismatch > tol::kSpectralMatch)
        throw InternalError("spectral-mismatch",
                            "projection eigenvalues and dense spectrum differ by " +
                                std::to_string(out.dense_mismatch));
    return out;
}

PsdEquivalenceReport psd_equivalence(const CharacterTable& table,
                                     const std::vector<std::complex<double>>& f) {
    const GroupPtr& g = table.group;
    const auto& cc = g->classes();
    if (static_cast<int>(f.size()) != cc.count())
        throw DomainError("class-function-arity-mismatch",
                          "expected " + std::to_string(cc.count()) + " class values");
    for (int c = 0; c < cc.count(); ++c)
        if (std::abs(f[cc.inverse_class[c]] - std::conj(f[c])) > 1e-9)
            throw DomainError("f-not-hermitian",
                              "f must satisfy f(C^{-1}) = conj(f(C)); class " + std::to_string(c) +
                                  " breaks it");
    if (std::abs(f[0] - std::complex<double>(1.0)) > 1e-9)
        throw DomainError("f-identity-not-one", "f must equal 1 on the identity class");

    GCirculant A = build_circulant(g, f);
    auto spec = spectral_decompose(A, table);

    PsdEquivalenceReport rep;
    rep.min_coefficient = std::numeric_limits<double>::infinity();
    for (const auto& c : spec.components)
        rep.min_coefficient = std::min(rep.min_coefficient, c.p.real());
    rep.coefficients_nonnegative = rep.min_coefficient >= -tol::kEig;

    // Hermitian circulant: the dense route can use the selfadjoint solver.
    Eigen::MatrixXcd H = 0.5 * (A.A + A.A.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
    rep.min_eigenvalue = solver.eigenvalues().minCoeff();
    rep.dense_psd = rep.min_eigenvalue >= -tol::kEig;

    if (rep.dense_psd != rep.coefficients_nonnegative &&
        std::abs(rep.min_eigenvalue) > tol::kBoundaryBand &&
        std::abs(rep.min_coefficient) > tol::kBoundaryBand)
        throw InternalError("psd-route-disagreement",
                            "dense and coefficient PSD routes disagree away from the boundary");

    // route (c): f = e^{-l} for a genuine length
    bool log_defined = true;
    std::vector<double> lvals(cc.count());
    for (int c = 0; c < cc.count(); ++c) {
        if (std::abs(f[c].imag()) > 1e-12 || f[c].real() <= 0.0) {
            log_defined = false;
            break;
        }
        lvals[c] = -std::log(f[c].real());
    }
    if (log_defined) {
        lvals[0] = 0.0; // f(e) = 1 within tolerance; pin the identity exactly
        try {
            LengthFunction l = make_length(g, lvals);
            rep.definition_route = is_cond_negative_definition(l).negative_definite;
        } catch (const DomainError&) {
            // -log f is not a valid length (negative or asymmetric); skip (c)
        }
    }
    return rep;
}

} // namespace gck
