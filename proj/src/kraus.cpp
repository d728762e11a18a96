#include "gck/kraus.hpp"

#include <cmath>

#include "gck/errors.hpp"
#include "gck/tolerances.hpp"

namespace gck {

GroupAlgebraElement GroupAlgebraElement::zero(const GroupPtr& g) {
    return {g, Eigen::VectorXcd::Zero(g->order())};
}

GroupAlgebraElement GroupAlgebraElement::basis(const GroupPtr& g, ElementId x) {
    if (x < 0 || x >= g->order())
        throw DomainError("element-out-of-range", "no element with id " + std::to_string(x));
    auto e = zero(g);
    e.coeffs[x] = 1.0;
    return e;
}

GroupAlgebraElement GroupAlgebraElement::star() const {
    GroupAlgebraElement out = zero(group);
    for (int g = 0; g < group->order(); ++g) out.coeffs[group->inv(g)] = std::conj(coeffs[g]);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::mul(const GroupAlgebraElement& rhs) const {
    if (rhs.group->ordering_hash() != group->ordering_hash())
        throw DomainError("group-mismatch", "operands live in different group algebras");
    GroupAlgebraElement out = zero(group);
    for (int a = 0; a < group->order(); ++a) {
        if (coeffs[a] == 0.0) continue;
        for (int b = 0; b < group->order(); ++b)
            out.coeffs[group->mul(a, b)] += coeffs[a] * rhs.coeffs[b];
    }
    return out;
}

std::complex<double> GroupAlgebraElement::inner(const GroupAlgebraElement& y) const {
    return coeffs.dot(y.coeffs); // Eigen's dot conjugates the left argument
}

double GroupAlgebraElement::norm() const { return coeffs.norm(); }

KrausCoefficients decompose(const CharacterTable& table, const LengthFunction& l, double t) {
    if (t < 0.0) throw DomainError("negative-time", "decompositions require t >= 0");
    const int k = table.irrep_count();

    KrausCoefficients out;
    out.t = t;
    out.p.resize(k);
    out.alpha = table.degrees;
    for (int i = 0; i < k; ++i) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < k; ++j)
            acc += (static_cast<double>(table.class_sizes[j]) / table.group_order) *
                   std::exp(-t * l.values[j]) * std::conj(table.chi(i, j));
        if (std::abs(acc.imag()) > tol::kImagResidue)
            throw InternalError("imaginary-residue-too-large",
                                "p_" + std::to_string(i + 1) + " has imaginary part " +
                                    std::to_string(acc.imag()));
        out.p[i] = acc.real();
    }

    double weighted = 0.0;
    for (int i = 0; i < k; ++i) weighted += out.p[i] * out.alpha[i];
    out.sum_rule_residual = std::abs(weighted - 1.0);
    if (out.sum_rule_residual > tol::kSumRule)
        throw InternalError("sum-rule-violation",
                            "sum_i p_i chi_i(e) strayed from 1 by " +
                                std::to_string(out.sum_rule_residual));
    return out;
}

bool is_convex(const CharacterTable& table, const LengthFunction& l) {
    return is_convex(table, l, default_t_grid());
}

bool is_convex(const CharacterTable& table, const LengthFunction& l,
               const std::vector<double>& t_grid) {
    PhiVector ph = phi(table, l);
    bool byPhi = true;
    double boundary_margin = std::numeric_limits<double>::infinity();
    for (double v : ph.constrained) {
        if (v < -tol::kEig) byPhi = false;
        boundary_margin = std::min(boundary_margin, std::abs(v));
    }

    bool byGrid = true;
    for (double t : t_grid) {
        for (double p : decompose(table, l, t).p)
            if (p < -tol::kEig) byGrid = false;
        if (!byGrid) break;
    }

    // The grid can only falsify; treat a split decision near the constraint
    // boundary as grid discretization, everywhere else as a real bug.
    if (byPhi != byGrid && boundary_margin > tol::kBoundaryBand)
        throw InternalError("internal-inconsistency",
                            "constraint route says " + std::string(byPhi ? "convex" : "not convex") +
                                " but the t-grid audit disagrees at margin " +
                                std::to_string(boundary_margin));
    return byPhi;
}

GroupAlgebraElement apply_semigroup(const LengthFunction& l, double t,
                                    const GroupAlgebraElement& x) {
    if (t < 0.0) throw DomainError("negative-time", "the semigroup is defined for t >= 0");
    GroupAlgebraElement out = x;
    for (int g = 0; g < x.group->order(); ++g) out.coeffs[g] *= std::exp(-t * l.at_element(g));
    return out;
}

GroupAlgebraElement apply_sigma(const CharacterTable& table, int r, const GroupAlgebraElement& x) {
    if (r < 0 || r >= table.irrep_count())
        throw DomainError("irrep-index-out-of-range", "no irrep with index " + std::to_string(r));
    const auto& cc = table.group->classes();
    GroupAlgebraElement out = x;
    for (int g = 0; g < x.group->order(); ++g) out.coeffs[g] *= table.chi(r, cc.class_of[g]);
    return out;
}

double convolution_check(const CharacterTable& table, const LengthFunction& l, double t1,
                         double t2) {
    const int k = table.irrep_count();
    auto p1 = decompose(table, l, t1).p;
    auto p2 = decompose(table, l, t2).p;
    auto psum = decompose(table, l, t1 + t2).p;

    std::vector<double> rhs(k, 0.0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            auto n = fusion_coefficients(table, a, b);
            for (int c = 0; c < k; ++c) rhs[c] += p1[a] * p2[b] * n[c];
        }

    double residual = 0.0;
    for (int c = 0; c < k; ++c) residual = std::max(residual, std::abs(psum[c] - rhs[c]));
    return residual;
}

GroupAlgebraElement idempotent(const CharacterTable& table, int r) {
    if (r < 0 || r >= table.irrep_count())
        throw DomainError("irrep-index-out-of-range", "no irrep with index " + std::to_string(r));
    const GroupPtr& g = table.group;
    const auto& cc = g->classes();
    GroupAlgebraElement out = GroupAlgebraElement::zero(g);
    const double scale = static_cast<double>(table.degrees[r]) / table.group_order;
    for (int x = 0; x < g->order(); ++x)
        out.coeffs[x] = scale * table.chi(r, cc.class_of[g->inv(x)]);
    return out;
}

NonexistenceReport nonexistence_demo(const LengthFunction& l, double t) {
    const GroupPtr& g = l.group;
    if (g->order() < 2)
        throw DomainError("group-trivial", "the obstruction needs a nonidentity element");
    if (!l.strict)
        throw DomainError("length-not-strict", "the obstruction argument needs l > 0 off e");
    if (t < 0.0) throw DomainError("negative-time", "the semigroup is defined for t >= 0");

    GroupAlgebraElement h = GroupAlgebraElement::zero(g);
    for (int x = 1; x < g->order(); ++x) h.coeffs[x] = 1.0;

    GroupAlgebraElement drift = apply_semigroup(l, t, h);
    drift.coeffs -= h.coeffs;

    NonexistenceReport rep;
    rep.t = t;
    rep.discrepancy = drift.norm();

    const auto& cc = g->classes();
    double sq = 0.0;
    for (int c = 1; c < cc.count(); ++c) {
        double d = 1.0 - std::exp(-t * l.values[c]);
        sq += cc.class_sizes[c] * d * d;
    }
    rep.closed_form = std::sqrt(sq);
    rep.obstruction = rep.discrepancy > 0.0;
    return rep;
}

bool abelian_probability_check(const CharacterTable& table, const LengthFunction& l, double t) {
    if (!table.group->abelian())
        throw DomainError("group-not-abelian",
                          table.group->name() + " has a nontrivial conjugacy class");
    auto coeffs = decompose(table, l, t);
    double total = 0.0;
    for (double p : coeffs.p) {
        if (p < -tol::kEig) return false;
        total += p;
    }
    return std::abs(total - 1.0) <= tol::kSumRule;
}

} // namespace gck
