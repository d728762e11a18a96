#include "gck/fixtures.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>

#include "json.hpp"

#include "gck/characters.hpp"
#include "gck/circulant.hpp"
#include "gck/errors.hpp"
#include "gck/group.hpp"
#include "gck/kraus.hpp"
#include "gck/lengths.hpp"
#include "gck/tolerances.hpp"

namespace gck {

namespace {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Reference tables, frozen from the published source in its own ordering.
// ---------------------------------------------------------------------------

struct ReferenceTable {
    const char* group;
    std::vector<int> class_sizes;             // reference column order
    std::vector<std::vector<double>> chi;     // reference row/column order
};

const ReferenceTable kRefS3 = {
    "S3",
    {1, 3, 2},
    {{1, 1, 1}, {2, 0, -1}, {1, -1, 1}},
};

const ReferenceTable kRefQ8 = {
    "Q8",
    {1, 1, 2, 2, 2},
    {{1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}},
};

const ReferenceTable kRefS4 = {
    "S4",
    {1, 6, 8, 3, 6},
    {{1, 1, 1, 1, 1},
     {3, 1, 0, -1, -1},
     {2, 0, -1, 2, 0},
     {3, -1, 0, -1, 1},
     {1, -1, 1, 1, -1}},
};

// Lengths given in reference class order, reordered to canonical classes.
std::vector<double> canonical_length_values(const PaperOrderMap& m,
                                            const std::vector<double>& ref_values) {
    std::vector<double> out(ref_values.size());
    for (size_t j = 0; j < ref_values.size(); ++j) out[m.col_perm[j]] = ref_values[j];
    return out;
}

FixtureResult table_fixture(const std::string& name, const ReferenceTable& ref, unsigned seed) {
    auto g = build_group(ref.group);
    auto table = character_table(g, seed);
    auto map = load_paper_order(ref.group);
    const int k = table.irrep_count();

    double worst = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            worst = std::max(worst, std::abs(table.chi(map.row_perm[i], map.col_perm[j]) -
                                             cplx(ref.chi[i][j])));
    return {name, worst <= tol::kTableValidation, worst,
            std::string(ref.group) + " character table, reference order, max deviation"};
}

FixtureResult sizes_fixture(const std::string& name, const ReferenceTable& ref) {
    auto g = build_group(ref.group);
    auto map = load_paper_order(ref.group);
    const auto& cc = g->classes();

    bool ok = cc.count() == static_cast<int>(ref.class_sizes.size());
    for (size_t j = 0; ok && j < ref.class_sizes.size(); ++j)
        ok = cc.class_sizes[map.col_perm[j]] == ref.class_sizes[j];
    return {name, ok, 0.0, std::string(ref.group) + " conjugacy class sizes in reference order"};
}

// ---------------------------------------------------------------------------
// S3: verdicts, the accept/reject boundary, and the closed-form p_i.
// ---------------------------------------------------------------------------

FixtureResult s3_verdicts(unsigned seed) {
    auto g = build_group("S3");
    auto table = character_table(g, seed);
    auto map = load_paper_order("S3");
    auto grid = default_t_grid();

    auto verdicts = [&](const std::vector<double>& ref_l) {
        auto l = make_length(g, canonical_length_values(map, ref_l));
        int yes = 0;
        yes += is_cond_negative_definition(l).negative_definite ? 1 : 0;
        yes += is_cond_negative_constraints(table, l) ? 1 : 0;
        yes += is_cond_negative_schoenberg(l, grid) ? 1 : 0;
        return yes;
    };
    bool ok = verdicts({0, 1, std::sqrt(2.0)}) == 3 && verdicts({0, 1, 2}) == 0;
    return {"s3-verdicts", ok, 0.0,
            "S3 accepts (0,1,sqrt 2) and rejects (0,1,2) on all three routes"};
}

FixtureResult s3_boundary(unsigned seed) {
    auto g = build_group("S3");
    auto table = character_table(g, seed);
    auto map = load_paper_order("S3");
    auto grid = default_t_grid();
    std::mt19937 rng(seed ^ 0x5331u);
    std::uniform_real_distribution<double> l3dist(0.05, 3.0);

    auto length_at = [&](double l2, double l3) {
        return make_length(g, canonical_length_values(map, {0, l2, l3}));
    };

    // Joint verdict: a length is accepted when every route accepts it. The
    // kernel sweep on the fixed grid can only certify rejections whose margin
    // exceeds roughly t_min times the curvature, so its lone acceptance region
    // overshoots the line; the rejection side is always caught by the
    // constraint route, which pins the joint threshold to (2/3) l3.
    double worst = 0.0;
    for (int sample = 0; sample < 8; ++sample) {
        double l3 = l3dist(rng);
        auto accepts = [&](double l2) {
            auto l = length_at(l2, l3);
            return is_cond_negative_definition(l).negative_definite &&
                   is_cond_negative_constraints(table, l) &&
                   is_cond_negative_schoenberg(l, grid);
        };
        double lo = 0.0, hi = 3.0 * l3; // reject below, accept above
        for (int iter = 0; iter < 50; ++iter) {
            double mid = 0.5 * (lo + hi);
            (accepts(mid) ? hi : lo) = mid;
        }
        worst = std::max(worst, std::abs(0.5 * (lo + hi) - (2.0 / 3.0) * l3));

        // one-sided spot checks on the individual routes
        auto inside = length_at((2.0 / 3.0) * l3 + 1e-6, l3);
        auto outside = length_at(std::max(0.0, (2.0 / 3.0) * l3 - 1e-6), l3);
        bool sided = is_cond_negative_definition(inside).negative_definite &&
                     is_cond_negative_constraints(table, inside) &&
                     is_cond_negative_schoenberg(inside, grid) &&
                     !is_cond_negative_constraints(table, outside) &&
                     !is_cond_negative_definition(outside).negative_definite;
        if (!sided)
            return {"s3-boundary", false, worst, "a route misclassified a point 1e-6 off the line"};
    }
    return {"s3-boundary", worst <= 1e-6, worst,
            "joint accept/reject threshold sits at l2 = (2/3) l3"};
}

FixtureResult s3_p_formulas(unsigned seed) {
    auto g = build_group("S3");
    auto table = character_table(g, seed);
    auto map = load_paper_order("S3");
    std::mt19937 rng(seed ^ 0x5333u);
    std::uniform_real_distribution<double> unit(0.0, 2.5);

    double worst = 0.0;
    for (int sample = 0; sample < 40; ++sample) {
        double l2 = unit(rng), l3 = unit(rng), t = unit(rng);
        auto l = make_length(g, canonical_length_values(map, {0, l2, l3}));
        auto k = decompose(table, l, t);
        double e2 = std::exp(-t * l2), e3 = std::exp(-t * l3);
        const double expected[3] = {(1 + 3 * e2 + 2 * e3) / 6, (2 - 2 * e3) / 6,
                                    (1 - 3 * e2 + 2 * e3) / 6};
        for (int i = 0; i < 3; ++i)
            worst = std::max(worst, std::abs(k.p[map.row_perm[i]] - expected[i]));
    }
    return {"s3-p-formulas", worst <= 1e-9, worst,
            "S3 decomposition matches its three closed-form coefficients"};
}

// ---------------------------------------------------------------------------
// Q8: the min-of-three condition and the closed-form p_i.
// ---------------------------------------------------------------------------

FixtureResult q8_condition(unsigned seed) {
    auto g = build_group("Q8");
    auto table = character_table(g, seed);
    auto map = load_paper_order("Q8");
    auto grid = default_t_grid();
    std::mt19937 rng(seed ^ 0x7131u);
    std::uniform_real_distribution<double> unit(0.05, 2.0);

    double worst_p = 0.0;
    int checked = 0;
    for (int sample = 0; sample < 150; ++sample) {
        double l2 = unit(rng), l3 = unit(rng), l4 = unit(rng), l5 = unit(rng), t = unit(rng);
        auto l = make_length(g, canonical_length_values(map, {0, l2, l3, l4, l5}));

        double e2 = std::exp(-t * l2), e3 = std::exp(-t * l3), e4 = std::exp(-t * l4),
               e5 = std::exp(-t * l5);
        const double expected[5] = {(1 + e2 + 2 * e3 + 2 * e4 + 2 * e5) / 8,
                                    (1 + e2 + 2 * e3 - 2 * e4 - 2 * e5) / 8,
                                    (1 + e2 - 2 * e3 + 2 * e4 - 2 * e5) / 8,
                                    (1 + e2 - 2 * e3 - 2 * e4 + 2 * e5) / 8,
                                    (2 - 2 * e2) / 8};
        auto k = decompose(table, l, t);
        for (int i = 0; i < 5; ++i)
            worst_p = std::max(worst_p, std::abs(k.p[map.row_perm[i]] - expected[i]));

        double bound = std::min({2 * l4 + 2 * l5 - 2 * l3, 2 * l3 + 2 * l5 - 2 * l4,
                                 2 * l3 + 2 * l4 - 2 * l5});
        if (std::abs(l2 - bound) < tol::kBoundaryBand) continue;
        bool closed_form = l2 <= bound;
        bool routes = is_cond_negative_definition(l).negative_definite &&
                      is_cond_negative_constraints(table, l) &&
                      is_cond_negative_schoenberg(l, grid);
        if (closed_form != routes)
            return {"q8-condition", false, worst_p, "route verdict disagrees with the closed form"};
        ++checked;
    }
    bool ok = worst_p <= 1e-9 && checked > 100;
    return {"q8-condition", ok, worst_p,
            "Q8 min-of-three threshold and closed-form coefficients (" + std::to_string(checked) +
                " samples)"};
}

// ---------------------------------------------------------------------------
// S4: derivative constraints, closed-form p_i, and polytope sampling.
// ---------------------------------------------------------------------------

// The four derivative forms, in reference irrep order 2..5, evaluated on
// reference-order lengths (l2, l3, l4, l5); these are 24 p_i'(0).
std::array<double, 4> s4_forms(double l2, double l3, double l4, double l5) {
    return {-6 * l2 + 3 * l4 + 6 * l5, 8 * l3 - 6 * l4, 6 * l2 + 3 * l4 - 6 * l5,
            6 * l2 - 8 * l3 - 3 * l4 + 6 * l5};
}

FixtureResult s4_phi(unsigned seed) {
    auto g = build_group("S4");
    auto table = character_table(g, seed);
    auto map = load_paper_order("S4");
    std::mt19937 rng(seed ^ 0x5434u);
    std::uniform_real_distribution<double> unit(0.0, 2.0);

    double worst = 0.0;
    for (int sample = 0; sample < 40; ++sample) {
        double l2 = unit(rng), l3 = unit(rng), l4 = unit(rng), l5 = unit(rng);
        auto l = make_length(g, canonical_length_values(map, {0, l2, l3, l4, l5}));
        auto ph = phi(table, l);
        auto forms = s4_forms(l2, l3, l4, l5);
        for (int i = 0; i < 4; ++i)
            worst = std::max(worst, std::abs(24 * ph.full[map.row_perm[i + 1]] - forms[i]));

        double t = unit(rng);
        double e2 = std::exp(-t * l2), e3 = std::exp(-t * l3), e4 = std::exp(-t * l4),
               e5 = std::exp(-t * l5);
        const double expected[5] = {(1 + 6 * e2 + 8 * e3 + 3 * e4 + 6 * e5) / 24,
                                    (1 + 2 * e2 - e4 - 2 * e5) / 8,
                                    (1 - 4 * e3 + 3 * e4) / 12,
                                    (1 - 2 * e2 - e4 + 2 * e5) / 8,
                                    (1 - 6 * e2 + 8 * e3 + 3 * e4 - 6 * e5) / 24};
        auto k = decompose(table, l, t);
        for (int i = 0; i < 5; ++i)
            worst = std::max(worst, std::abs(k.p[map.row_perm[i]] - expected[i]) * 24);
    }
    return {"s4-phi", worst <= 24e-9, worst,
            "S4 derivative constraints and closed-form coefficients (24x scale)"};
}

FixtureResult s4_appendix(unsigned seed, int target_inside, int target_violating) {
    auto g = build_group("S4");
    auto table = character_table(g, seed);
    auto map = load_paper_order("S4");
    std::mt19937 rng(seed ^ 0x5440u);
    std::uniform_real_distribution<double> unit(0.0, 2.0);
    auto grid = default_t_grid();

    // dense small-t scan used to catch the first-order dip of a violated
    // constraint (p_i(t) ~ Phi_i t near zero)
    std::vector<double> small_ts;
    for (double t = std::exp2(-15.0); t <= 2.1; t *= std::exp2(0.125)) small_ts.push_back(t);

    int inside = 0, violating = 0;
    double worst_inside = 0.0;
    for (long attempt = 0; inside < target_inside || violating < target_violating; ++attempt) {
        if (attempt > 400000)
            throw InternalError("internal-inconsistency", "polytope sampling failed to converge");
        double l2 = unit(rng), l3 = unit(rng), l4 = unit(rng), l5 = unit(rng);
        auto forms = s4_forms(l2, l3, l4, l5);
        int negatives = 0;
        bool clear_margins = true;
        for (double f : forms) {
            if (f < 0) ++negatives;
            if (std::abs(f) < 0.2) clear_margins = false;
        }
        auto l = make_length(g, canonical_length_values(map, {0, l2, l3, l4, l5}));

        if (negatives == 0 && inside < target_inside) {
            ++inside;
            for (double t : grid)
                for (double p : decompose(table, l, t).p)
                    worst_inside = std::max(worst_inside, -p);
            if (worst_inside > tol::kEig)
                return {"s4-appendix", false, worst_inside,
                        "a sample inside the polytope produced a negative coefficient"};
        } else if (negatives == 1 && clear_margins && violating < target_violating) {
            ++violating;
            double dip = 0.0;
            for (double t : small_ts)
                for (double p : decompose(table, l, t).p) dip = std::min(dip, p);
            if (dip >= -tol::kEig)
                return {"s4-appendix", false, dip,
                        "a one-constraint violation never went negative on the small-t scan"};
        }
    }
    return {"s4-appendix", true, worst_inside,
            std::to_string(target_inside) + " interior samples stayed nonnegative; " +
                std::to_string(target_violating) + " single violations dipped negative"};
}

// ---------------------------------------------------------------------------
// Cross-cutting fixtures.
// ---------------------------------------------------------------------------

FixtureResult prototype_z2(unsigned seed) {
    auto g = build_group("Z2");
    auto table = character_table(g, seed);
    auto l = make_length(g, {0, 1});

    double worst = 0.0;
    for (double t : {0.25, 1.0, 2.5}) {
        double p = (1 - std::exp(-t)) / 2;
        auto k = decompose(table, l, t);
        worst = std::max({worst, std::abs(k.p[0] - (1 - p)), std::abs(k.p[1] - p)});
        for (int b = 0; b < 2; ++b) {
            auto x = GroupAlgebraElement::basis(g, b);
            auto mixture = GroupAlgebraElement::zero(g);
            mixture.coeffs =
                (1 - p) * x.coeffs + p * apply_sigma(table, 1, x).coeffs;
            worst = std::max(worst,
                             (mixture.coeffs - apply_semigroup(l, t, x).coeffs).norm());
        }
        if (!abelian_probability_check(table, l, t))
            return {"prototype-z2", false, worst, "Z2 coefficients failed the probability check"};
    }
    return {"prototype-z2", worst <= 1e-12, worst,
            "Z2 channel equals the (1-p, p) mixture of identity and sign flip"};
}

FixtureResult sum_rule(unsigned seed) {
    std::mt19937 rng(seed ^ 0x50u);
    std::uniform_real_distribution<double> unit(0.0, 2.0);
    double worst = 0.0;
    for (const char* d : {"S3", "Z6", "Q8", "D4", "S4"}) {
        auto g = build_group(d);
        auto table = character_table(g, seed);
        const auto& cc = g->classes();
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> v(cc.count(), 0.0);
            for (int c = 1; c < cc.count(); ++c) {
                int ic = cc.inverse_class[c];
                if (v[c] == 0.0 && v[ic] == 0.0) v[c] = v[ic] = unit(rng);
            }
            auto l = make_length(g, v);
            for (double t : default_t_grid())
                worst = std::max(worst, decompose(table, l, t).sum_rule_residual);
        }
    }
    return {"sum-rule", worst <= tol::kSumRule, worst,
            "weighted coefficient sums stay at 1 across groups, lengths, and times"};
}

FixtureResult idempotents(unsigned seed) {
    double worst = 0.0;
    for (const char* d : {"S3", "Q8", "S4"}) {
        auto g = build_group(d);
        auto table = character_table(g, seed);
        const int k = table.irrep_count();
        auto total = GroupAlgebraElement::zero(g);
        for (int r = 0; r < k; ++r) {
            total.coeffs += idempotent(table, r).coeffs;
            for (int s = 0; s < k; ++s) {
                auto prod = idempotent(table, r).mul(idempotent(table, s));
                if (r == s) prod.coeffs -= idempotent(table, r).coeffs;
                worst = std::max(worst, prod.coeffs.cwiseAbs().maxCoeff());
            }
        }
        total.coeffs -= GroupAlgebraElement::basis(g, 0).coeffs;
        worst = std::max(worst, total.coeffs.cwiseAbs().maxCoeff());
    }
    return {"idempotents", worst <= tol::kIdempotent, worst,
            "central idempotents multiply orthogonally and resolve the identity"};
}

FixtureResult multiplicities(unsigned seed) {
    // ranks of the character projections, in reference irrep order
    auto check_ranks = [&](const char* name, const std::vector<int>& expected) {
        auto table = character_table(build_group(name), seed);
        auto map = load_paper_order(name);
        auto fam = projection_family(table);
        for (size_t i = 0; i < expected.size(); ++i)
            if (fam.ranks[map.row_perm[i]] != expected[i]) return false;
        return true;
    };
    if (!check_ranks("S3", {1, 4, 1}) || !check_ranks("S4", {1, 9, 4, 9, 1}))
        return {"multiplicities", false, 0.0, "projection ranks missed the squared degrees"};

    // eigenvalue multiplicities of a generic circulant follow the same law;
    // exp(-l) for a random strict symmetric length keeps the matrix hermitian,
    // and a draw is discarded when two irreps land closer than the cluster gap
    std::mt19937 rng(seed ^ 0x33u);
    std::uniform_real_distribution<double> unit(0.2, 1.8);
    for (const char* d : {"S3", "Q8", "S4"}) {
        auto g = build_group(d);
        auto table = character_table(g, seed);
        const auto& cc = g->classes();
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 32)
                return {"multiplicities", false, 0.0,
                        "could not draw a circulant with separated eigenvalues on " +
                            std::string(d)};
            std::vector<double> v(cc.count(), 0.0);
            for (int c = 1; c < cc.count(); ++c) {
                int ic = cc.inverse_class[c];
                if (v[c] == 0.0 && v[ic] == 0.0) v[c] = v[ic] = unit(rng);
            }
            std::vector<cplx> f(cc.count());
            for (int c = 0; c < cc.count(); ++c) f[c] = std::exp(-v[c]);
            auto circ = build_circulant(g, f);
            auto spec = spectral_decompose(circ, table);

            bool separated = true;
            for (size_t r = 0; r < spec.components.size() && separated; ++r)
                for (size_t s = r + 1; s < spec.components.size(); ++s)
                    if (std::abs(spec.components[r].eigenvalue - spec.components[s].eigenvalue) <
                        10 * tol::kClusterGap) {
                        separated = false;
                        break;
                    }
            if (!separated) continue;

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> dense(circ.A, Eigen::EigenvaluesOnly);
            for (const auto& comp : spec.components) {
                int count = 0;
                for (int i = 0; i < g->order(); ++i)
                    if (std::abs(dense.eigenvalues()[i] - comp.eigenvalue.real()) <
                        tol::kClusterGap)
                        ++count;
                if (count != comp.multiplicity)
                    return {"multiplicities", false, static_cast<double>(count),
                            "dense eigenvalue cluster size missed a squared degree on " +
                                std::string(d)};
            }
            break;
        }
    }
    return {"multiplicities", true, 0.0,
            "projection ranks and dense eigenvalue clusters both give squared degrees"};
}

FixtureResult nonexistence(unsigned seed) {
    auto s3 = build_group("S3");
    auto map = load_paper_order("S3");
    auto l = make_length(s3, canonical_length_values(map, {0, 1, std::sqrt(2.0)}));
    auto rep = nonexistence_demo(l, 1.0);

    double expected_sq =
        3 * std::pow(1 - std::exp(-1.0), 2) + 2 * std::pow(1 - std::exp(-std::sqrt(2.0)), 2);
    double worst = std::abs(rep.discrepancy * rep.discrepancy - expected_sq);
    bool ok = rep.obstruction && rep.discrepancy > 0.5 && worst <= 1e-10;

    auto z2 = build_group("Z2");
    auto rep2 = nonexistence_demo(make_length(z2, {0, 1}), 1.0);
    worst = std::max(worst, std::abs(rep2.discrepancy - (1 - std::exp(-1.0))));
    ok = ok && worst <= 1e-10;
    (void)seed;
    return {"nonexistence", ok, worst,
            "drift of the central all-nonidentity sum matches its closed form"};
}

} // namespace

std::string paper_order_data_dir() {
    if (const char* env = std::getenv("GCK_DATA_DIR"); env && *env) return env;
    return GCK_DEFAULT_DATA_DIR;
}

PaperOrderMap load_paper_order(const std::string& group_name) {
    std::string stem;
    for (char c : group_name) stem += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (stem != "s3" && stem != "q8" && stem != "s4")
        throw DomainError("unknown-paper-order",
                          "no reference ordering shipped for " + group_name);

    const std::string path = paper_order_data_dir() + "/" + stem + ".json";
    std::ifstream in(path);
    if (!in)
        throw InternalError("paper-order-corrupt", "cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InternalError("paper-order-corrupt", path + ": " + e.what());
    }

    PaperOrderMap map;
    try {
        map.row_perm = doc.at("row_perm").get<std::vector<int>>();
        map.col_perm = doc.at("col_perm").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw InternalError("paper-order-corrupt", path + ": " + e.what());
    }
    auto is_perm = [](const std::vector<int>& p) {
        std::vector<char> seen(p.size(), 0);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
            seen[v] = 1;
        }
        return !p.empty();
    };
    if (!is_perm(map.row_perm) || !is_perm(map.col_perm) ||
        map.row_perm.size() != map.col_perm.size())
        throw InternalError("paper-order-corrupt", path + ": not a pair of equal-size permutations");
    return map;
}

std::vector<FixtureResult> run_paper_fixtures(unsigned seed, const std::string& only) {
    using Runner = std::function<FixtureResult()>;
    const std::vector<std::pair<std::string, Runner>> registry = {
        {"s3-class-sizes", [&] { return sizes_fixture("s3-class-sizes", kRefS3); }},
        {"q8-class-sizes", [&] { return sizes_fixture("q8-class-sizes", kRefQ8); }},
        {"s4-class-sizes", [&] { return sizes_fixture("s4-class-sizes", kRefS4); }},
        {"s3-table", [&] { return table_fixture("s3-table", kRefS3, seed); }},
        {"q8-table", [&] { return table_fixture("q8-table", kRefQ8, seed); }},
        {"s4-table", [&] { return table_fixture("s4-table", kRefS4, seed); }},
        {"s3-verdicts", [&] { return s3_verdicts(seed); }},
        {"s3-boundary", [&] { return s3_boundary(seed); }},
        {"s3-p-formulas", [&] { return s3_p_formulas(seed); }},
        {"q8-condition", [&] { return q8_condition(seed); }},
        {"s4-phi", [&] { return s4_phi(seed); }},
        {"s4-appendix", [&] { return s4_appendix(seed, 120, 120); }},
        {"prototype-z2", [&] { return prototype_z2(seed); }},
        {"sum-rule", [&] { return sum_rule(seed); }},
        {"idempotents", [&] { return idempotents(seed); }},
        {"multiplicities", [&] { return multiplicities(seed); }},
        {"nonexistence", [&] { return nonexistence(seed); }},
    };

    std::vector<FixtureResult> results;
    bool found = only.empty();
    for (const auto& [name, run] : registry) {
        if (!only.empty() && name != only) continue;
        found = true;
        try {
            results.push_back(run());
        } catch (const Error& e) {
            results.push_back({name, false, 0.0, std::string("error: ") + e.what()});
        }
    }
    if (!found)
        throw DomainError("unknown-fixture", "no fixture named '" + only + "'");
    return results;
}

} // namespace gck
