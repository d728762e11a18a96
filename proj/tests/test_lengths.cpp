#include "doctest.h"

#include <cmath>
#include <random>

#include "gck/characters.hpp"
#include "gck/errors.hpp"
#include "gck/group.hpp"
#include "gck/lengths.hpp"

using namespace gck;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Per-class values in canonical class order for a random valid length.
std::vector<double> random_length_values(const FiniteGroup& g, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 2.0);
    const auto& cc = g.classes();
    std::vector<double> v(cc.count(), 0.0);
    for (int c = 1; c < cc.count(); ++c) {
        int ic = cc.inverse_class[c];
        if (v[c] == 0.0 && v[ic] == 0.0) v[c] = v[ic] = unit(rng);
    }
    v[0] = 0.0;
    return v;
}

} // namespace

TEST_CASE("make_length validates its input") {
    auto s3 = build_group("S3");
    CHECK_NOTHROW(make_length(s3, {0, kSqrt2, 1}));
    CHECK(make_length(s3, {0, kSqrt2, 1}).strict);
    CHECK_FALSE(make_length(s3, {0, 0, 1}).strict);
    CHECK_FALSE(make_length(s3, {0, 0, 0}).strict);

    auto code_of = [&](const GroupPtr& g, const std::vector<double>& v) {
        try {
            make_length(g, v);
        } catch (const Error& e) {
            return e.code();
        }
        return std::string("no-error");
    };
    CHECK(code_of(s3, {0, 1}) == "length-arity-mismatch");
    CHECK(code_of(s3, {1, 1, 2}) == "nonzero-at-identity");
    CHECK(code_of(s3, {0, -1, 2}) == "negative-value");

    // Z3 has {w} and {w^2} as mutually inverse singleton classes.
    auto z3 = build_group("Z3");
    CHECK(code_of(z3, {0, 1, 2}) == "inversion-asymmetric");
    CHECK_NOTHROW(make_length(z3, {0, 1.5, 1.5}));
}

TEST_CASE("word lengths per cycle count") {
    SUBCASE("S3 exponent 1") {
        auto l = word_length_from_cycles(3, 1.0);
        CHECK(l.values == std::vector<double>{0, 2, 1}); // classes: e, 3-cycles, transpositions
    }
    SUBCASE("S3 exponent 1/2") {
        auto l = word_length_from_cycles(3, 0.5);
        CHECK(l.values[0] == 0.0);
        CHECK(l.values[1] == doctest::Approx(kSqrt2).epsilon(1e-12));
        CHECK(l.values[2] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("S4 exponent 1") {
        auto l = word_length_from_cycles(4, 1.0);
        // classes: e, double-transpositions, transpositions, 4-cycles, 3-cycles
        CHECK(l.values == std::vector<double>{0, 2, 1, 3, 2});
    }
    SUBCASE("bad exponent") {
        CHECK_THROWS_AS(word_length_from_cycles(3, 0.0), DomainError);
    }
}

TEST_CASE("the S3 showcase verdicts agree on all three routes") {
    auto s3 = build_group("S3");
    auto table = character_table(s3);
    auto grid = default_t_grid();

    SUBCASE("sqrt word length is conditionally negative definite") {
        auto l = word_length_from_cycles(3, 0.5);
        CHECK(is_cond_negative_definition(l).negative_definite);
        CHECK(is_cond_negative_constraints(table, l));
        CHECK(is_cond_negative_schoenberg(l, grid));
    }
    SUBCASE("plain word length is not") {
        auto l = word_length_from_cycles(3, 1.0);
        auto verdict = is_cond_negative_definition(l);
        CHECK_FALSE(verdict.negative_definite);
        CHECK_FALSE(is_cond_negative_constraints(table, l));
        CHECK_FALSE(is_cond_negative_schoenberg(l, grid));

        // the witness really violates the definition
        REQUIRE(verdict.witness.size() == 6);
        CHECK(std::abs(verdict.witness.sum()) < 1e-9);
        double form = 0.0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                form += verdict.witness[i] * verdict.witness[j] *
                        l.at_element(s3->mul(s3->inv(i), j));
        CHECK(form > 1e-9);
    }
}

TEST_CASE("schoenberg kernel basics") {
    auto l = word_length_from_cycles(3, 0.5);
    auto K = schoenberg_kernel(l, 1.0);
    REQUIRE(K.rows() == 6);
    CHECK((K.diagonal().array() - 1.0).abs().maxCoeff() == 0.0);
    CHECK((K - K.transpose()).cwiseAbs().maxCoeff() < 1e-15);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-9);

    CHECK_THROWS_AS(schoenberg_kernel(l, 0.0), DomainError);
    CHECK_THROWS_AS(schoenberg_kernel(l, -1.0), DomainError);
}

TEST_CASE("the default t grid spans [2^-8, 2^3] with 25 points") {
    auto grid = default_t_grid();
    REQUIRE(grid.size() == 25);
    CHECK(grid.front() == doctest::Approx(std::exp2(-8.0)).epsilon(1e-12));
    CHECK(grid.back() == doctest::Approx(std::exp2(3.0)).epsilon(1e-12));
    for (size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}

TEST_CASE("phi formulas match the closed forms") {
    SUBCASE("S3") {
        auto s3 = build_group("S3");
        auto table = character_table(s3);
        // canonical class order (e, 3-cycles, transpositions)
        double ltr = 1.3, l3c = 0.9;
        auto p = phi(table, make_length(s3, {0, l3c, ltr}));
        REQUIRE(p.full.size() == 3);
        CHECK(p.full[1] == doctest::Approx((3 * ltr - 2 * l3c) / 6).epsilon(1e-12)); // sign irrep
        CHECK(p.full[2] == doctest::Approx(l3c / 3).epsilon(1e-12));                 // 2-dim irrep
        CHECK(p.constrained == std::vector<double>{p.full[1], p.full[2]});
    }
    SUBCASE("S4") {
        auto s4 = build_group("S4");
        auto table = character_table(s4);
        // canonical class order (e, double-transp, transp, 4-cycles, 3-cycles)
        double dt = 0.7, tr = 1.1, c4 = 0.3, c3 = 0.5;
        auto p = phi(table, make_length(s4, {0, dt, tr, c4, c3}));
        REQUIRE(p.full.size() == 5);
        CHECK(24 * p.full[1] == doctest::Approx(6 * tr - 8 * c3 - 3 * dt + 6 * c4).epsilon(1e-9));
        CHECK(24 * p.full[2] == doctest::Approx(8 * c3 - 6 * dt).epsilon(1e-9));
        CHECK(24 * p.full[3] == doctest::Approx(6 * tr + 3 * dt - 6 * c4).epsilon(1e-9));
        CHECK(24 * p.full[4] == doctest::Approx(-6 * tr + 3 * dt + 6 * c4).epsilon(1e-9));
    }
    SUBCASE("zero length maps to the zero vector") {
        auto q8 = build_group("Q8");
        auto table = character_table(q8);
        auto p = phi(table, make_length(q8, {0, 0, 0, 0, 0}));
        for (double v : p.full) CHECK(v == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("phi is linear") {
    auto g = build_group("D4");
    auto table = character_table(g);
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        auto v1 = random_length_values(*g, rng);
        auto v2 = random_length_values(*g, rng);
        double a = 0.7, b = 1.9;
        std::vector<double> mix(v1.size());
        for (size_t i = 0; i < v1.size(); ++i) mix[i] = a * v1[i] + b * v2[i];
        auto p1 = phi(table, make_length(g, v1));
        auto p2 = phi(table, make_length(g, v2));
        auto pm = phi(table, make_length(g, mix));
        for (size_t i = 0; i < pm.full.size(); ++i)
            CHECK(pm.full[i] == doctest::Approx(a * p1.full[i] + b * p2.full[i]).epsilon(1e-9));
    }
}

TEST_CASE("Q8 constraint route reproduces the closed-form threshold") {
    auto q8 = build_group("Q8");
    auto table = character_table(q8);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(0.05, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        // canonical class order (e, -1, ±i, ±j, ±k)
        double li = unit(rng), lj = unit(rng), lk = unit(rng), lm = unit(rng);
        double bound = std::min({2 * lj + 2 * lk - 2 * li, 2 * li + 2 * lk - 2 * lj,
                                 2 * li + 2 * lj - 2 * lk});
        if (std::abs(lm - bound) < 1e-7) continue; // skip the boundary band
        auto l = make_length(q8, {0, lm, li, lj, lk});
        CHECK(is_cond_negative_constraints(table, l) == (lm <= bound));
    }
}

TEST_CASE("three routes agree on random lengths") {
    std::mt19937 rng(2024);
    auto grid = default_t_grid();
    for (const char* d : {"S3", "Z6", "Q8", "D4"}) {
        auto g = build_group(d);
        auto table = character_table(g);
        CAPTURE(d);
        for (int trial = 0; trial < 25; ++trial) {
            auto l = make_length(g, random_length_values(*g, rng));
            auto p = phi(table, l);
            double margin = 1e9;
            for (double v : p.constrained) margin = std::min(margin, std::abs(v));
            if (margin < 1e-7) continue; // boundary band
            bool byDef = is_cond_negative_definition(l).negative_definite;
            bool byPhi = is_cond_negative_constraints(table, l);
            bool byKer = is_cond_negative_schoenberg(l, grid);
            CHECK(byDef == byPhi);
            CHECK(byPhi == byKer);
        }
    }
}

TEST_CASE("positive scaling preserves all three verdicts") {
    auto g = build_group("S3");
    auto table = character_table(g);
    auto grid = default_t_grid();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto v = random_length_values(*g, rng);
        auto scaled = v;
        for (double& x : scaled) x *= 37.5;
        auto l = make_length(g, v);
        auto ls = make_length(g, scaled);
        CHECK(is_cond_negative_definition(l).negative_definite ==
              is_cond_negative_definition(ls).negative_definite);
        CHECK(is_cond_negative_constraints(table, l) == is_cond_negative_constraints(table, ls));
        CHECK(is_cond_negative_schoenberg(l, grid) == is_cond_negative_schoenberg(ls, grid));
    }
}

TEST_CASE("phi_inverse round-trips") {
    std::mt19937 rng(99);
    for (const char* d : {"S3", "Q8", "S4", "Z6"}) {
        auto g = build_group(d);
        auto table = character_table(g);
        CAPTURE(d);
        for (int trial = 0; trial < 20; ++trial) {
            auto l = make_length(g, random_length_values(*g, rng));
            auto x = phi(table, l).constrained;
            auto rec = phi_inverse(table, x);
            for (size_t c = 0; c < l.values.size(); ++c)
                CHECK(rec.values[c] == doctest::Approx(l.values[c]).epsilon(1e-9));
            auto back = phi(table, rec).constrained;
            for (size_t i = 0; i < x.size(); ++i)
                CHECK(back[i] == doctest::Approx(x[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("phi_inverse of the zero vector is the zero length") {
    auto table = character_table(build_group("Q8"));
    auto l = phi_inverse(table, {0, 0, 0, 0});
    for (double v : l.values) CHECK(v == 0.0);
}

TEST_CASE("phi_inverse arity is checked") {
    auto table = character_table(build_group("S3"));
    CHECK_THROWS_AS(phi_inverse(table, {0.1}), DomainError);
    CHECK_THROWS_AS(phi_inverse(table, {0.1, 0.2, 0.3}), DomainError);
}

TEST_CASE("the S4 constraint boundary point recovered by phi_inverse") {
    auto s4 = build_group("S4");
    auto table = character_table(s4);
    // three active constraints, one slack: canonical constrained entries
    auto l = phi_inverse(table, {0.0, 0.0, 0.25, 0.0});
    // canonical classes (e, double-transp, transp, 4-cycles, 3-cycles)
    CHECK(l.values[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(l.values[2] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(l.values[3] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(l.values[4] == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(is_cond_negative_definition(l).negative_definite);
    CHECK(is_cond_negative_constraints(table, l));
}

TEST_CASE("the trivial group is vacuously conditionally negative") {
    auto z1 = build_group("Z1");
    auto table = character_table(z1);
    auto l = make_length(z1, {0});
    CHECK(is_cond_negative_definition(l).negative_definite);
    CHECK(is_cond_negative_constraints(table, l));
    CHECK(is_cond_negative_schoenberg(l, default_t_grid()));
}
