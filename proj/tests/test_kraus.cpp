#include "doctest.h"

#include <cmath>
#include <random>

#include "gck/characters.hpp"
#include "gck/errors.hpp"
#include "gck/group.hpp"
#include "gck/kraus.hpp"
#include "gck/lengths.hpp"

using namespace gck;

namespace {

const double kSqrt2 = std::sqrt(2.0);

GroupAlgebraElement random_element(const GroupPtr& g, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto x = GroupAlgebraElement::zero(g);
    for (int i = 0; i < g->order(); ++i) x.coeffs[i] = {unit(rng), unit(rng)};
    return x;
}

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

TEST_CASE("group algebra arithmetic") {
    auto g = build_group("S4");
    std::mt19937 rng(31);

    SUBCASE("basis multiplication mirrors the group law") {
        for (int a = 0; a < g->order(); a += 5)
            for (int b = 0; b < g->order(); b += 7) {
                auto prod = GroupAlgebraElement::basis(g, a).mul(GroupAlgebraElement::basis(g, b));
                for (int c = 0; c < g->order(); ++c)
                    CHECK(prod.coeffs[c] == (c == g->mul(a, b) ? 1.0 : 0.0));
            }
    }
    SUBCASE("star is an anti-linear involution and an anti-homomorphism") {
        auto x = random_element(g, rng);
        auto y = random_element(g, rng);
        CHECK((x.star().star().coeffs - x.coeffs).norm() < 1e-15);
        auto lhs = x.mul(y).star();
        auto rhs = y.star().mul(x.star());
        CHECK((lhs.coeffs - rhs.coeffs).norm() < 1e-12);
    }
    SUBCASE("convolution is associative and unital") {
        auto x = random_element(g, rng);
        auto y = random_element(g, rng);
        auto z = random_element(g, rng);
        CHECK((x.mul(y).mul(z).coeffs - x.mul(y.mul(z)).coeffs).norm() < 1e-12);
        auto e = GroupAlgebraElement::basis(g, g->identity());
        CHECK((e.mul(x).coeffs - x.coeffs).norm() == 0.0);
        CHECK((x.mul(e).coeffs - x.coeffs).norm() == 0.0);
    }
    SUBCASE("the inner product is the vacuum expectation of x* y") {
        auto x = random_element(g, rng);
        auto y = random_element(g, rng);
        auto direct = x.inner(y);
        auto vacuum = x.star().mul(y).coeffs[g->identity()];
        CHECK(std::abs(direct - vacuum) < 1e-12);
        CHECK(x.norm() == doctest::Approx(std::sqrt(x.inner(x).real())).epsilon(1e-12));
    }
    SUBCASE("mixing algebras is rejected") {
        auto other = GroupAlgebraElement::basis(build_group("Q8"), 0);
        CHECK_THROWS_AS(GroupAlgebraElement::basis(g, 0).mul(other), DomainError);
    }
}

TEST_CASE("decompose reproduces the S3 closed forms") {
    auto s3 = build_group("S3");
    auto table = character_table(s3);
    // canonical class order (e, 3-cycles, transpositions); irreps (triv, sign, 2-dim)
    double ltr = 1.0, l3c = 2.0;
    auto l = make_length(s3, {0, l3c, ltr});

    for (double t : {0.05, 0.1, 0.6, 1.7}) {
        auto k = decompose(table, l, t);
        double e2 = std::exp(-t * ltr), e3 = std::exp(-t * l3c);
        CHECK(k.p[0] == doctest::Approx((1 + 3 * e2 + 2 * e3) / 6).epsilon(1e-12));
        CHECK(k.p[1] == doctest::Approx((1 - 3 * e2 + 2 * e3) / 6).epsilon(1e-12));
        CHECK(k.p[2] == doctest::Approx((2 - 2 * e3) / 6).epsilon(1e-12));
        CHECK(k.sum_rule_residual <= 1e-10);
    }

    // frozen oracle value evaluated by hand from the closed form
    auto k = decompose(table, l, 0.1);
    CHECK(k.p[1] == doctest::Approx(-0.012841791).epsilon(1e-7));
}

TEST_CASE("decompose at t = 0 is the identity channel") {
    for (const char* d : {"S3", "Q8", "D4", "Z6"}) {
        auto g = build_group(d);
        auto table = character_table(g);
        std::mt19937 rng(11);
        auto k = decompose(table, make_length(g, random_length_values(*g, rng)), 0.0);
        CAPTURE(d);
        CHECK(k.p[0] == doctest::Approx(1.0).epsilon(1e-12));
        for (size_t i = 1; i < k.p.size(); ++i)
            CHECK(k.p[i] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(k.alpha == table.degrees);
    }
    auto table = character_table(build_group("S3"));
    CHECK_THROWS_AS(decompose(table, word_length_from_cycles(3, 1.0), -0.5), DomainError);
}

TEST_CASE("sum rule holds across a dense t sweep") {
    std::mt19937 rng(17);
    for (const char* d : {"S3", "S4", "Q8", "Z6"}) {
        auto g = build_group(d);
        auto table = character_table(g);
        auto l = make_length(g, random_length_values(*g, rng));
        CAPTURE(d);
        for (double t : default_t_grid()) {
            auto k = decompose(table, l, t);
            double weighted = 0.0;
            for (size_t i = 0; i < k.p.size(); ++i) weighted += k.p[i] * table.degrees[i];
            CHECK(std::abs(weighted - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("is_convex matches the showcase verdicts") {
    auto s3 = build_group("S3");
    auto table = character_table(s3);
    CHECK(is_convex(table, make_length(s3, {0, kSqrt2, 1})));
    CHECK_FALSE(is_convex(table, make_length(s3, {0, 2, 1})));

    auto s4 = build_group("S4");
    auto t4 = character_table(s4);
    // an interior point of the four-constraint polytope
    CHECK(is_convex(t4, make_length(s4, {0, 1.0, 1.0, 0.5, 0.75})));
}

TEST_CASE("apply_semigroup fundamentals") {
    auto g = build_group("Q8");
    auto l = make_length(g, {0, 1.5, 0.5, 0.25, 1.0});
    std::mt19937 rng(3);
    auto x = random_element(g, rng);

    auto still = apply_semigroup(l, 0.0, x);
    CHECK((still.coeffs - x.coeffs).norm() == 0.0);

    auto e = GroupAlgebraElement::basis(g, 0);
    CHECK((apply_semigroup(l, 4.2, e).coeffs - e.coeffs).norm() == 0.0);

    auto ab = apply_semigroup(l, 0.4, apply_semigroup(l, 0.35, x));
    auto once = apply_semigroup(l, 0.75, x);
    CHECK((ab.coeffs - once.coeffs).norm() < 1e-12);

    // trace (coefficient at the identity) is preserved
    CHECK(std::abs(apply_semigroup(l, 2.0, x).coeffs[0] - x.coeffs[0]) == 0.0);
}

TEST_CASE("apply_sigma fundamentals") {
    auto g = build_group("S3");
    auto table = character_table(g);
    std::mt19937 rng(13);
    auto x = random_element(g, rng);

    // the computed trivial character is all ones up to solver noise
    auto same = apply_sigma(table, 0, x);
    CHECK((same.coeffs - x.coeffs).norm() < 1e-12);
    CHECK_THROWS_AS(apply_sigma(table, 3, x), DomainError);
}

TEST_CASE("the Z2 channel is the classic two-point mixture") {
    auto z2 = build_group("Z2");
    auto table = character_table(z2);
    auto l = make_length(z2, {0, 1});
    std::mt19937 rng(23);
    auto x = random_element(z2, rng);

    for (double t : {0.1, 0.9, 3.0}) {
        double p = (1 - std::exp(-t)) / 2;
        auto mixed = GroupAlgebraElement::zero(z2);
        mixed.coeffs = (1 - p) * x.coeffs + p * apply_sigma(table, 1, x).coeffs;
        auto evolved = apply_semigroup(l, t, x);
        CHECK((mixed.coeffs - evolved.coeffs).norm() < 1e-12);

        auto k = decompose(table, l, t);
        CHECK(k.p[0] == doctest::Approx(1 - p).epsilon(1e-12));
        CHECK(k.p[1] == doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("reconstruction: the weighted sigma sum is the semigroup") {
    std::mt19937 rng(41);
    for (const char* d : {"S3", "Z6", "Q8", "D4", "S4"}) {
        auto g = build_group(d);
        auto table = character_table(g);
        CAPTURE(d);
        for (int trial = 0; trial < 3; ++trial) {
            auto l = make_length(g, random_length_values(*g, rng));
            double t = 0.2 + 0.5 * trial;
            auto k = decompose(table, l, t);
            for (int b = 0; b < g->order(); ++b) {
                auto x = GroupAlgebraElement::basis(g, b);
                auto lhs = GroupAlgebraElement::zero(g);
                for (int r = 0; r < table.irrep_count(); ++r)
                    lhs.coeffs += k.p[r] * apply_sigma(table, r, x).coeffs;
                auto rhs = apply_semigroup(l, t, x);
                CHECK((lhs.coeffs - rhs.coeffs).norm() <= 1e-10);
            }
        }
    }
}

TEST_CASE("convolution identity through the fusion coefficients") {
    SUBCASE("degenerate at t1 = t2 = 0") {
        auto table = character_table(build_group("S3"));
        CHECK(convolution_check(table, word_length_from_cycles(3, 0.5), 0, 0) <= 1e-12);
    }
    SUBCASE("S3 showcase values") {
        auto s3 = build_group("S3");
        auto table = character_table(s3);
        CHECK(convolution_check(table, make_length(s3, {0, kSqrt2, 1}), 0.3, 0.7) < 1e-10);
    }
    SUBCASE("random lengths and times on Q8") {
        auto q8 = build_group("Q8");
        auto table = character_table(q8);
        std::mt19937 rng(57);
        std::uniform_real_distribution<double> tdist(0.0, 2.0);
        for (int trial = 0; trial < 30; ++trial) {
            auto l = make_length(q8, random_length_values(*q8, rng));
            CHECK(convolution_check(table, l, tdist(rng), tdist(rng)) <= 1e-9);
        }
    }
}

TEST_CASE("central idempotents") {
    for (const char* d : {"S3", "Q8", "S4"}) {
        auto g = build_group(d);
        auto table = character_table(g);
        CAPTURE(d);
        const int k = table.irrep_count();

        auto total = GroupAlgebraElement::zero(g);
        for (int r = 0; r < k; ++r) total.coeffs += idempotent(table, r).coeffs;
        auto unit = GroupAlgebraElement::basis(g, g->identity());
        CHECK((total.coeffs - unit.coeffs).norm() <= 1e-10);

        for (int r = 0; r < k; ++r)
            for (int s = 0; s < k; ++s) {
                auto prod = idempotent(table, r).mul(idempotent(table, s));
                auto target = (r == s) ? idempotent(table, r) : GroupAlgebraElement::zero(g);
                CHECK((prod.coeffs - target.coeffs).norm() <= 1e-10);
            }
    }

    auto table = character_table(build_group("S3"));
    auto e0 = idempotent(table, 0);
    for (int x = 0; x < 6; ++x) CHECK(std::abs(e0.coeffs[x] - 1.0 / 6) < 1e-12);
}

TEST_CASE("the obstruction demonstration") {
    auto s3 = build_group("S3");
    auto l = make_length(s3, {0, kSqrt2, 1});

    SUBCASE("S3 showcase value") {
        auto rep = nonexistence_demo(l, 1.0);
        CHECK(rep.obstruction);
        CHECK(rep.discrepancy > 0.5);
        double expected_sq = 2 * std::pow(1 - std::exp(-kSqrt2), 2) +
                             3 * std::pow(1 - std::exp(-1.0), 2);
        CHECK(rep.discrepancy == doctest::Approx(std::sqrt(expected_sq)).epsilon(1e-12));
        CHECK(rep.closed_form == doctest::Approx(rep.discrepancy).epsilon(1e-12));
    }
    SUBCASE("Z2 single-coefficient case") {
        auto z2 = build_group("Z2");
        auto rep = nonexistence_demo(make_length(z2, {0, 1}), 1.0);
        CHECK(rep.discrepancy == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-12));
    }
    SUBCASE("t = 0 sits on the boundary with zero drift") {
        auto rep = nonexistence_demo(l, 0.0);
        CHECK(rep.discrepancy == 0.0);
        CHECK_FALSE(rep.obstruction);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(nonexistence_demo(make_length(s3, {0, 0, 1}), 1.0), DomainError);
        auto z1 = build_group("Z1");
        CHECK_THROWS_AS(nonexistence_demo(make_length(z1, {0}), 1.0), DomainError);
        CHECK_THROWS_AS(nonexistence_demo(l, -1.0), DomainError);
    }
}

TEST_CASE("abelian probability verdicts") {
    SUBCASE("Z2 is always a two-point distribution") {
        auto z2 = build_group("Z2");
        auto table = character_table(z2);
        auto l = make_length(z2, {0, 1});
        for (double t : {0.0, 0.3, 1.0, 5.0}) CHECK(abelian_probability_check(table, l, t));
    }
    SUBCASE("zero length is the point mass at the trivial character") {
        auto z6 = build_group("Z6");
        auto table = character_table(z6);
        auto l = make_length(z6, {0, 0, 0, 0, 0, 0});
        CHECK(abelian_probability_check(table, l, 2.0));
        auto k = decompose(table, l, 2.0);
        CHECK(k.p[0] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("a length violating conditional negativity loses positivity") {
        auto z4 = build_group("Z4");
        auto table = character_table(z4);
        // canonical classes (0, 1, 2, 3) with 1 and 3 mutually inverse;
        // condition for conditional negativity is l(2) <= 2 l(1)
        auto bad = make_length(z4, {0, 0.1, 1.0, 0.1});
        CHECK_FALSE(abelian_probability_check(table, bad, 1.0));
        auto good = make_length(z4, {0, 0.6, 1.0, 0.6});
        CHECK(abelian_probability_check(table, good, 1.0));
    }
    SUBCASE("nonabelian groups are rejected") {
        auto s3 = build_group("S3");
        auto table = character_table(s3);
        CHECK_THROWS_AS(abelian_probability_check(table, word_length_from_cycles(3, 0.5), 1.0),
                        DomainError);
    }
}

TEST_CASE("derivative of p at zero converges to phi at first order") {
    std::mt19937 rng(71);
    for (const char* d : {"S3", "Q8", "D4"}) {
        auto g = build_group(d);
        auto table = character_table(g);
        CAPTURE(d);
        for (int trial = 0; trial < 5; ++trial) {
            auto l = make_length(g, random_length_values(*g, rng));
            auto ph = phi(table, l);
            double lnorm = 0.0;
            for (double v : l.values) lnorm += v * v;
            lnorm = std::sqrt(lnorm);
            for (double h : {1e-3, 1e-4, 1e-5}) {
                auto k = decompose(table, l, h);
                for (int i = 0; i < table.irrep_count(); ++i) {
                    double fd = (k.p[i] - (i == 0 ? 1.0 : 0.0)) / h;
                    CHECK(std::abs(fd - ph.full[i]) <= 10 * h * lnorm + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("stability: positivity on the small-t prefix extends to the full grid") {
    std::mt19937 rng(83);
    auto grid = default_t_grid();
    for (const char* d : {"S3", "Q8", "S4"}) {
        auto g = build_group(d);
        auto table = character_table(g);
        CAPTURE(d);
        int found = 0;
        while (found < 10) {
            auto l = make_length(g, random_length_values(*g, rng));
            if (!is_cond_negative_constraints(table, l)) continue;
            ++found;
            bool small_ok = true, full_ok = true;
            for (double t : grid) {
                for (double p : decompose(table, l, t).p) {
                    if (p < -1e-9) {
                        if (t <= std::exp2(-4.0)) small_ok = false;
                        full_ok = false;
                    }
                }
            }
            CHECK(small_ok);
            CHECK((small_ok ? full_ok : true));
        }
    }
}
