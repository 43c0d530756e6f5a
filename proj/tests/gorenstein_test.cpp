#include <gtest/gtest.h>

#include "bettiforge/gorenstein.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bettiforge;

TEST(GorensteinCheck, Verdicts) {
    auto v = check_gorenstein_betti({2, 2, 2, 2, 2});
    EXPECT_TRUE(v.admissible);
    EXPECT_EQ(v.theta, 5);
    v = check_gorenstein_betti({5, 5, 5, 7, 7, 7, 9});
    EXPECT_TRUE(v.admissible);
    EXPECT_EQ(v.theta, 15);
    v = check_gorenstein_betti({1, 1, 1, 1, 1});
    EXPECT_FALSE(v.admissible);
    EXPECT_EQ(v.failed, GorensteinVerdict::Clause::integrality);
    EXPECT_FALSE(v.theta.has_value());
}

TEST(GorensteinCheck, CardinalityAndInequality) {
    EXPECT_EQ(check_gorenstein_betti({2, 2, 2, 2}).failed, GorensteinVerdict::Clause::cardinality);
    EXPECT_EQ(check_gorenstein_betti({1}).failed, GorensteinVerdict::Clause::cardinality);
    // θ = 2·12/4 = 6 is integral but h2 + h5 = 1 + 5 is not below it
    const auto v = check_gorenstein_betti({1, 1, 2, 3, 5});
    EXPECT_EQ(v.failed, GorensteinVerdict::Clause::gaeta_diesel);
    EXPECT_EQ(v.theta, 6);
}

TEST(GorensteinBetti, ValidatesTheta) {
    EXPECT_NO_THROW(GorensteinBetti({5, 5, 5, 7, 7, 7, 9}, 15));
    EXPECT_THROW(GorensteinBetti({5, 5, 5, 7, 7, 7, 9}, 14), inadmissible_error);
    EXPECT_THROW(GorensteinBetti({1, 1, 1, 1, 1}), inadmissible_error);
    const GorensteinBetti g({2, 2, 2, 2, 2});
    EXPECT_EQ(g.syzygies(), (IntMultiset{3, 3, 3, 3, 3}));
    EXPECT_EQ(g.n(), 2u);
}

TEST(Mci, PartnerSequence) {
    const GorensteinBetti g({5, 5, 5, 7, 7, 7, 9}, 15);
    const auto s = bc_sets(g);
    EXPECT_TRUE(s.b.empty());
    EXPECT_EQ(s.c, std::vector<std::size_t>{4});
    EXPECT_TRUE(s.bbar.empty());
    EXPECT_EQ(mci(g), (MciTriple{5, 5, 7}));
    EXPECT_EQ(mci(g).to_string(), "(5,5,7)");
}

TEST(Mci, FivePointsAndCompleteIntersection) {
    const GorensteinBetti five({2, 2, 2, 2, 2}, 5);
    const auto s = bc_sets(five);
    EXPECT_TRUE(s.b.empty() && s.c.empty() && s.bbar.empty());
    EXPECT_EQ(mci(five), (MciTriple{2, 2, 2}));
    EXPECT_EQ(mci(GorensteinBetti({1, 1, 1}, 3)), (MciTriple{1, 1, 1}));
}

TEST(Mci, NonemptyB) {
    // n = 2, θ = 7; i = 3: d3 + d5 = 7 >= 7 so B = {3}
    const GorensteinBetti g({2, 2, 3, 3, 4}, 7);
    EXPECT_EQ(bc_sets(g).b, std::vector<std::size_t>{3});
    EXPECT_EQ(mci(g), (MciTriple{2, 3, 4}));
}

TEST(Hilbert, FromResolutions) {
    EXPECT_EQ(hilbert_from_resolution({{1, 1, 1}, {2, 2, 2}, {3}}).values, (std::vector<Degree>{1}));
    EXPECT_EQ(hilbert_function(GorensteinBetti({2, 2, 2, 2, 2})).values, (std::vector<Degree>{1, 3, 1}));
    const auto ci = hilbert_from_resolution({{2, 2, 8}, {4, 10, 10}, {12}});
    EXPECT_EQ(ci.length(), 32);
    EXPECT_EQ(ci.values, oracle::ci_hilbert({2, 2, 8}));
    EXPECT_THROW(hilbert_from_resolution({}, 0), std::invalid_argument);
}

TEST(Hilbert, CompleteIntersectionsMatchProductSeries) {
    for (Degree a = 1; a <= 4; ++a)
        for (Degree b = a; b <= 5; ++b)
            for (Degree c = b; c <= 6; ++c) {
                const auto h = hilbert_from_resolution({{a, b, c}, {a + b, a + c, b + c}, {a + b + c}});
                ASSERT_EQ(h.values, oracle::ci_hilbert({a, b, c}));
            }
}

TEST(Mng, RawSecondDifference) {
    HilbertFn h{{1, 3, 1}};
    EXPECT_EQ(h.initial_degree(), 2);
    EXPECT_EQ(mng(h, 3), -1);
    HilbertFn g{{1, 3, 6, 6, 3, 1}};
    EXPECT_EQ(mng(g, 4), 3);
    try {
        mng(h, 2);
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "mng undefined at initial degree");
    }
}

TEST(CancelDuals, FixedPointsAndExcess) {
    const IntMultiset g{2, 2, 2, 2, 2}, s{3, 3, 3, 3, 3};
    EXPECT_EQ(cancel_duals(g, s, 5), std::make_pair(g, s));
    // an unpaired repetition of 4 is removed
    const auto r = cancel_duals({2, 2, 2, 2, 2, 4}, {3, 3, 3, 3, 3, 4}, 5);
    EXPECT_EQ(r.first, g);
    EXPECT_EQ(r.second, s);
    // 4 and 5 - 4 = 1 repeated equally: protected
    const auto q = cancel_duals({1, 2, 2, 2, 2, 2, 4}, {1, 3, 3, 3, 3, 3, 4}, 5);
    EXPECT_EQ(q.first, (IntMultiset{1, 2, 2, 2, 2, 2, 4}));
    EXPECT_THROW(cancel_duals({1, 2}, {1}, 3), std::invalid_argument);
}

TEST(CancelDuals, FivePointsWithAddedPair) {
    // presentation of the five points with an added generator of degree 8 and
    // its partner -3: the pair is dual about θ = 5, so nothing cancels
    const IntMultiset gens{-3, 2, 2, 2, 2, 2, 8}, syz{-3, 3, 3, 3, 3, 3, 8};
    const auto r = cancel_duals(gens, syz, 5);
    EXPECT_EQ(r.first, gens);
    EXPECT_EQ(r.second, syz);
}

TEST(BcDiagnostics, PartnerSequenceClean) {
    EXPECT_TRUE(bc_diagnostics(GorensteinBetti({5, 5, 5, 7, 7, 7, 9})).empty());
    EXPECT_TRUE(bc_diagnostics(GorensteinBetti({2, 2, 2, 2, 2})).empty());
}

TEST(BcDiagnostics, BoundaryIndicesAreOutsideTheClauses) {
    // complete intersection (2,3,5): μ(3) = -Δ²H(3) = 1 with first index 2, below B̄'s range
    const GorensteinBetti ci({2, 3, 5});
    EXPECT_EQ(ci.gens().multiplicity(3), mng(hilbert_function(ci), 3));
    EXPECT_TRUE(bc_diagnostics(ci).empty());
    // μ(7) = -Δ²H(7) - 1 with first index 3, below C's range
    const GorensteinBetti g({6, 6, 7, 7, 8, 8, 9});
    EXPECT_EQ(g.gens().multiplicity(7), mng(hilbert_function(g), 7) - 1);
    EXPECT_TRUE(bc_diagnostics(g).empty());
}

TEST(GorensteinProperty, RandomCorpus) {
    gen::Rng rng(41);
    for (int k = 0; k < 300; ++k) {
        const auto g = gen::admissible_gorenstein(rng);
        ASSERT_EQ(g.syzygies(), affine(g.theta(), Sign::minus, g.gens()));
        const auto h = hilbert_function(g);
        const Degree top = g.theta() - 3;
        ASSERT_EQ(static_cast<Degree>(h.values.size()), top + 1) << g.gens();
        for (Degree t = 0; t <= top; ++t) ASSERT_EQ(h(t), h(top - t)) << g.gens();
        ASSERT_EQ(h(0), 1);
        ASSERT_TRUE(bc_diagnostics(g).empty()) << bc_diagnostics(g).front();
        const auto s = bc_sets(g);
        if (s.b.empty()) {
            for (std::size_t i : s.bbar) ASSERT_EQ(i, g.n() + 2);
        }
    }
}

TEST(GorensteinProperty, MciComponentsAreGeneratorDegrees) {
    gen::Rng rng(42);
    for (int k = 0; k < 200; ++k) {
        const auto g = gen::admissible_gorenstein(rng);
        const auto e = mci(g);
        const auto d = g.gens().values();
        ASSERT_EQ(e.e1, d[0]);
        ASSERT_LE(e.e1, e.e2);
        ASSERT_LE(e.e2, e.e3);
        // the regular sequence sits among the generator degrees
        ASSERT_TRUE(g.gens().contains(e.e2) && g.gens().contains(e.e3));
    }
}
