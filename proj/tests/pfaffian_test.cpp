#include <gtest/gtest.h>

#include "bettiforge/pfaffian.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bettiforge;

namespace {

Poly P(const char* s) { return parse_poly(s); }

AlternatingMatrix three_by_three() {
    return AlternatingMatrix(PolyMatrix{{Poly(), P("a"), P("b")}, {P("-a"), Poly(), P("c")}, {P("-b"), P("-c"), Poly()}});
}

PolyMatrix column(const std::vector<Poly>& v) {
    PolyMatrix c(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
    return c;
}

AlternatingMatrix linear_5x5(std::uint64_t seed) {
    gen::Rng rng(seed);
    return AlternatingMatrix::from_upper(5, [&](std::size_t, std::size_t) {
        return Poly(gen::uniform(rng, -3, 3)) * P("x1") + Poly(gen::uniform(rng, -3, 3)) * P("x2") +
               Poly(gen::uniform(rng, -3, 3)) * P("x3");
    });
}

}  // namespace

TEST(AlternatingMatrix, RejectsNonAlternating) {
    EXPECT_THROW(AlternatingMatrix(PolyMatrix{{P("x"), Poly()}, {Poly(), Poly()}}), std::invalid_argument);
    EXPECT_THROW(AlternatingMatrix(PolyMatrix{{Poly(), P("x")}, {P("x"), Poly()}}), std::invalid_argument);
    EXPECT_THROW(AlternatingMatrix(PolyMatrix(2, 3)), dimension_error);
}

TEST(SignBracket, Values) {
    EXPECT_EQ(sign_bracket(1, 2), 4);
    EXPECT_EQ(sign_bracket(2, 1), 3);
    EXPECT_EQ(sign_bracket(1, 3), 5);
}

TEST(Pfaffian, SmallCases) {
    EXPECT_EQ(pfaffian(AlternatingMatrix()), Poly(1));
    EXPECT_EQ(pfaffian(AlternatingMatrix(PolyMatrix{{Poly(), P("a")}, {P("-a"), Poly()}})), P("a"));
    const auto g = gen::generic_alternating(4);
    EXPECT_EQ(pfaffian(g), P("a1_2*a3_4 - a1_3*a2_4 + a1_4*a2_3"));
}

TEST(Pfaffian, OddSizeThrows) {
    try {
        pfaffian(three_by_three());
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "odd-size pfaffian undefined");
    }
}

TEST(Pfaffian, OracleAgreesOnSmallCases) {
    EXPECT_EQ(oracle::pfaffian_matchings(AlternatingMatrix()), Poly(1));
    for (std::size_t n : {2u, 4u, 6u}) {
        const auto g = gen::generic_alternating(n);
        const Poly pf = pfaffian(g);
        EXPECT_EQ(oracle::pfaffian_matchings(g), pf);
        EXPECT_EQ(pf.size(), oracle::matching_count(n));
    }
}

TEST(PfaffianProperty, SquareIsDeterminant) {
    gen::Rng rng(31);
    for (std::size_t n = 2; n <= 8; n += 2)
        for (int k = 0; k < 20; ++k) {
            const auto m = gen::integer_alternating(rng, n);
            const Poly pf = pfaffian(m);
            ASSERT_EQ(pf * pf, determinant(m.matrix())) << "size " << n;
        }
    const auto g = gen::generic_alternating(4);
    EXPECT_EQ(pfaffian(g).pow(2), determinant(g.matrix()));
}

TEST(PfaffianProperty, MatchesMatchingSum) {
    gen::Rng rng(32);
    for (std::size_t n = 2; n <= 8; n += 2)
        for (int k = 0; k < 40; ++k) {
            const auto m = gen::integer_alternating(rng, n);
            ASSERT_EQ(pfaffian(m), oracle::pfaffian_matchings(m));
        }
}

TEST(DeleteRowsCols, Basics) {
    const auto g = gen::generic_alternating(4);
    EXPECT_EQ(delete_rows_cols(g, {0, 1}).matrix(), g.matrix().submatrix({2, 3}, {2, 3}));
    EXPECT_EQ(delete_rows_cols(g, {}), g);
    const auto f = gen::generic_alternating(5);
    EXPECT_EQ(delete_rows_cols(f, {3, 4}).matrix(), f.matrix().submatrix({0, 1, 2}, {0, 1, 2}));
    EXPECT_THROW(delete_rows_cols(g, {4}), std::out_of_range);
    EXPECT_THROW(delete_rows_cols(g, {1, 1}), std::invalid_argument);
}

TEST(SubmaximalPfaffians, ThreeByThree) {
    const auto m = three_by_three();
    const auto p = submaximal_pfaffians(m);
    EXPECT_EQ(p, (std::vector<Poly>{P("c"), P("-b"), P("a")}));
    EXPECT_TRUE((m.matrix() * column(p)).is_zero());
}

TEST(SubmaximalPfaffians, OneByOneAndEvenSize) {
    EXPECT_EQ(submaximal_pfaffians(AlternatingMatrix(PolyMatrix(1, 1))), std::vector<Poly>{Poly(1)});
    EXPECT_THROW(submaximal_pfaffians(gen::generic_alternating(4)), std::domain_error);
}

TEST(SubmaximalPfaffians, SyzygyForGenericSizes) {
    for (std::size_t n : {3u, 5u, 7u}) {
        const auto g = gen::generic_alternating(n);
        EXPECT_TRUE((g.matrix() * column(submaximal_pfaffians(g))).is_zero()) << n;
    }
    const auto l = linear_5x5(33);
    const auto q = submaximal_pfaffians(l);
    EXPECT_TRUE((l.matrix() * column(q)).is_zero());
    for (const auto& p : q) EXPECT_TRUE(is_homogeneous(p).admits(2));
}

TEST(PfaffianAdjoint, TwoByTwo) {
    const AlternatingMatrix m(PolyMatrix{{Poly(), P("a")}, {P("-a"), Poly()}});
    EXPECT_EQ(pfaffian_adjoint(m).matrix(), (PolyMatrix{{Poly(), Poly(-1)}, {Poly(1), Poly()}}));
    // entries are pfaffians of 0×0 blocks, so even the zero 2×2 matrix has a unit adjoint
    EXPECT_EQ(pfaffian_adjoint(AlternatingMatrix(PolyMatrix(2, 2))).matrix(),
              (PolyMatrix{{Poly(), Poly(-1)}, {Poly(1), Poly()}}));
    EXPECT_TRUE(pfaffian_adjoint(AlternatingMatrix(PolyMatrix(4, 4))).matrix().is_zero());
    EXPECT_THROW(pfaffian_adjoint(three_by_three()), std::domain_error);
}

TEST(PfaffianAdjoint, ContractForGenericSizes) {
    for (std::size_t n : {2u, 4u, 6u}) {
        const auto g = gen::generic_alternating(n);
        const auto adj = pfaffian_adjoint(g).matrix();
        const PolyMatrix expect = PolyMatrix::identity(n).scaled(pfaffian(g));
        EXPECT_EQ(adj * g.matrix(), expect) << n;
        EXPECT_EQ(g.matrix() * adj, expect) << n;
    }
}

TEST(BlockPfaffian, AgreesWithExpansion) {
    for (std::size_t n : {4u, 6u}) {
        const auto g = gen::generic_alternating(n);
        std::vector<std::size_t> top{0, 1}, rest;
        for (std::size_t i = 2; i < n; ++i) rest.push_back(i);
        const PolyMatrix b = g.matrix().submatrix(top, rest);
        const AlternatingMatrix c(g.matrix().submatrix(rest, rest));
        EXPECT_EQ(assemble_block(g(0, 1), b, c), g);
        EXPECT_EQ(block_pfaffian(g(0, 1), b, c), pfaffian(g)) << n;
    }
}

TEST(BlockPfaffian, ZeroLowerBlock) {
    const PolyMatrix b{{P("x"), P("y")}, {P("z"), P("w")}};
    // the a·pf(C) term drops out
    EXPECT_EQ(block_pfaffian(P("a"), b, AlternatingMatrix(PolyMatrix(2, 2))), P("y*z - w*x"));
    EXPECT_THROW(block_pfaffian(P("a"), PolyMatrix(2, 3), AlternatingMatrix(PolyMatrix(2, 2))), dimension_error);
}

TEST(Augment, ThreeByThreeUnitCoefficient) {
    const auto m = three_by_three();
    const auto big = augment(m, {Poly(1), Poly(), Poly()});
    ASSERT_EQ(big.size(), 5u);
    const auto q = submaximal_pfaffians(big);
    EXPECT_TRUE(oracle::equal_up_to_sign(q, {P("c"), P("-b"), P("a"), P("c"), Poly()}));
    // exact form: -(p, Σ a_i p_i, 0)
    EXPECT_EQ(q, (std::vector<Poly>{P("-c"), P("b"), P("-a"), P("-c"), Poly()}));
}

TEST(Augment, ZeroCoefficients) {
    const auto m = three_by_three();
    const auto q = submaximal_pfaffians(augment(m, {Poly(), Poly(), Poly()}));
    EXPECT_TRUE(oracle::equal_up_to_sign(q, {P("c"), P("b"), P("a"), Poly(), Poly()}));
    EXPECT_THROW(augment(m, {Poly()}), dimension_error);
    EXPECT_THROW(augment(gen::generic_alternating(4), {}), std::domain_error);
}

TEST(Augment, LinearFiveByFiveAllOnes) {
    const auto m = linear_5x5(34);
    const auto p = submaximal_pfaffians(m);
    const auto q = submaximal_pfaffians(augment(m, std::vector<Poly>(5, Poly(1))));
    Poly total;
    for (const auto& x : p) total += x;
    EXPECT_EQ(oracle::up_to_sign(q[5]), oracle::up_to_sign(total));
    EXPECT_TRUE(q[6].is_zero());
}

TEST(AugmentProperty, RandomIntegerMatrices) {
    gen::Rng rng(35);
    for (std::size_t n : {3u, 5u})
        for (int k = 0; k < 30; ++k) {
            const auto m = gen::integer_alternating(rng, n);
            std::vector<Poly> a(n);
            for (auto& x : a) x = Poly(gen::uniform(rng, -4, 4));
            auto p = submaximal_pfaffians(m);
            Poly s;
            for (std::size_t i = 0; i < n; ++i) s += a[i] * p[i];
            p.push_back(s);
            p.push_back(Poly());
            ASSERT_TRUE(oracle::equal_up_to_sign(submaximal_pfaffians(augment(m, a)), p));
        }
}

TEST(Congruence, IdentityAndSwap) {
    const auto g = gen::generic_alternating(3);
    EXPECT_EQ(congruence(PolyMatrix::identity(3), g), g);
    const PolyMatrix swap{{Poly(), Poly(1), Poly()}, {Poly(1), Poly(), Poly()}, {Poly(), Poly(), Poly(1)}};
    const auto p = submaximal_pfaffians(g);
    const auto q = submaximal_pfaffians(congruence(swap, g));
    // p = q·A with A the swap, so q = (p2, p1, p3); det A = -1
    EXPECT_EQ(q, (std::vector<Poly>{-p[1], -p[0], -p[2]}));
    EXPECT_THROW(congruence(PolyMatrix::identity(2), g), dimension_error);
}

TEST(Congruence, DiagonalScaling) {
    const auto g = gen::generic_alternating(5);
    PolyMatrix a = PolyMatrix::identity(5);
    a(0, 0) = Poly(Rational(3, 2));
    const auto p = submaximal_pfaffians(g);
    const auto q = submaximal_pfaffians(congruence(a, g));
    // q_A = p·adj(A): first entry unchanged, the rest scaled by 3/2
    EXPECT_EQ(q[0], p[0]);
    for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(q[i], p[i].scaled(Rational(3, 2)));
}

TEST(ThreeGeneratorEmbedding, LinearFiveByFive) {
    const auto psi = linear_5x5(36);
    const auto p = submaximal_pfaffians(psi);
    std::vector<std::vector<Poly>> c(3, std::vector<Poly>(5));
    for (std::size_t k = 0; k < 3; ++k) c[k][k] = Poly(1);
    const auto e = three_generator_embedding(psi, c);
    ASSERT_EQ(e.matrix.size(), 11u);
    EXPECT_EQ(e.slots, (std::vector<std::size_t>{5, 7, 9}));
    const auto q = submaximal_pfaffians(e.matrix);
    std::vector<Poly> expect = p;
    for (std::size_t k = 0; k < 3; ++k) {
        expect.push_back(p[k]);
        expect.push_back(Poly());
    }
    for (auto& x : expect) x = e.sign > 0 ? x : -x;
    EXPECT_EQ(q, expect);
}

TEST(ThreeGeneratorEmbedding, CompleteIntersection) {
    const AlternatingMatrix psi(PolyMatrix{{Poly(), P("x1"), P("x2")}, {P("-x1"), Poly(), P("x3")}, {P("-x2"), P("-x3"), Poly()}});
    const auto p = submaximal_pfaffians(psi);
    std::vector<std::vector<Poly>> c(3, std::vector<Poly>(3));
    for (std::size_t k = 0; k < 3; ++k) c[k][k] = Poly(1);
    const auto e = three_generator_embedding(psi, c);
    ASSERT_EQ(e.matrix.size(), 9u);
    const auto q = submaximal_pfaffians(e.matrix);
    EXPECT_TRUE(oracle::equal_up_to_sign(q, {p[0], p[1], p[2], p[0], Poly(), p[1], Poly(), p[2], Poly()}));
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(q[e.slots[k]], e.sign > 0 ? p[k] : -p[k]);
}

TEST(ThreeGeneratorEmbedding, ZeroCoefficients) {
    const auto psi = three_by_three();
    const auto e = three_generator_embedding(psi, std::vector<std::vector<Poly>>(3, std::vector<Poly>(3)));
    const auto q = submaximal_pfaffians(e.matrix);
    EXPECT_TRUE(oracle::equal_up_to_sign(q, {P("c"), P("b"), P("a"), Poly(), Poly(), Poly(), Poly(), Poly(), Poly()}));
}
