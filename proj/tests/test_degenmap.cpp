#include <gtest/gtest.h>

#include <fsl/degenmap.hpp>
#include <fsl/fflv.hpp>

#include "oracles.hpp"

using namespace fsl;

namespace
{
ExponentVector vec(const LieType& type, std::initializer_list< std::pair< RootLabel, std::int64_t > > terms)
{
    const auto     labels = build_labels(type);
    ExponentVector v(labels.size(), 0);
    for (const auto& [l, c] : terms)
        v[label_index(labels, l)] += c;
    return v;
}

IntMatrix negate(IntMatrix m)
{
    for (auto& r : m)
        for (auto& v : r)
            v = -v;
    return m;
}
} // namespace

TEST(Determinant, SmallMatrices)
{
    EXPECT_EQ(determinant({}), 1);
    EXPECT_EQ(determinant({{-1}}), -1);
    EXPECT_EQ(determinant({{2, 1}, {1, 1}}), 1);
    EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
    EXPECT_EQ(determinant({{1, 2}, {2, 4}}), 0);
}

TEST(Matrix, ReferenceA3)
{
    const IntMatrix reference = {{1, 1, 1, 1, 0, 1}, {0, 1, 1, 0, 1, 0}, {0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
    EXPECT_EQ(build_matrix(LieType(Family::A, 3)), negate(reference));
}

TEST(Matrix, ReferenceC2)
{
    const IntMatrix reference = {{1, 1, 0, 1}, {0, 1, 2, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    EXPECT_EQ(build_matrix(LieType(Family::C, 2)), negate(reference));
}

TEST(Matrix, A1) { EXPECT_EQ(build_matrix(LieType(Family::A, 1)), (IntMatrix{{-1}})); }

TEST(Matrix, TypeAMatchesDefinitionOracle)
{
    // column (a,b) has -1 at (a,c) for b <= c <= n and at (c,b) for c < a
    for (int n = 1; n <= 6; ++n)
    {
        const auto labels = oracle::labels(false, n);
        const auto m      = build_matrix(LieType(Family::A, n));
        auto       pos    = [&](int r, int c) {
            return static_cast< std::size_t >(std::find(labels.begin(), labels.end(), oracle::Label{r, c}) - labels.begin());
        };
        for (std::size_t col = 0; col < labels.size(); ++col)
        {
            IntVector expected(labels.size(), 0);
            const auto [a, b] = labels[col];
            for (int c = b; c <= n; ++c)
                expected[pos(a, c)] -= 1;
            for (int c = 1; c < a; ++c)
                expected[pos(c, b)] -= 1;
            for (std::size_t row = 0; row < labels.size(); ++row)
                EXPECT_EQ(m[row][col], expected[row]) << "n=" << n;
        }
    }
}

TEST(Matrix, UnimodularAndTriangularUpToRank10)
{
    for (auto f : {Family::A, Family::C})
        for (int n = 1; n <= 10; ++n)
        {
            const LieType type(f, n);
            const auto&   m   = build_matrix(type);
            const auto    det = determinant(m);
            EXPECT_TRUE(det == 1 || det == -1) << type.name();
            EXPECT_TRUE(is_unit_upper_triangular_in_basis(type, m)) << type.name();
            bool has_two = false;
            for (const auto& r : m)
                for (auto v : r)
                {
                    EXPECT_TRUE(v == 0 || v == -1 || v == -2);
                    has_two |= v == -2;
                }
            EXPECT_EQ(has_two, f == Family::C && n >= 2) << type.name();
        }
}

TEST(Matrix, GateRejectsBadMatrices)
{
    const LieType a2(Family::A, 2);
    EXPECT_THROW(check_degeneration_matrix(a2, {{-1, 0, 0}, {0, -1, 0}, {0, 0, 2}}), GateFailure);
    EXPECT_THROW(check_degeneration_matrix(a2, {{-1, -1, 0}, {-1, -1, 0}, {0, 0, -1}}), GateFailure);
    EXPECT_NO_THROW(check_degeneration_matrix(a2, build_matrix(a2)));
    auto lower = build_matrix(a2);
    EXPECT_TRUE(is_unit_upper_triangular_in_basis(a2, lower));
    lower[2][0] = -1; // below the diagonal in the triangular basis
    EXPECT_FALSE(is_unit_upper_triangular_in_basis(a2, lower));
}

TEST(Translation, ReferenceVectors)
{
    const LieType a3(Family::A, 3), c3(Family::C, 3);
    EXPECT_EQ(build_translation(a3, DominantWeight::fundamental(3, 2)),
              vec(a3, {{{1, 2, false}, 1}, {{2, 2, false}, 1}, {{1, 3, false}, 1}, {{2, 3, false}, 1}}));
    EXPECT_EQ(build_translation(c3, DominantWeight::fundamental(3, 2)),
              vec(c3, {{{1, 2, false}, 1},
                       {{2, 2, false}, 1},
                       {{1, 3, false}, 1},
                       {{2, 3, false}, 1},
                       {{1, 2, true}, 2},
                       {{2, 2, true}, 1},
                       {{1, 1, true}, 1}}));
    EXPECT_EQ(build_translation(c3, DominantWeight::zero(3)), IntVector(9, 0));
}

TEST(Translation, LinearInLambda)
{
    for (auto f : {Family::A, Family::C})
        for (int n = 1; n <= 4; ++n)
        {
            const LieType type(f, n);
            const auto    weights = dominant_weights_up_to(n, 2);
            for (const auto& x : weights)
                for (const auto& y : weights)
                {
                    auto sum = build_translation(type, x);
                    auto ty  = build_translation(type, y);
                    for (std::size_t k = 0; k < sum.size(); ++k)
                        sum[k] += ty[k];
                    EXPECT_EQ(build_translation(type, x + y), sum);
                }
        }
}

TEST(ApplyT, Examples)
{
    const LieType a2(Family::A, 2);
    const auto    w1 = DominantWeight({1, 0});
    EXPECT_EQ(apply_T(a2, w1, {0, 0, 0}), build_translation(a2, w1));
    EXPECT_EQ(apply_T(a2, w1, vec(a2, {{{1, 1, false}, 1}})), (ExponentVector{0, 0, 0}));
    EXPECT_EQ(apply_T(a2, w1, vec(a2, {{{1, 2, false}, 1}})), vec(a2, {{{1, 1, false}, 1}}));
    // a point outside P(omega_1) can leave the nonnegative orthant
    EXPECT_THROW(apply_T(a2, w1, vec(a2, {{{1, 1, false}, 2}})), GateFailure);
}

TEST(ApplyT, NonnegativeOnFundamentalPoints)
{
    for (auto f : {Family::A, Family::C})
        for (int n = 1; n <= 5; ++n)
        {
            const LieType type(f, n);
            for (int i = 1; i <= n; ++i)
                for (const auto& p : fundamental_points(type, i))
                    EXPECT_NO_THROW(apply_T(type, DominantWeight::fundamental(n, i), p));
        }
}

TEST(Fold, Examples)
{
    EXPECT_EQ(fold({1, 2, false}, 3), (RootLabel{1, 2, false}));
    EXPECT_EQ(fold({2, 5, false}, 3), (RootLabel{1, 2, true}));
    EXPECT_EQ(fold({3, 3, false}, 3), (RootLabel{3, 3, false}));
    EXPECT_THROW(fold({1, 6, false}, 3), std::out_of_range);
    EXPECT_EQ(unfold_letter(1, 3), (std::vector< int >{1, 5}));
    EXPECT_EQ(unfold_letter(3, 3), (std::vector< int >{3}));
}

TEST(Fold, EmbedThenFoldIsIdentity)
{
    for (int m = 1; m <= 6; ++m)
    {
        const LieType c(Family::C, m);
        for (const auto& l : build_labels(c))
            EXPECT_EQ(fold(embed_label(l, m), m), l);
        for (const auto& l : build_labels(LieType(Family::A, 2 * m - 1)))
            EXPECT_TRUE(is_valid_label(c, fold(l, m)));
    }
}

TEST(Fold, TranslationVectorsFold)
{
    // reference instance: fold(t_{A_3, omega_2}) = t_{C_2, omega_2}
    EXPECT_EQ(fold_vector(fundamental_translation(LieType(Family::A, 3), 2), 2),
              fundamental_translation(LieType(Family::C, 2), 2));
    for (int m = 1; m <= 5; ++m)
        for (int i = 1; i <= m; ++i)
            EXPECT_EQ(fold_vector(fundamental_translation(LieType(Family::A, 2 * m - 1), i), m),
                      fundamental_translation(LieType(Family::C, m), i))
                << "m=" << m << " i=" << i;
}

TEST(WeightTwist, EmptyAndSinglePair)
{
    EXPECT_FALSE(weight_twist_solve({}).twist.has_value());
    const auto r = weight_twist_solve({{{0, 0}, {0, 0, 0}}});
    ASSERT_TRUE(r.twist.has_value());
    EXPECT_TRUE(r.twist->fits({0, 0}, {0, 0, 0}));
    EXPECT_FALSE(r.twist->unique);
}

TEST(WeightTwist, UniqueFitForA2Omega1)
{
    const LieType a2(Family::A, 2);
    const auto    lambda = DominantWeight({1, 0});
    const auto    T      = degeneration_map(a2, lambda);
    std::vector< std::pair< Weight, Weight > > pairs;
    for (const auto& p : points(a2, lambda))
        pairs.emplace_back(fflv_weight(a2, lambda, p), string_weight(a2, lambda, T(p)));
    ASSERT_EQ(pairs.size(), 3U);
    const auto r = weight_twist_solve(pairs);
    ASSERT_TRUE(r.twist.has_value());
    EXPECT_TRUE(r.twist->unique);
    for (const auto& [mu, nu] : pairs)
    {
        EXPECT_TRUE(r.twist->fits(mu, nu));
        EXPECT_EQ(r.twist->apply_exact(mu), nu);
    }
}

TEST(WeightTwist, InconsistentPairsGiveCounterexample)
{
    // three collinear source points whose images are not collinear
    const auto r = weight_twist_solve({{{0}, {0}}, {{1}, {1}}, {{2}, {5}}});
    EXPECT_FALSE(r.twist.has_value());
    ASSERT_TRUE(r.counterexample.has_value());
}
