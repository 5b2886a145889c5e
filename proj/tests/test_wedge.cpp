#include <gtest/gtest.h>

#include <algorithm>

#include <fsl/crystal.hpp>
#include <fsl/verify.hpp>
#include <fsl/wedge.hpp>

using namespace fsl;

namespace
{
WedgeVector w(WedgeIndex idx) { return WedgeVector::basis(std::move(idx)); }
} // namespace

TEST(Wedge, SignTrackingNormalization)
{
    WedgeVector v;
    v.add_unsorted({2, 1}, Rational(3));
    EXPECT_EQ(v.coefficient({1, 2}), Rational(-3));
    v.add_unsorted({1, 2}, Rational(3));
    EXPECT_TRUE(v.is_zero());
    v.add_unsorted({1, 1}, Rational(1));
    EXPECT_TRUE(v.is_zero());
    EXPECT_EQ(WedgeVector::highest(3), w({1, 2, 3}));
}

TEST(WedgeAction, TypeASimpleGenerator)
{
    const WedgeAction a(Family::A, 3);
    EXPECT_EQ(a.dimension(), 4);
    EXPECT_EQ(a.act_simple(2, w({1, 2})), w({1, 3}));
    EXPECT_TRUE(a.act_simple(3, w({1, 2})).is_zero());
    EXPECT_EQ(a.act_simple(1, w({1, 3})), w({2, 3}));
    EXPECT_THROW(a.act_simple(4, w({1})), std::out_of_range);
}

TEST(WedgeAction, TypeCUnfoldedGenerator)
{
    // C_2 on C^4: f_1 = E_{21} + E_{43}, f_2 = E_{32}
    const WedgeAction c(Family::C, 2);
    EXPECT_EQ(c.dimension(), 4);
    EXPECT_EQ(c.act_simple(1, w({1})), w({2}));
    EXPECT_EQ(c.act_simple(1, w({3})), w({4}));
    EXPECT_EQ(c.act_simple(2, w({2})), w({3}));
    WedgeVector expected = w({2, 3});
    expected.add_unsorted({1, 4}, Rational(1));
    EXPECT_EQ(c.act_simple(1, w({1, 3})), expected);
}

TEST(WedgeAction, SquaresVanishInTypeA)
{
    for (int m = 1; m <= 4; ++m)
    {
        const WedgeAction a(Family::A, m);
        for (int i = 1; i <= a.dimension(); ++i)
            for (const auto& idx : a.basis(i))
                for (int j = 1; j <= m; ++j)
                    EXPECT_TRUE(a.act_word({j, j}, w(idx)).is_zero());
    }
}

TEST(WedgeAction, DistantGeneratorsCommuteAsMatrices)
{
    for (auto f : {Family::A, Family::C})
        for (int m = 1; m <= 5; ++m)
        {
            const WedgeAction act(f, m);
            for (int j = 1; j <= m; ++j)
                for (int l = j + 2; l <= m; ++l)
                    for (int i = 1; i <= std::min(act.dimension(), 3); ++i)
                        for (const auto& idx : act.basis(i))
                            EXPECT_EQ(act.act_word({j, l}, w(idx)), act.act_word({l, j}, w(idx)));
        }
}

TEST(Monomial, ActionOfTranslationVector)
{
    const LieType a2(Family::A, 2);
    EXPECT_EQ(monomial_word(reduced_word(a2), {1, 0, 1}), (std::vector< int >{2, 1}));
    EXPECT_EQ(act_monomial(a2, ExponentVector{1, 0, 1}, w({1})), w({3}));
    EXPECT_EQ(act_monomial(a2, ExponentVector{0, 0, 0}, w({1, 2})), w({1, 2}));
}

TEST(Monomial, RepeatedLetterKillsFundamentalWedge)
{
    // word [3,4,5,2,3,1]: exponent 2 at the letter 3 in front
    const LieType a3(Family::A, 3);
    EXPECT_TRUE(act_monomial(a3, ExponentVector{2, 0, 0, 0, 0, 0}, WedgeVector::highest(3)).is_zero());
}

TEST(Sim, Examples)
{
    const WedgeAction a(Family::A, 4);
    EXPECT_EQ(sim_check(a, {1, 2}, {1, 2}, 2), SimResult::Equivalent);
    EXPECT_EQ(sim_check(a, {1, 3}, {3, 1}, 2), SimResult::Equivalent);
    EXPECT_EQ(sim_check(a, {1, 2}, {2, 1}, 1), SimResult::NotEquivalent);
    // the wedge used to separate f_l f_{l+1} from f_{l+1} f_l: e_l is sent to e_{l+2} by one order only
    EXPECT_FALSE(a.act_word({2, 1}, w({1})).is_zero());
    EXPECT_TRUE(a.act_word({1, 2}, w({1})).is_zero());
}

TEST(Sim, MonomialVersion)
{
    const LieType a3(Family::A, 3);
    const auto    x = ExponentVector{1, 0, 0, 0, 0, 0};
    const auto    y = ExponentVector{0, 0, 0, 0, 1, 0};
    // both are a single f_3 (positions 1 and 5 of the word carry the letter 3)
    EXPECT_EQ(sim_check(a3, x, y, 3), SimResult::Equivalent);
    EXPECT_EQ(sim_check(a3, x, ExponentVector{0, 1, 0, 0, 0, 0}, 3), SimResult::NotEquivalent);
}

TEST(Sim, CommutationTableMatchesAdjacency)
{
    const auto rows = comm_sweep(5);
    EXPECT_FALSE(rows.empty());
    for (const auto& r : rows)
        EXPECT_TRUE(r.passed()) << family_char(r.family) << r.rank << " l=" << r.l << " j=" << r.j << " i=" << r.i;
}

TEST(Oracle, NonannihilationOnFundamentalPoints)
{
    for (auto f : {Family::A, Family::C})
        for (int n = 1; n <= 3; ++n)
        {
            const LieType type(f, n);
            for (int i = 1; i <= n; ++i)
            {
                const auto zero = ExponentVector(num_labels(type), 0);
                EXPECT_TRUE(nonannihilation_check(type, i, zero));
                for (const auto& p : fundamental_points(type, i))
                    EXPECT_TRUE(nonannihilation_check(type, i, p)) << type.name() << " i=" << i << " " << to_string(p);
            }
        }
}

TEST(Oracle, SupportOutsideBlockAnnihilates)
{
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
        {
            const LieType type(Family::A, n);
            const auto    T     = degeneration_map(type, DominantWeight::fundamental(n, i));
            const auto    block = restriction_block(n, i);
            std::size_t   tried = 0;
            for (const auto& p : fundamental_points(type, i))
                for (std::size_t k = 0; k < num_labels(type); ++k)
                {
                    if (std::find(block.begin(), block.end(), k) != block.end())
                        continue;
                    auto x = T(p);
                    x[k] += 1;
                    ++tried;
                    EXPECT_FALSE(acts_nonzero(type, x, i)) << "n=" << n << " i=" << i << " " << to_string(x);
                }
            EXPECT_GT(tried, 0U);
        }
}

TEST(Oracle, MinimalityOnFundamentalPoints)
{
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (const auto& p : fundamental_points(LieType(Family::A, n), i))
                EXPECT_TRUE(minimality_check_A(n, i, p)) << "n=" << n << " i=" << i << " " << to_string(p);
}

TEST(Oracle, NonMinimalMonomialIsRejected)
{
    // f_3 taken from position 5 instead of position 1 gives the same wedge e1^e2^e4
    const LieType a3(Family::A, 3);
    const auto    late  = ExponentVector{0, 0, 0, 0, 1, 0};
    const auto    early = ExponentVector{1, 0, 0, 0, 0, 0};
    EXPECT_TRUE(acts_nonzero(a3, late, 2));
    EXPECT_EQ(act_monomial(a3, late, WedgeVector::highest(3)), act_monomial(a3, early, WedgeVector::highest(3)));
    EXPECT_FALSE(is_neglex_minimal_A(3, 2, late));
    EXPECT_TRUE(is_neglex_minimal_A(3, 2, early));
    // a monomial that annihilates is never minimal
    EXPECT_FALSE(is_neglex_minimal_A(3, 2, ExponentVector{0, 0, 1, 0, 0, 0}));
}

TEST(Oracle, StringPointsExamples)
{
    EXPECT_EQ(oracle_string_points_A(1, 1), LatticePointSet(1, {{0}, {1}}));
    EXPECT_EQ(oracle_string_points_A(2, 1), LatticePointSet(3, {{0, 0, 0}, {0, 0, 1}, {1, 0, 1}}));
    EXPECT_EQ(oracle_string_points_A(3, 2).size(), 6U);
}

TEST(Oracle, AgreesWithCrystalUpToRank3)
{
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i)
            EXPECT_EQ(oracle_string_points_A(n, i), string_points(LieType(Family::A, n), DominantWeight::fundamental(n, i)))
                << "n=" << n << " i=" << i;
}

TEST(Unfold, FoldedMonomialsContainTypeASummands)
{
    for (int m = 2; m <= 3; ++m)
    {
        const LieType c(Family::C, m), a(Family::A, 2 * m - 1);
        for (int i = 1; i <= m; ++i)
        {
            const auto Ta = degeneration_map(a, DominantWeight::fundamental(2 * m - 1, i));
            const auto Tc = degeneration_map(c, DominantWeight::fundamental(m, i));
            for (const auto& p : fundamental_points(c, i))
            {
                const auto xa = Ta(embed_vector(p, m));
                EXPECT_EQ(fold_vector(xa, m), Tc(p));
                EXPECT_TRUE(unfold_contains(m, xa, WedgeVector::highest(2 * i - 1)));
            }
        }
    }
}

TEST(Unfold, AllZeroOneVectorsRank2)
{
    const std::size_t N = num_labels(LieType(Family::A, 3));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask)
    {
        ExponentVector a(N, 0);
        for (std::size_t b = 0; b < N; ++b)
            a[b] = mask >> b & 1U;
        for (int i = 1; i <= 2; ++i)
            EXPECT_TRUE(unfold_contains(2, a, WedgeVector::highest(2 * i - 1))) << to_string(a);
    }
}
