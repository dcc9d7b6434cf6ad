#include <gtest/gtest.h>

#include "support/test_support.hpp"

using namespace schubert_lr;
namespace st = schubert_lr::testing;

TEST(Partition, NormalizesTrailingZeros)
{
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
    EXPECT_EQ(Partition({0}).size(), 0);
    EXPECT_EQ(Partition{}.to_string(), "-");
    EXPECT_EQ(Partition({4, 2, 1}).to_string(), "4,2,1");
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
}

TEST(Partition, ColumnsAndContainment)
{
    const Partition p{4, 2, 1};
    EXPECT_EQ(p.size(), 7);
    EXPECT_EQ(p.column(0), 3);
    EXPECT_EQ(p.column(1), 2);
    EXPECT_EQ(p.column(3), 1);
    EXPECT_TRUE(p.contains(Partition{2, 2}));
    EXPECT_FALSE(p.contains(Partition{2, 2, 2}));
}

TEST(Partition, FitsInRectangle)
{
    EXPECT_TRUE(fits_in_rectangle(Partition{2, 1}, 3, 7));
    EXPECT_TRUE(fits_in_rectangle(Partition{4, 2, 1}, 3, 7));
    EXPECT_FALSE(fits_in_rectangle(Partition{5, 1}, 3, 7));
    EXPECT_FALSE(fits_in_rectangle(Partition{1, 1, 1, 1}, 3, 7));
    EXPECT_THROW(fits_in_rectangle(Partition{}, 0, 7), std::invalid_argument);
    EXPECT_THROW(fits_in_rectangle(Partition{}, 7, 7), std::invalid_argument);
}

TEST(Partition, RectangleEnumerationIsLexAndComplete)
{
    const auto all = partitions_in_rectangle(2, 3);
    EXPECT_EQ(all.size(), 10u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    const auto five = partitions_of_size(5, 2, 3);
    EXPECT_EQ(five, (std::vector<Partition>{Partition{3, 2}}));
}

TEST(Permutation, ParseAndPrint)
{
    EXPECT_EQ(Permutation::parse("531246").word(), (std::vector<int>{5, 3, 1, 2, 4, 6}));
    EXPECT_EQ(Permutation::parse("2,1,3").word(), (std::vector<int>{2, 1, 3}));
    const auto big = Permutation::parse("10,1,2,3,4,5,6,7,8,9");
    EXPECT_EQ(big.to_string(), "10,1,2,3,4,5,6,7,8,9");
    EXPECT_THROW(Permutation::parse("1224"), std::invalid_argument);
    EXPECT_THROW(Permutation::parse("10"), std::invalid_argument);
    EXPECT_THROW(Permutation::parse("1,x"), std::invalid_argument);
    EXPECT_THROW(Permutation::parse(""), std::invalid_argument);
}

TEST(Permutation, LengthDualAndCode)
{
    for (int n = 1; n <= 5; ++n) {
        const int top = n * (n - 1) / 2;
        for (const auto& w : all_permutations(n)) {
            EXPECT_EQ(w.dual().dual(), w);
            EXPECT_EQ(w.length() + w.dual().length(), top);
            EXPECT_EQ(w.dual(), Permutation::longest(n).compose(w));
            EXPECT_EQ(Permutation::from_code(w.code()).extended(n), w);
            EXPECT_EQ(w.compose(w.inverse()), Permutation::identity(n));
        }
    }
}

TEST(Permutation, DescentSets)
{
    EXPECT_TRUE(descent_set(Permutation::identity(5)).empty());
    EXPECT_EQ(descent_set(Permutation::parse("1352467")), std::set<int>{3});
    EXPECT_EQ(descent_set(Permutation::longest(4)), (std::set<int>{1, 2, 3}));
}

TEST(Permutation, GrassmannianExamples)
{
    EXPECT_EQ(grassmannian_permutation(3, Partition{2, 1}, 7).to_string(), "1352467");
    EXPECT_EQ(grassmannian_permutation(3, Partition{4, 1}, 7).to_string(), "1372456");
    EXPECT_EQ(grassmannian_permutation(3, Partition{4, 2, 1}, 7).to_string(), "2471356");
    EXPECT_EQ(grassmannian_permutation(3, Partition{}, 7), Permutation::identity(7));
    EXPECT_EQ(shape_of_grassmannian(Permutation::parse("1372456"), 3), (Partition{4, 1}));
    EXPECT_EQ(shape_of_grassmannian(Permutation::identity(4), 2), Partition{});
    EXPECT_EQ(shape_of_grassmannian(Permutation::parse("2471356"), 3), (Partition{4, 2, 1}));
    EXPECT_THROW(grassmannian_permutation(3, Partition{5}, 7), std::invalid_argument);
    EXPECT_THROW(shape_of_grassmannian(Permutation::parse("2143"), 2), std::invalid_argument);
}

TEST(Permutation, GrassmannianRoundTrip)
{
    for (int n = 2; n <= 7; ++n) {
        for (int b = 1; b < n; ++b) {
            for (const auto& lambda : partitions_in_rectangle(b, n - b)) {
                const auto w = grassmannian_permutation(b, lambda, n);
                EXPECT_EQ(shape_of_grassmannian(w, b), lambda);
                EXPECT_EQ(w.length(), lambda.size());
                const auto d = descent_set(w);
                EXPECT_TRUE(d.empty() || d == std::set<int>{b});
            }
        }
    }
}

TEST(Permutation, LongestWithDescentsIn)
{
    EXPECT_EQ(longest_with_descents_in({1, 2, 3}, 4), Permutation::longest(4));
    EXPECT_EQ(longest_with_descents_in({2}, 4).to_string(), "3412");
    EXPECT_EQ(longest_with_descents_in({2, 3, 4}, 6).to_string(), "564312");
    for (int n = 2; n <= 5; ++n) {
        for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
            std::set<int> alpha;
            for (int a = 1; a < n; ++a) {
                if (mask & (1 << (a - 1))) {
                    alpha.insert(a);
                }
            }
            const auto w = longest_with_descents_in(alpha, n);
            EXPECT_EQ(descent_set(w), alpha);
            EXPECT_EQ(w.length(), dimension(alpha, n));
        }
    }
}

TEST(Staircase, RowLengths)
{
    EXPECT_EQ(staircase({2, 3, 5}, 7).rows(), (Partition{5, 5, 4, 2, 2}));
    EXPECT_EQ(staircase({1, 2, 3, 4, 5, 6}, 7).rows(), (Partition{6, 5, 4, 3, 2, 1}));
    EXPECT_EQ(staircase({1, 4, 5}, 7).rows(), (Partition{6, 3, 3, 3, 2}));
    for (int n = 2; n <= 7; ++n) {
        for (int b = 1; b < n; ++b) {
            EXPECT_EQ(staircase({b}, n).rows(), Partition::rectangle(b, n - b));
        }
    }
    EXPECT_THROW(staircase({}, 5), std::invalid_argument);
    EXPECT_THROW(staircase({0, 2}, 5), std::invalid_argument);
    EXPECT_THROW(staircase({5}, 5), std::invalid_argument);
}

TEST(Staircase, RowsAreRightAligned)
{
    const auto s = staircase({2, 3, 5}, 7);
    EXPECT_EQ(s.left_edge(1), 2);
    EXPECT_EQ(s.left_edge(3), 3);
    EXPECT_EQ(s.left_edge(5), 5);
    EXPECT_TRUE(s.contains_box(3, 6));
    EXPECT_FALSE(s.contains_box(3, 2));
    EXPECT_FALSE(s.contains_box(6, 6));
}

TEST(Staircase, ShapesAreNorthwestJustified)
{
    const auto s = staircase({2, 3, 5}, 7);
    EXPECT_TRUE(Shape::is_valid({2, 1, 0}, s));
    EXPECT_TRUE(Shape::is_valid({2, 2, 1}, s));
    // Row 3 starts one column right of row 2, so it may reach one further.
    EXPECT_FALSE(Shape::is_valid({2, 1, 1}, s));
    EXPECT_FALSE(Shape::is_valid({6}, s));
    EXPECT_THROW(Shape(Partition{2, 1, 1}, s), std::invalid_argument);
    EXPECT_EQ(Shape::whole(s).size(), 18);
}

TEST(Staircase, RestrictionToRectangle)
{
    EXPECT_EQ(restrict_shape(Partition{}, 3, 6), Partition{});
    EXPECT_EQ(restrict_shape(Partition{5, 3, 2}, 3, 6), (Partition{3, 2, 2}));
    EXPECT_EQ(restrict_shape(Partition{4, 2}, 3, 6), (Partition{2, 1}));
    // In the complete staircase a shape restricted to the rectangle for b is
    // the Grassmannian shape of the valley permutation with floor b.
    for (int n = 2; n <= 6; ++n) {
        for (int b = 1; b < n; ++b) {
            for (const auto& v : st::all_valleys(n, b)) {
                auto sorted = v.permutation().word();
                std::sort(sorted.begin(), sorted.begin() + b);
                const Permutation g(sorted);
                EXPECT_EQ(restrict_shape(v.mu(), b, n), shape_of_grassmannian(g, b)) << v.permutation();
            }
        }
    }
}

TEST(SkewTableau, AddressingAndReadingWord)
{
    const SkewShape sh(Partition{3, 2, 1}, Partition{2, 1});
    EXPECT_EQ(sh.size(), 3);
    const SkewTableau t(sh, {1, 1, 2});
    EXPECT_EQ(t.at(1, 3), 1);
    EXPECT_EQ(t.at(2, 2), 1);
    EXPECT_EQ(t.at(3, 1), 2);
    EXPECT_EQ(t.reading_word(), (std::vector<int>{1, 1, 2}));
    EXPECT_EQ(t.content(1), 2);
    EXPECT_THROW(SkewTableau(sh, {1, 1}), std::invalid_argument);
    EXPECT_THROW(SkewShape(Partition{1}, Partition{2}), std::invalid_argument);
}

TEST(SkewTableau, LrPredicateExamples)
{
    const SkewShape anti(Partition{3, 2, 1}, Partition{2, 1});
    EXPECT_TRUE(is_lr_tableau(SkewTableau(anti, {1, 1, 2}), Partition{2, 1}));
    EXPECT_TRUE(is_lr_tableau(SkewTableau(anti, {1, 2, 1}), Partition{2, 1}));
    EXPECT_FALSE(is_lr_tableau(SkewTableau(anti, {2, 1, 1}), Partition{2, 1}));
    // Content (1,2) is not a partition, so no filling can match it.
    EXPECT_FALSE(is_lr_tableau(SkewTableau(anti, {1, 2, 2}), Partition{2, 2}));
    EXPECT_FALSE(is_lr_tableau(SkewTableau(anti, {1, 2, 2}), Partition{2, 1}));
    const Partition lambda{3, 2, 2};
    std::vector<int> superstandard;
    for (int r = 1; r <= lambda.num_rows(); ++r) {
        superstandard.insert(superstandard.end(), static_cast<std::size_t>(lambda.row(r - 1)), r);
    }
    EXPECT_TRUE(is_lr_tableau(SkewTableau(SkewShape(lambda, Partition{}), superstandard), lambda));
}

TEST(SkewTableau, LrEnumerationExamples)
{
    const auto two = enumerate_lr_tableaux(SkewShape(Partition{3, 2, 1}, Partition{2, 1}), Partition{2, 1});
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].entries(), (std::vector<int>{1, 1, 2}));
    EXPECT_EQ(two[1].entries(), (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(lr_coefficient(SkewShape(Partition{3, 2, 1}, Partition{1, 1}), Partition{2, 2}), 1);
    EXPECT_EQ(lr_coefficient(SkewShape(Partition{3, 2, 1}, Partition{1, 1}), Partition{3, 1}), 1);
    EXPECT_EQ(lr_coefficient(SkewShape(Partition{3, 2}, Partition{}), Partition{3, 1}), 0);
    EXPECT_EQ(lr_coefficient(SkewShape(Partition{3, 2}, Partition{1}), Partition{3, 2}), 0);
}

TEST(SkewTableau, StraightShapesHaveOnlySuperstandardFillings)
{
    for (int size = 0; size <= 6; ++size) {
        for (const auto& nu : partitions_of_size(size, 4, 4)) {
            for (const auto& lambda : partitions_of_size(size, 4, 4)) {
                const auto found = enumerate_lr_tableaux(SkewShape(nu, Partition{}), lambda);
                EXPECT_EQ(found.size(), nu == lambda ? 1u : 0u) << nu.to_string() << " " << lambda.to_string();
            }
        }
    }
}

TEST(SkewTableau, EnumeratorMatchesNaiveFilter)
{
    // Every skew shape with at most 6 boxes inside a 4x4 square; the
    // acceptance suite goes up to 8.
    int checked = 0;
    for (const auto& outer : partitions_in_rectangle(4, 4)) {
        for (const auto& inner : partitions_in_rectangle(4, 4)) {
            if (!outer.contains(inner) || outer.size() - inner.size() > 6) {
                continue;
            }
            const SkewShape sh(outer, inner);
            for (const auto& lambda : partitions_of_size(sh.size(), 4, 4)) {
                const auto fast = enumerate_lr_tableaux(sh, lambda);
                const auto slow = st::naive_lr_filter(sh, lambda);
                ASSERT_EQ(fast, slow) << sh.to_string() << " content " << lambda.to_string();
                EXPECT_EQ(static_cast<Integer>(fast.size()), st::reference_lr_coefficient(sh, lambda));
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 500);
}

TEST(SkewTableau, VanishesOnSizeMismatchOrNonContainment)
{
    const SkewShape sh(Partition{3, 3}, Partition{1});
    EXPECT_EQ(lr_coefficient(sh, Partition{2, 2}), 0);
    EXPECT_EQ(lr_coefficient(SkewShape(Partition{2, 2}, Partition{}), Partition{3, 1}), 0);
}

TEST(SkewTableau, ProductSymmetry)
{
    // sum over nu of c^{nu/mu}_lambda equals the same sum with lambda and mu
    // exchanged, inside a 3x3 square.
    for (const auto& lambda : partitions_in_rectangle(3, 3)) {
        for (const auto& mu : partitions_in_rectangle(3, 3)) {
            if (lambda.size() > 4 || mu.size() > 4) {
                continue;
            }
            Integer forward = 0;
            Integer backward = 0;
            for (const auto& nu : partitions_of_size(lambda.size() + mu.size(), 3, 3)) {
                if (nu.contains(mu)) {
                    forward += lr_coefficient(SkewShape(nu, mu), lambda);
                }
                if (nu.contains(lambda)) {
                    backward += st::reference_lr_coefficient(SkewShape(nu, lambda), mu);
                }
            }
            EXPECT_EQ(forward, backward) << lambda.to_string() << " * " << mu.to_string();
        }
    }
}

TEST(Integer, CheckedArithmeticThrows)
{
    const Integer big = std::numeric_limits<Integer>::max();
    EXPECT_THROW(checked_add(big, 1), std::overflow_error);
    EXPECT_THROW(checked_mul(big, 2), std::overflow_error);
    EXPECT_THROW(checked_sub(std::numeric_limits<Integer>::min(), 1), std::overflow_error);
    EXPECT_EQ(checked_mul(3, 4), 12);
}
