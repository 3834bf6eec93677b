#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "qcount/class_count.hpp"
#include "support/oracles.hpp"

using namespace qcount;

TEST(HValue, TwelveColumns) {
    EXPECT_EQ(h_value(12, 1), 1);
    EXPECT_EQ(h_value(12, 2), 2);
    EXPECT_EQ(h_value(12, 3), 10);
    EXPECT_EQ(h_value(12, 4), 39);
    EXPECT_EQ(h_value(12, 6), 628);
    EXPECT_EQ(h_value(12, 12), 3326054);
}

TEST(HValue, OrderTwoTopWeightIsZero) {
    // |Q_2| = 1 forces h(2,2) = (1 - tau(2,2,1)) / 2 = 0.
    EXPECT_EQ(h_value(2, 2), 0);
    EXPECT_EQ(h_value(1, 1), 1);
}


TEST(HValue, RejectsNonDivisor) {
    EXPECT_THROW(h_value(12, 5), std::invalid_argument);
    EXPECT_THROW(h_value(12, 0), std::invalid_argument);
    EXPECT_THROW(h_value(0, 1), std::invalid_argument);
}

TEST(HValue, ExactAndBoundedUpTo200) {
    for (Int n = 1; n <= 200; ++n) {
        LevelWeights weights(n);
        for (Int k : divisors(n)) ASSERT_GE(weights.at(k), 0) << n << ' ' << k;  // throws if inexact
        BigCount factorial = 1;
        for (Int i = 2; i < n; ++i) factorial *= i;
        ASSERT_LE(weights.at(n), factorial);
        if (n >= 4) ASSERT_GT(weights.at(n), 0) << n;
    }
    // The top weight also vanishes at n = 3: (2! * 1 - tau(3,3,1)) / 3 = (2 - 2) / 3.
    EXPECT_EQ(h_value(3, 3), 0);
}

TEST(HValue, MemoOrderDoesNotMatter) {
    std::mt19937_64 engine(2024);
    for (Int n : {12, 36, 60, 72, 120, 180}) {
        auto order = divisors(n);
        LevelWeights ascending(n);
        std::vector<BigCount> expected;
        for (Int k : order) expected.push_back(ascending.at(k));
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(order.begin(), order.end(), engine);
            LevelWeights shuffled(n);
            for (Int k : order) shuffled.at(k);
            const auto sorted = divisors(n);
            for (std::size_t i = 0; i < sorted.size(); ++i)
                ASSERT_EQ(shuffled.at(sorted[i]), expected[i]) << n << ' ' << sorted[i];
        }
    }
}

TEST(CountMatrix, TwelveReproducesAllRows) {
    const CountMatrix m = count_matrix(12);
    ASSERT_EQ(m.columns.size(), 6u);
    const std::vector<Int> k{1, 2, 3, 4, 6, 12};
    const std::vector<Int> phi{4, 2, 2, 2, 1, 1};
    const std::vector<BigCount> h{1, 2, 10, 39, 628, 3326054};
    const std::vector<BigCount> product{4, 4, 20, 78, 628, 3326054};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(m.columns[i].divisor, k[i]);
        EXPECT_EQ(m.columns[i].phi, phi[i]);
        EXPECT_EQ(m.columns[i].h, h[i]);
        EXPECT_EQ(m.columns[i].product, product[i]);
    }
    EXPECT_EQ(m.total(), 3326788);
}

TEST(CountMatrix, DegenerateOrders) {
    const CountMatrix one = count_matrix(1);
    ASSERT_EQ(one.columns.size(), 1u);
    EXPECT_EQ(one.columns[0].divisor, 1);
    EXPECT_EQ(one.columns[0].phi, 1);
    EXPECT_EQ(one.columns[0].h, 1);
    EXPECT_EQ(one.columns[0].product, 1);

    const CountMatrix two = count_matrix(2);
    ASSERT_EQ(two.columns.size(), 2u);
    EXPECT_EQ(two.columns[0].phi, 1);
    EXPECT_EQ(two.columns[1].phi, 1);
    EXPECT_EQ(two.total(), 1);

    EXPECT_THROW(count_matrix(0), std::invalid_argument);
}

TEST(CountMatrix, ProductIsPhiTimesH) {
    for (Int n = 1; n <= 100; ++n) {
        const CountMatrix m = count_matrix(n);
        ASSERT_EQ(m.columns.size(), divisors(n).size());
        for (const auto& c : m.columns) ASSERT_EQ(c.product, c.h * c.phi);
    }
}

TEST(CountClasses, KnownTable) {
    const auto& table = reference::reference_class_counts();
    for (Int n = 2; n <= 19; ++n) ASSERT_EQ(count_classes(n), table[n - 2]) << n;
    EXPECT_EQ(count_classes(1), 1);
    EXPECT_THROW(count_classes(0), std::invalid_argument);
}

TEST(CountClasses, BothSummationsAgree) {
    for (Int n = 1; n <= 200; ++n) ASSERT_EQ(count_classes_via_vertices(n), count_classes(n)) << n;
    EXPECT_EQ(count_classes_via_vertices(12), 3326788);
    EXPECT_EQ(count_classes_via_vertices(7), 108);
    EXPECT_EQ(count_classes_via_vertices(1), 1);
}

TEST(CountClasses, AgreesWithBurnside) {
    for (Int n = 1; n <= 200; ++n) ASSERT_EQ(count_classes(n), reference::burnside_class_count(n)) << n;
}

TEST(CountClasses, BeyondTheTable) {
    // Frozen from an independent exact-integer script evaluating the same sum.
    EXPECT_EQ(count_classes(20), BigCount("6082255029733168"));
    EXPECT_EQ(count_classes(24), BigCount("1077167364123615451472"));
    EXPECT_EQ(count_classes(30), BigCount("294725399791323446096710513920"));
    EXPECT_EQ(to_decimal(count_classes(30)), "294725399791323446096710513920");
}
