#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "stacktri/partitions.hpp"

using namespace stacktri;

TEST_CASE("enumeration", "[partitions]") {
    auto four = enumerate_partitions(4);
    std::vector<Partition> expected{Partition({1, 1, 1, 1}), Partition({1, 1, 2}), Partition({1, 3}), Partition({2, 2}),
                                    Partition({4})};
    CHECK(four == expected);
    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});
    CHECK(enumerate_partitions(10).size() == 42);
    CHECK_THROWS_AS(Partition({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({}), std::invalid_argument);
}

TEST_CASE("parity", "[partitions]") {
    CHECK(parity(Partition({1, 1, 1, 1})) == Parity::even);
    CHECK(parity(Partition({1, 3})) == Parity::even);
    CHECK(parity(Partition({4})) == Parity::odd);
    CHECK(parity(Partition({2, 2})) == Parity::even);
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n)) CHECK(parity(p) == pi_p(p).parity());
}

TEST_CASE("pi_p", "[partitions]") {
    CHECK(pi_p(Partition({1, 1, 1})) == Permutation::identity(3));
    CHECK(pi_p(Partition({4})).images() == std::vector<int>{2, 3, 4, 1});
    CHECK(pi_p(Partition({1, 3})).images() == std::vector<int>{1, 3, 4, 2});
    CHECK(pi_p(Partition({2, 3})).cycle_count() == 2);
}

TEST_CASE("counts", "[partitions]") {
    struct Row {
        int n;
        std::uint64_t total, even, odd;
    };
    // independent generating-function oracle
    for (auto [n, total, even, odd] : {Row{1, 1, 1, 0}, Row{4, 5, 3, 2}, Row{10, 42, 22, 20}, Row{20, 627, 317, 310},
                                       Row{40, 37338, 18692, 18646}, Row{50, 204226, 102162, 102064},
                                       Row{60, 966467, 483338, 483129}}) {
        auto c = counts(n);
        CHECK(c.total == total);
        CHECK(c.even == even);
        CHECK(c.odd == odd);
    }
    for (int n = 1; n <= 60; ++n) CHECK(partition_count_pentagonal(n) == counts(n).total);
    CHECK(partition_count_pentagonal(100) == 190569292);
    CHECK(partition_count_pentagonal(0) == 1);
}

TEST_CASE("parity balance", "[partitions]") {
    std::uint64_t previous = 1;
    for (int n = 2; n <= 40; ++n) {
        auto c = counts(n);
        CHECK(c.even + c.odd == c.total);
        CHECK(2 * std::min(c.even, c.odd) >= previous);
        previous = c.total;
    }
    auto c = counts(50);
    const double ratio = static_cast<double>(c.even) / static_cast<double>(c.total);
    CHECK(ratio >= 0.45);
    CHECK(ratio <= 0.55);
}

TEST_CASE("the two injections", "[partitions]") {
    for (int n = 1; n <= 20; ++n) {
        std::set<Partition> images_one, images_two;
        for (const auto& p : enumerate_partitions(n)) {
            auto a = prepend_one(p);
            auto b = increment_largest(p);
            CHECK(a.n() == n + 1);
            CHECK(b.n() == n + 1);
            CHECK(parity(a) == parity(p));
            CHECK(parity(b) != parity(p));
            images_one.insert(a);
            images_two.insert(b);
        }
        CHECK(images_one.size() == enumerate_partitions(n).size());
        CHECK(images_two.size() == enumerate_partitions(n).size());
    }
}

TEST_CASE("hardy-ramanujan estimate", "[partitions]") {
    CHECK(hardy_ramanujan_c1 == Catch::Approx(0.14433756).margin(1e-8));
    CHECK(hardy_ramanujan_c2 == Catch::Approx(2.56509966).margin(1e-8));
    auto ratio = [](int n) { return static_cast<double>(partition_count_pentagonal(n)) / hardy_ramanujan(n); };
    CHECK(ratio(20) == Catch::Approx(0.905566).epsilon(1e-5));
    CHECK(ratio(50) == Catch::Approx(0.938580).epsilon(1e-5));
    CHECK(ratio(100) == Catch::Approx(0.956285).epsilon(1e-5));
    CHECK(ratio(20) < ratio(50));
    CHECK(ratio(50) < ratio(100));
    CHECK(ratio(100) < 1.0);
}
