#include <doctest.h>

#include "vanish/partitions.hpp"

using namespace vanish;

namespace {

// Euler's pentagonal-number recurrence, independent of the enumerator.
std::vector<u64> partition_counts(u32 up_to) {
    std::vector<i64> p(up_to + 1, 0);
    p[0] = 1;
    for (u32 n = 1; n <= up_to; ++n) {
        i64 total = 0;
        for (i64 k = 1;; ++k) {
            const i64 g1 = k * (3 * k - 1) / 2;
            const i64 g2 = k * (3 * k + 1) / 2;
            if (g1 > static_cast<i64>(n)) break;
            const i64 sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[n - g1];
            if (g2 <= static_cast<i64>(n)) total += sign * p[n - g2];
        }
        p[n] = total;
    }
    return std::vector<u64>(p.begin(), p.end());
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("construction validates and canonicalizes") {
    const Partition a({5, 2});
    CHECK(a.sum() == 7);
    CHECK(a.parts() == std::vector<u32>{5, 2});
    CHECK(Partition({1}).sum() == 1);
    CHECK(Partition({2, 1, 4}).parts() == std::vector<u32>{4, 2, 1});
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
}

TEST_CASE("parse accepts plain and run syntax") {
    CHECK(Partition::parse("5,2") == Partition({5, 2}));
    CHECK(Partition::parse("(5, 2)") == Partition({5, 2}));
    CHECK(Partition::parse("9,1^8").sum() == 17);
    CHECK(Partition::parse("(2,1^8)").part_count() == 9);
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("()") == Partition{});
    CHECK_THROWS_AS(Partition::parse("5,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("5,2)x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
}

TEST_CASE("conjugate examples") {
    CHECK(Partition({5, 2}).conjugate() == Partition({2, 2, 1, 1, 1}));
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({9, 1}).conjugate() == Partition({2, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
}

TEST_CASE("conjugate is an involution for all n <= 25") {
    for (u32 n = 0; n <= 25; ++n) {
        for_each_partition(n, [](const Partition& p) {
            const Partition conj = p.conjugate();
            CHECK(conj.sum() == p.sum());
            CHECK(conj.conjugate() == p);
            CHECK(p.is_self_conjugate() == (conj == p));
        });
    }
}

TEST_CASE("self-conjugacy examples") {
    CHECK(Partition({2, 1}).is_self_conjugate());
    CHECK(!Partition({5, 2}).is_self_conjugate());
    CHECK(Partition({9, 1, 1, 1, 1, 1, 1, 1, 1}).is_self_conjugate());  // hook (k,1^{k-1})
}

TEST_CASE("hook products and degrees") {
    CHECK(Partition({1}).hook_product().is_one());
    CHECK(Partition({5, 2}).hook_product() == factorize(360));  // hooks 6,5,3,2,1,2,1
    CHECK(Partition({5, 2}).character_degree() == factorize(14));
    CHECK(Partition({6}).hook_product() == factorial_factorization(6));
    CHECK(Partition({6}).character_degree().is_one());
}

TEST_CASE("sum of squared degrees is n! for n <= 8") {
    for (u32 n = 1; n <= 8; ++n) {
        u64 total = 0;
        for_each_partition(n, [&](const Partition& p) {
            const auto degree = p.character_degree().value();
            REQUIRE(degree.has_value());
            total += static_cast<u64>(*degree) * static_cast<u64>(*degree);
        });
        u64 n_factorial = 1;
        for (u64 i = 2; i <= n; ++i) n_factorial *= i;
        CHECK(total == n_factorial);
    }
}

TEST_CASE("enumeration counts match the pentagonal recurrence") {
    const auto expected = partition_counts(25);
    for (u32 n = 0; n <= 25; ++n) {
        CHECK(partitions_of(n).size() == expected[n]);
    }
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("enumeration is reverse-lexicographic without repeats") {
    for (u32 n = 1; n <= 12; ++n) {
        const auto all = partitions_of(n);
        CHECK(all.front() == Partition({n}));
        CHECK(all.back() == Partition(std::vector<u32>(n, 1)));
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            CHECK(all[i].parts() > all[i + 1].parts());
        }
    }
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_AS(partitions_of(26), resource_error);
    CHECK(partitions_of(26, 30).size() == 2436);  // explicit bound opt-in
}

TEST_CASE("rendering compresses 1-runs") {
    CHECK(Partition({9, 1, 1, 1, 1, 1, 1, 1, 1}).to_string() == "(9,1^8)");
    CHECK(Partition({2, 2}).to_string() == "(2,2)");
    CHECK(Partition({2, 1, 1}).to_string() == "(2,1,1)");  // short runs stay explicit
    CHECK(Partition({1, 1, 1}).to_string() == "(1^3)");
    CHECK(Partition({1, 1, 1}).to_string(false) == "(1,1,1)");
    CHECK(Partition{}.to_string() == "()");
    CHECK(Partition::parse(Partition({4, 2, 1, 1, 1, 1}).to_string()) ==
          Partition({4, 2, 1, 1, 1, 1}));
}

}  // TEST_SUITE
