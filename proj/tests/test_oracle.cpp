#include <doctest.h>

#include <algorithm>
#include <map>

#include "vanish/oracle.hpp"

using namespace vanish;
using oracle::brute_force_classes;
using oracle::validate_character_table;

TEST_SUITE("oracle") {

TEST_CASE("small symmetric groups by direct enumeration") {
    const auto s3 = brute_force_classes(3, false);
    REQUIRE(s3.size() == 3);
    std::map<Partition, u64> sizes;
    for (const auto& cls : s3) sizes[cls.cycle_type] = cls.size;
    CHECK(sizes[Partition({1, 1, 1})] == 1);
    CHECK(sizes[Partition({2, 1})] == 3);
    CHECK(sizes[Partition({3})] == 2);
}

TEST_CASE("A4 has classes of size 1,3,4,4") {
    std::vector<u64> sizes;
    for (const auto& cls : brute_force_classes(4, true)) sizes.push_back(cls.size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<u64>{1, 3, 4, 4});
}

TEST_CASE("the 7-cycles split into two A7 classes of 360") {
    u32 found = 0;
    std::set<char> tags;
    for (const auto& cls : brute_force_classes(7, true)) {
        if (cls.cycle_type == Partition({7})) {
            ++found;
            tags.insert(cls.split_tag);
            CHECK(cls.size == 360);
        }
    }
    CHECK(found == 2);
    CHECK(tags == std::set<char>{'+', '-'});
}

TEST_CASE("orbit sizes agree with the centralizer formulas") {
    for (u32 n = 1; n <= 7; ++n) {
        for (bool alternating : {false, true}) {
            u64 total = 0;
            for (const auto& cls : brute_force_classes(n, alternating)) {
                const CycleType ct(cls.cycle_type);
                const auto formula =
                    (alternating ? class_size_alt(ct) : class_size_sym(ct)).value();
                REQUIRE(formula.has_value());
                CHECK(static_cast<u64>(*formula) == cls.size);
                total += cls.size;
            }
            u64 group_order = 1;
            for (u64 i = 2; i <= n; ++i) group_order *= i;
            if (alternating && n >= 2) group_order /= 2;
            CHECK(total == group_order);
        }
    }
    // degree 8, symmetric side only (40320 elements)
    for (const auto& cls : brute_force_classes(8, false)) {
        const auto formula = class_size_sym(CycleType(cls.cycle_type)).value();
        REQUIRE(formula.has_value());
        CHECK(static_cast<u64>(*formula) == cls.size);
    }
}

TEST_CASE("character tables validate up to n = 8") {
    for (u32 n = 2; n <= 8; ++n) {
        const CheckOutcome out = validate_character_table(n);
        CHECK(out.passed());
    }
    const CheckOutcome seven = validate_character_table(7);
    REQUIRE(seven.find("degree_square_sum"));
    CHECK(*seven.find("degree_square_sum") == "5040");
}

TEST_CASE("the enumeration cap is enforced") {
    CHECK_THROWS_AS(brute_force_classes(9, false), resource_error);
    CHECK_THROWS_AS(validate_character_table(9), resource_error);
}

}  // TEST_SUITE
