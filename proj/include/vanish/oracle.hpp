#pragma once

#include <string>
#include <vector>

#include "vanish/classes.hpp"

namespace vanish::oracle {

// A conjugacy class found by explicit orbit enumeration. Alternating
// classes that split carry a +/- tag (ordered by smallest representative).
struct BruteClass {
    Partition cycle_type;
    char split_tag = ' ';
    u64 size = 0;

    std::string label() const;
};

// Conjugacy classes of S_n (or A_n) by conjugation-orbit BFS over every
// element; independent of the centralizer formulas it validates. Capped
// at n = 8.
std::vector<BruteClass> brute_force_classes(u32 n, bool alternating);

// Builds the full character table via mn_value and checks row/column
// orthogonality (class sizes from brute force) plus degree consistency
// with the hook-length formula. Capped at n = 8.
CheckOutcome validate_character_table(u32 n);

}  // namespace vanish::oracle
