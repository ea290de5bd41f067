#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vanish/numtheory.hpp"

namespace vanish {

inline constexpr u32 kDefaultPartitionBound = 25;

// Integer partition: positive parts stored non-increasing, trailing 1s
// explicit so equality and conjugation stay structural.
class Partition {
public:
    Partition() = default;                       // the empty partition of 0
    explicit Partition(std::vector<u32> parts);  // reorders, rejects parts <= 0 given as 0

    // Accepts "5,2", "(5,2)", and run syntax "9,1^8".
    static Partition parse(std::string_view text);

    u64 sum() const { return sum_; }  // the n being partitioned
    std::size_t part_count() const { return parts_.size(); }
    const std::vector<u32>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool is_self_conjugate() const;

    // Product of all hook lengths, in factorization space. The character
    // degree n!/hook_product stays exact at any n this library handles.
    PrimeFactorization hook_product() const;
    PrimeFactorization character_degree() const;

    std::string to_string(bool compress_one_runs = true) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<u32> parts_;
    u64 sum_ = 0;
};

// Every partition of n exactly once, reverse-lexicographic: (n) first,
// (1^n) last. n above the bound raises resource_error.
void for_each_partition(u32 n, const std::function<void(const Partition&)>& fn,
                        u32 bound = kDefaultPartitionBound);
std::vector<Partition> partitions_of(u32 n, u32 bound = kDefaultPartitionBound);

}  // namespace vanish
