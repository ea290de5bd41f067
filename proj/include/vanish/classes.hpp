#pragma once

#include <set>
#include <span>
#include <utility>

#include "vanish/partitions.hpp"

namespace vanish {

// Cycle type of a permutation: cycle lengths including fixed points as 1s,
// so the parts always sum to the degree n.
struct CycleType {
    Partition parts;

    CycleType() = default;
    explicit CycleType(Partition p) : parts(std::move(p)) {}
    u64 degree() const { return parts.sum(); }
    std::string to_string() const { return parts.to_string(); }

    friend bool operator==(const CycleType&, const CycleType&) = default;
};

// |C_{S_n}(x)| = prod over distinct part values i of i^{m_i} * m_i!.
PrimeFactorization centralizer_order_sym(const CycleType& ct);

// |x^{S_n}| = n! / centralizer, computed exponent-wise.
PrimeFactorization class_size_sym(const CycleType& ct);

bool is_even(const CycleType& ct);

// An even class splits into two alternating classes of half size exactly
// when all cycle lengths are odd and pairwise distinct. Odd input is a
// domain error.
bool splits_in_alternating(const CycleType& ct);

PrimeFactorization class_size_alt(const CycleType& ct);

// lcm of the cycle lengths, as a factorization.
PrimeFactorization element_order(const CycleType& ct);
bool has_prime_power_order(const CycleType& ct);

struct Eq31Decomposition {
    u64 n = 0;
    u64 p = 0;
    u32 k = 0;
    u64 r = 0;
};

// The two candidate alternating class sizes n!/(p^{2k} k! r!) and its
// half, for n = k*p^2 + r with k in {1,2}, 0 <= r < p^2, p an odd prime.
std::pair<PrimeFactorization, PrimeFactorization> eq31_reference_size(const Eq31Decomposition& d);

// Primes dividing |A_n| = n!/2, for n >= 3.
std::set<u64> prime_set_of_alternating_order(u64 n);

// Class size of a tuple in a direct product: exponent-wise sum.
PrimeFactorization product_class_size(std::span<const PrimeFactorization> components);

}  // namespace vanish
