#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vanish/check.hpp"

namespace vanish {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Thrown when an input exceeds the widths or bounds this library supports.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_decimal(u128 v);
// nullopt on empty input, non-digits, or overflow past 128 bits.
std::optional<u128> parse_decimal_u128(std::string_view s);

// Exponent-vector form of a positive integer. Group orders and class
// sizes live exclusively in this representation; they are expanded back
// to an integer only when the product fits 128 bits.
class PrimeFactorization {
public:
    using Entry = std::pair<u64, u32>;  // (prime, exponent)

    PrimeFactorization() = default;  // represents 1
    // Validates: primes strictly increasing and actually prime, exponents >= 1.
    static PrimeFactorization from_entries(std::vector<Entry> entries);
    // Trusted path for algorithms that already guarantee the invariants.
    static PrimeFactorization from_sorted_unchecked(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    std::size_t distinct_primes() const { return entries_.size(); }
    u32 exponent_of(u64 p) const;
    std::set<u64> prime_set() const;

    PrimeFactorization& multiply(const PrimeFactorization& other);
    PrimeFactorization& multiply_pow(const PrimeFactorization& other, u32 k);
    PrimeFactorization& pow(u32 k);
    // Exponent-wise subtraction; throws std::logic_error if any exponent
    // would go negative (a divisibility invariant was violated upstream).
    PrimeFactorization& divide_exact(const PrimeFactorization& other);
    bool divides(const PrimeFactorization& other) const;

    std::optional<u128> value() const;  // nullopt when the product leaves 128 bits
    std::string to_string() const;      // "2^3*5*7"; "1" when empty
    // "280 = 2^3*5*7" when the value fits, otherwise just the factor string.
    std::string describe() const;

    friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

private:
    std::vector<Entry> entries_;
};

bool is_prime(u64 n);  // deterministic Miller-Rabin

// Primes in [2, limit], ascending. Limits beyond the configured sieve
// bound raise resource_error.
std::vector<u64> sieve_primes(u64 limit);

// Canonical factorization. n = 0 is a domain error. Values are width
// limited: after stripping prime factors below 2^16, a cofactor above
// 64 bits cannot be certified, and raises resource_error.
PrimeFactorization factorize(u128 n);
inline PrimeFactorization factorize_u64(u64 n) { return factorize(static_cast<u128>(n)); }

std::size_t distinct_prime_count(const PrimeFactorization& f);

// Exponent of p in n! (Legendre): sum of floor(n / p^i).
u64 legendre_valuation(u64 n, u64 p);

PrimeFactorization factorial_factorization(u64 n);

// Least d >= 1 with a^d = 1 mod p; requires p prime and p not dividing a.
u64 multiplicative_order(u64 a, u64 p);

struct ZsigmondyQuery {
    u64 base = 2;      // >= 2
    u64 exponent = 2;  // >= 2
};

// Smallest prime p with p not dividing base and ord_p(base) == exponent,
// found by scanning the prime divisors of base^exponent - 1. nullopt when
// no such prime exists (the classical exception set).
std::optional<u64> zsigmondy_prime(const ZsigmondyQuery& q);

// Largest prime p with p*p <= n; defined (and odd) for n >= 9.
u64 largest_prime_with_square_below(u64 n);

// With p as above: passes iff p^3 > n and floor(n/p^2) is 1 or 2.
CheckOutcome check_p_square_lemma(u64 n);

// Passes iff some prime lies strictly between x and (6/5)x (Nagura's
// interval); defined for x >= 25.
CheckOutcome check_nagura_interval(u64 x);

// Bulk versions of the two range audits; return the failing inputs
// (expected empty). Used by the CLI so million-element scans do not pay
// per-call sieve costs; agreement with the per-value checks is a test.
std::vector<u64> scan_p_square_lemma(u64 lo, u64 hi);
std::vector<u64> scan_nagura_interval(u64 lo, u64 hi);

bool is_prime_power(u64 q);  // q >= 2 with a single distinct prime factor

}  // namespace vanish
