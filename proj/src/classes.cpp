#include "vanish/classes.hpp"

#include <algorithm>

namespace vanish {

PrimeFactorization centralizer_order_sym(const CycleType& ct) {
    PrimeFactorization order;
    const auto& parts = ct.parts.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t run = 1;
        while (i + run < parts.size() && parts[i + run] == parts[i]) ++run;
        order.multiply_pow(factorize_u64(parts[i]), static_cast<u32>(run));
        order.multiply(factorial_factorization(run));
        i += run;
    }
    return order;
}

PrimeFactorization class_size_sym(const CycleType& ct) {
    PrimeFactorization size = factorial_factorization(ct.degree());
    size.divide_exact(centralizer_order_sym(ct));
    return size;
}

bool is_even(const CycleType& ct) {
    return (ct.degree() - ct.parts.part_count()) % 2 == 0;
}

bool splits_in_alternating(const CycleType& ct) {
    if (!is_even(ct)) {
        throw std::invalid_argument("splits_in_alternating: cycle type is odd");
    }
    const auto& parts = ct.parts.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % 2 == 0) return false;
        if (i > 0 && parts[i] == parts[i - 1]) return false;
    }
    return true;
}

PrimeFactorization class_size_alt(const CycleType& ct) {
    PrimeFactorization size = class_size_sym(ct);
    if (splits_in_alternating(ct)) {
        size.divide_exact(PrimeFactorization::from_sorted_unchecked({{2, 1}}));
    }
    return size;
}

PrimeFactorization element_order(const CycleType& ct) {
    std::vector<PrimeFactorization::Entry> lcm;  // max exponent per prime
    for (u32 part : ct.parts.parts()) {
        for (const auto& [p, e] : factorize_u64(part).entries()) {
            auto it = std::lower_bound(lcm.begin(), lcm.end(), p,
                                       [](const auto& entry, u64 q) { return entry.first < q; });
            if (it != lcm.end() && it->first == p) {
                it->second = std::max(it->second, e);
            } else {
                lcm.insert(it, {p, e});
            }
        }
    }
    return PrimeFactorization::from_sorted_unchecked(std::move(lcm));
}

bool has_prime_power_order(const CycleType& ct) {
    return element_order(ct).distinct_primes() == 1;
}

std::pair<PrimeFactorization, PrimeFactorization> eq31_reference_size(const Eq31Decomposition& d) {
    if (d.p < 3 || d.p % 2 == 0 || !is_prime(d.p)) {
        throw std::invalid_argument("eq31_reference_size: p must be an odd prime");
    }
    if (d.k != 1 && d.k != 2) {
        throw std::invalid_argument("eq31_reference_size: k must be 1 or 2");
    }
    if (d.r >= d.p * d.p || d.n != d.k * d.p * d.p + d.r) {
        throw std::invalid_argument("eq31_reference_size: n != k*p^2 + r with 0 <= r < p^2");
    }
    PrimeFactorization denominator = factorize_u64(d.p);
    denominator.pow(2 * d.k);
    denominator.multiply(factorial_factorization(d.k));
    denominator.multiply(factorial_factorization(d.r));

    PrimeFactorization full = factorial_factorization(d.n);
    full.divide_exact(denominator);
    PrimeFactorization half = full;
    half.divide_exact(PrimeFactorization::from_sorted_unchecked({{2, 1}}));
    return {std::move(full), std::move(half)};
}

std::set<u64> prime_set_of_alternating_order(u64 n) {
    if (n < 3) throw std::invalid_argument("prime_set_of_alternating_order: n must be >= 3");
    std::set<u64> primes;
    for (u64 p : sieve_primes(n)) {
        if (p == 2 && legendre_valuation(n, 2) <= 1) continue;  // n=3: |A_3| is odd
        primes.insert(p);
    }
    return primes;
}

PrimeFactorization product_class_size(std::span<const PrimeFactorization> components) {
    PrimeFactorization product;
    for (const auto& component : components) product.multiply(component);
    return product;
}

}  // namespace vanish
