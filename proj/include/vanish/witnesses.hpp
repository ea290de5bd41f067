#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vanish/characters.hpp"
#include "vanish/classes.hpp"

namespace vanish {

struct WitnessCheck {
    std::string name;
    Verdict verdict = Verdict::fail;
    std::string detail;
};

// Everything established about one alternating-group witness element: the
// constructed cycle type, its class size, the certificate partition and
// character value, and per-claim verdicts.
struct WitnessReport {
    u64 n = 0;
    std::optional<Eq31Decomposition> decomposition;  // present for n >= 9
    CycleType cycle_type;
    PrimeFactorization class_size;  // in A_n
    bool split_class = false;
    std::set<u64> required_primes;  // primes dividing |A_n|
    std::set<u64> class_size_primes;
    bool prime_sets_equal = false;
    std::optional<Partition> sigma;
    bool sigma_self_conjugate = false;
    std::optional<i64> mn;
    std::vector<WitnessCheck> checks;

    Verdict overall() const;  // fail > flagged > pass
    const WitnessCheck* check(std::string_view name) const;
};

// Witness cycle type: (4,2,1^{n-6}) for n in {6,7,8}; one or two p^2
// cycles for n >= 9 with p the largest prime whose square fits. The
// certificate partition is attached for n >= 7; its shape depends on the
// (p,k,r) decomposition.
WitnessReport construct_alternating_witness(u64 n);

// Runs every claim against the construction:
//   in_alternating, prime_power_order, primes_cover (and equality),
//   sigma_not_self_conjugate (flagged for the self-conjugate hook case),
//   mn_vanishes, eq31_match (n >= 9).
WitnessReport verify_alternating_witness(u64 n);

// Certificate partition for a decomposition n = k*p^2 + r; exposed
// separately so table rows unreachable from the construction (shadowed by
// a larger prime) stay testable.
Partition certificate_partition(u64 p, u32 k, u64 r);

// One row of the Lie-type divisor tables: admissibility predicate on q
// plus the divisor of |t^S| as a product of polynomial factors, so each
// factor is factorized within 64-bit comfort.
struct LieFamily {
    std::string id;       // e.g. "2B2"
    std::string display;  // e.g. "2B2(q), q=2^(2k+1)>=8"
    std::string formula;  // e.g. "q(q-1)(q-sqrt(2q)+1)"
    u64 min_q = 2;
    std::function<bool(u64)> admits;  // input already a prime power
    std::vector<std::function<u128(u64)>> factors;
};

const std::vector<LieFamily>& lie_families();
const LieFamily* find_lie_family(std::string_view id);
std::vector<u64> admissible_q(const LieFamily& family, u64 q_max);

// Evaluates the divisor at q, factorizes it, and passes iff it has at
// least three distinct prime factors.
CheckOutcome lie_divisor_check(const LieFamily& family, u64 q);

// The PSL2(q) trichotomy for prime powers q >= 4 where q-1 is a prime
// power, with the generic two-divisor case first.
enum class Psl2Branch { generic, mersenne, fermat, nine };

const char* to_string(Psl2Branch b);

struct Psl2Classification {
    u64 q = 0;
    Psl2Branch branch = Psl2Branch::generic;
    u32 l = 0;  // q = 2^l (mersenne) or q = 2^(2^l)+1 (fermat)
    PrimeFactorization expression;  // witness class-size expression, factorized
    std::string witness;            // which element realizes it
    // PSL2(4) and PSL2(8) are the excluded groups; q=5 lands on the same
    // group as q=4 through PSL2(5) ~= PSL2(4), so it is an alias, not a
    // third exception.
    bool excluded_group = false;
    u64 canonical_q = 0;
};

Psl2Classification psl2_classify(u64 q);
CheckOutcome psl2_check(u64 q);

// The fixed low-rank records: A6, PSL3(3), PSU3(3), PSp4(3).
struct SpotValue {
    std::string group;
    u64 element_order = 0;
    PrimeFactorization class_size;
};

const std::vector<SpotValue>& builtin_spot_values();
CheckOutcome check_spot_value(const SpotValue& spot);

}  // namespace vanish
