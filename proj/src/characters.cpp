#include "vanish/characters.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace vanish {

namespace {

// First-column hook lengths ("beta-set"): strictly decreasing, one entry
// per part. Border-strip removals of length L correspond to replacing an
// entry b by b-L when b-L is absent; the leg length is the number of
// entries strictly between them.
std::vector<u32> beta_set(const Partition& p) {
    const auto& parts = p.parts();
    const u32 k = static_cast<u32>(parts.size());
    std::vector<u32> beta(k);
    for (u32 i = 0; i < k; ++i) beta[i] = parts[i] + (k - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<u32> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const u32 k = static_cast<u32>(beta.size());
    std::vector<u32> parts;
    parts.reserve(k);
    for (u32 i = 0; i < k; ++i) {
        u32 part = beta[i] - (k - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

struct MnKey {
    std::vector<u32> shape;
    u32 next_part_index;

    bool operator==(const MnKey&) const = default;
};

struct MnKeyHash {
    std::size_t operator()(const MnKey& k) const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](u64 v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (u32 p : k.shape) mix(p);
        mix(0xffffffffull);
        mix(k.next_part_index);
        return h;
    }
};

class MnEvaluator {
public:
    MnEvaluator(const Partition& lambda, bool use_memo)
        : lambda_(lambda.parts()), use_memo_(use_memo) {}

    i64 eval(const Partition& shape, u32 idx) {
        if (idx == lambda_.size()) return 1;  // shape is empty by cell count
        MnKey key;
        if (use_memo_) {
            key = MnKey{shape.parts(), idx};
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        i64 total = 0;
        for (const auto& removal : rim_hooks(shape, lambda_[idx])) {
            i64 term = eval(removal.remainder, idx + 1);
            if (removal.leg_length % 2 == 1) {
                if (term == std::numeric_limits<i64>::min()) {
                    throw std::overflow_error("mn_value: character value exceeds 64 bits");
                }
                term = -term;
            }
            if (__builtin_add_overflow(total, term, &total)) {
                throw std::overflow_error("mn_value: character value exceeds 64 bits");
            }
        }
        if (use_memo_ && memo_.size() < kMemoCap) memo_.emplace(std::move(key), total);
        return total;
    }

private:
    static constexpr std::size_t kMemoCap = 1u << 20;
    std::vector<u32> lambda_;  // non-increasing, so remaining parts = suffix
    bool use_memo_;
    std::unordered_map<MnKey, i64, MnKeyHash> memo_;
};

i64 mn_value_impl(const Partition& sigma, const Partition& lambda, bool use_memo) {
    if (sigma.sum() != lambda.sum()) {
        throw std::invalid_argument("mn_value: sigma and lambda must partition the same n");
    }
    MnEvaluator evaluator(lambda, use_memo);
    return evaluator.eval(sigma, 0);
}

}  // namespace

std::vector<RimHookRemoval> rim_hooks(const Partition& shape, u32 length) {
    if (length == 0) throw std::invalid_argument("rim_hooks: length must be >= 1");
    const std::vector<u32> beta = beta_set(shape);
    std::vector<RimHookRemoval> out;
    for (u32 i = 0; i < beta.size(); ++i) {
        const u32 b = beta[i];
        if (b < length) continue;
        const u32 target = b - length;
        bool occupied = false;
        u32 leg = 0;
        for (u32 y : beta) {
            if (y == target) occupied = true;
            if (y > target && y < b) ++leg;
        }
        if (occupied) continue;
        std::vector<u32> next = beta;
        next[i] = target;
        out.push_back({partition_from_beta(std::move(next)), leg});
    }
    return out;
}

i64 mn_value(const Partition& sigma, const Partition& lambda) {
    return mn_value_impl(sigma, lambda, /*use_memo=*/true);
}

i64 mn_value_unmemoized(const Partition& sigma, const Partition& lambda) {
    return mn_value_impl(sigma, lambda, /*use_memo=*/false);
}

bool restricts_irreducibly_to_alternating(const Partition& sigma) {
    return !sigma.is_self_conjugate();
}

}  // namespace vanish
