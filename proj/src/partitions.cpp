#include "vanish/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace vanish {

Partition::Partition(std::vector<u32> parts) : parts_(std::move(parts)) {
    for (u32 p : parts_) {
        if (p == 0) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.rbegin(), parts_.rend());
    sum_ = std::accumulate(parts_.begin(), parts_.end(), u64{0});
}

Partition Partition::parse(std::string_view text) {
    std::vector<u32> parts;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == '(') ++i;
    auto read_number = [&]() -> u64 {
        skip_ws();
        if (i >= text.size() || text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("partition parse: expected a number in '" +
                                        std::string(text) + "'");
        }
        u64 v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = v * 10 + static_cast<u64>(text[i] - '0');
            if (v > 1'000'000'000) throw std::invalid_argument("partition parse: part too large");
            ++i;
        }
        return v;
    };
    while (true) {
        skip_ws();
        if (i >= text.size() || text[i] == ')') break;
        u64 part = read_number();
        u64 repeat = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            repeat = read_number();
            if (repeat > 1'000'000) throw std::invalid_argument("partition parse: run too long");
        }
        for (u64 r = 0; r < repeat; ++r) parts.push_back(static_cast<u32>(part));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i < text.size() && text[i] == ')') ++i;
    skip_ws();
    if (i != text.size()) {
        throw std::invalid_argument("partition parse: trailing characters in '" +
                                    std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<u32> out;
    if (parts_.empty()) return Partition(std::move(out));
    out.resize(parts_.front());
    for (u32 j = 0; j < parts_.front(); ++j) {
        u32 count = 0;
        for (u32 p : parts_) {
            if (p >= j + 1) ++count;
        }
        out[j] = count;
    }
    return Partition(std::move(out));
}

bool Partition::is_self_conjugate() const { return *this == conjugate(); }

PrimeFactorization Partition::hook_product() const {
    const Partition conj = conjugate();
    PrimeFactorization product;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        for (u32 j = 0; j < parts_[i]; ++j) {
            u64 arm = parts_[i] - (j + 1);
            u64 leg = conj.parts_[j] - (i + 1);
            product.multiply(factorize_u64(arm + leg + 1));
        }
    }
    return product;
}

PrimeFactorization Partition::character_degree() const {
    PrimeFactorization degree = factorial_factorization(sum_);
    degree.divide_exact(hook_product());
    return degree;
}

std::string Partition::to_string(bool compress_one_runs) const {
    std::string s = "(";
    std::size_t i = 0;
    while (i < parts_.size()) {
        if (i > 0) s += ',';
        std::size_t run = 1;
        while (i + run < parts_.size() && parts_[i + run] == parts_[i]) ++run;
        if (compress_one_runs && parts_[i] == 1 && run >= 3) {
            s += "1^" + std::to_string(run);
        } else {
            for (std::size_t r = 0; r < run; ++r) {
                if (r > 0) s += ',';
                s += std::to_string(parts_[i]);
            }
        }
        i += run;
    }
    s += ')';
    return s;
}

namespace {

void emit_partitions(u32 remaining, u32 max_part, std::vector<u32>& prefix,
                     const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(prefix));
        return;
    }
    for (u32 part = std::min(max_part, remaining); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_partition(u32 n, const std::function<void(const Partition&)>& fn, u32 bound) {
    if (n > bound) {
        throw resource_error("for_each_partition: n=" + std::to_string(n) +
                             " exceeds the enumeration bound " + std::to_string(bound));
    }
    std::vector<u32> prefix;
    emit_partitions(n, n == 0 ? 1 : n, prefix, fn);
}

std::vector<Partition> partitions_of(u32 n, u32 bound) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, bound);
    return out;
}

}  // namespace vanish
