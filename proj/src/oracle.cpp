#include "vanish/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "vanish/characters.hpp"

namespace vanish::oracle {

namespace {

constexpr u32 kMaxBruteDegree = 8;

using Perm = std::vector<u32>;  // images, 0-based

u64 pack(const Perm& p) {
    u64 key = 0;
    for (u32 image : p) key = (key << 4) | image;
    return key;
}

bool is_even_perm(const Perm& p) {
    u32 transpositions = 0;
    std::vector<bool> seen(p.size(), false);
    for (u32 i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        u32 len = 0;
        for (u32 j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

Partition cycle_type_of(const Perm& p) {
    std::vector<u32> lengths;
    std::vector<bool> seen(p.size(), false);
    for (u32 i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        u32 len = 0;
        for (u32 j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

// g x g^{-1} as images: y[g[i]] = g[x[i]].
Perm conjugate_by(const Perm& g, const Perm& x) {
    Perm y(x.size());
    for (u32 i = 0; i < x.size(); ++i) y[g[i]] = g[x[i]];
    return y;
}

std::vector<Perm> conjugating_generators(u32 n, bool alternating) {
    std::vector<Perm> gens;
    Perm identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (!alternating) {
        if (n >= 2) {
            Perm t = identity;
            std::swap(t[0], t[1]);
            gens.push_back(t);
        }
        if (n >= 3) {
            Perm c(n);
            for (u32 i = 0; i < n; ++i) c[i] = (i + 1) % n;
            gens.push_back(c);
        }
    } else {
        for (u32 k = 2; k < n; ++k) {  // 3-cycles (0,1,k) generate A_n
            Perm t = identity;
            t[0] = 1;
            t[1] = k;
            t[k] = 0;
            gens.push_back(t);
        }
    }
    return gens;
}

}  // namespace

std::string BruteClass::label() const {
    std::string s = cycle_type.to_string();
    if (split_tag != ' ') s += split_tag;
    return s;
}

std::vector<BruteClass> brute_force_classes(u32 n, bool alternating) {
    if (n > kMaxBruteDegree) {
        throw resource_error("brute_force_classes: n=" + std::to_string(n) + " exceeds cap 8");
    }
    if (n == 0) return {{Partition{}, ' ', 1}};

    Perm perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Perm> elements;
    do {
        if (!alternating || is_even_perm(perm)) elements.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::vector<Perm> gens = conjugating_generators(n, alternating);
    std::unordered_set<u64> visited;
    struct Orbit {
        Partition type;
        u64 size;
        u64 min_packed;
    };
    std::vector<Orbit> orbits;
    for (const Perm& start : elements) {
        if (visited.count(pack(start))) continue;
        std::vector<Perm> frontier{start};
        visited.insert(pack(start));
        u64 size = 0;
        u64 min_packed = pack(start);
        while (!frontier.empty()) {
            Perm x = std::move(frontier.back());
            frontier.pop_back();
            ++size;
            min_packed = std::min(min_packed, pack(x));
            for (const Perm& g : gens) {
                Perm y = conjugate_by(g, x);
                if (visited.insert(pack(y)).second) frontier.push_back(std::move(y));
            }
        }
        orbits.push_back({cycle_type_of(start), size, min_packed});
    }

    std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.type != b.type) return a.type > b.type;  // reverse-lex by type
        return a.min_packed < b.min_packed;
    });
    std::vector<BruteClass> classes;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        char tag = ' ';
        const bool split_pair =
            (i + 1 < orbits.size() && orbits[i + 1].type == orbits[i].type) ||
            (i > 0 && orbits[i - 1].type == orbits[i].type);
        if (split_pair) {
            tag = (i > 0 && orbits[i - 1].type == orbits[i].type) ? '-' : '+';
        }
        classes.push_back({orbits[i].type, tag, orbits[i].size});
    }
    return classes;
}

CheckOutcome validate_character_table(u32 n) {
    if (n > kMaxBruteDegree) {
        throw resource_error("validate_character_table: n=" + std::to_string(n) + " exceeds cap 8");
    }
    CheckOutcome out;
    out.kind = "character-table";
    out.subject = "n=" + std::to_string(n);

    const std::vector<Partition> parts = partitions_of(n);
    const std::size_t count = parts.size();

    std::map<Partition, u64> class_size;
    for (const auto& cls : brute_force_classes(n, false)) class_size[cls.cycle_type] = cls.size;

    std::vector<std::vector<i64>> chi(count, std::vector<i64>(count));
    for (std::size_t s = 0; s < count; ++s) {
        for (std::size_t l = 0; l < count; ++l) chi[s][l] = mn_value(parts[s], parts[l]);
    }

    u64 n_factorial = 1;
    for (u64 i = 2; i <= n; ++i) n_factorial *= i;

    for (std::size_t s = 0; s < count; ++s) {
        for (std::size_t t = s; t < count; ++t) {
            i64 inner = 0;
            for (std::size_t l = 0; l < count; ++l) {
                inner += static_cast<i64>(class_size.at(parts[l])) * chi[s][l] * chi[t][l];
            }
            const i64 expected = (s == t) ? static_cast<i64>(n_factorial) : 0;
            if (inner != expected) {
                out.verdict = Verdict::fail;
                out.add("row_orthogonality",
                        parts[s].to_string() + " x " + parts[t].to_string() + " -> " +
                            std::to_string(inner));
                return out;
            }
        }
    }

    i64 degree_square_sum = 0;
    for (std::size_t s = 0; s < count; ++s) {
        const i64 degree = chi[s][count - 1];
        degree_square_sum += degree * degree;
        const auto hook_degree = parts[s].character_degree().value();
        if (!hook_degree || static_cast<i64>(static_cast<u64>(*hook_degree)) != degree) {
            out.verdict = Verdict::fail;
            out.add("degree_mismatch", parts[s].to_string());
            return out;
        }
    }
    if (n > 0 && degree_square_sum != static_cast<i64>(n_factorial)) {
        out.verdict = Verdict::fail;
        out.add("column_orthogonality", std::to_string(degree_square_sum));
        return out;
    }

    out.verdict = Verdict::pass;
    out.add("classes", std::to_string(count));
    out.add("degree_square_sum", std::to_string(degree_square_sum));
    return out;
}

}  // namespace vanish::oracle
