#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vanish/ingestion.hpp"
#include "vanish/oracle.hpp"
#include "vanish/report.hpp"

namespace py = pybind11;
using namespace vanish;

namespace {

// 128-bit values cross the boundary as decimal strings; python ints are
// unbounded so callers just wrap with int().
u128 to_u128(const py::object& n) {
    const std::string text = py::str(n);
    auto value = parse_decimal_u128(text);
    if (!value) throw py::value_error("expected a non-negative integer below 2^128");
    return *value;
}

py::list factors_to_list(const PrimeFactorization& f) {
    py::list out;
    for (const auto& [p, e] : f.entries()) out.append(py::make_tuple(p, e));
    return out;
}

py::dict outcome_to_dict(const CheckOutcome& outcome) {
    py::dict d;
    d["verdict"] = to_string(outcome.verdict);
    d["kind"] = outcome.kind;
    d["subject"] = outcome.subject;
    py::dict evidence;
    for (const auto& [key, value] : outcome.evidence) evidence[py::str(key)] = value;
    d["evidence"] = evidence;
    return d;
}

Partition to_partition(const std::vector<u32>& parts) { return Partition(parts); }

py::dict witness_to_dict(const WitnessReport& w) {
    py::dict d;
    d["n"] = w.n;
    d["cycle_type"] = w.cycle_type.parts.parts();
    if (w.decomposition) {
        d["p"] = w.decomposition->p;
        d["k"] = w.decomposition->k;
        d["r"] = w.decomposition->r;
    }
    d["class_size"] = factors_to_list(w.class_size);
    d["split_class"] = w.split_class;
    d["required_primes"] = w.required_primes;
    d["class_size_primes"] = w.class_size_primes;
    d["prime_sets_equal"] = w.prime_sets_equal;
    if (w.sigma) {
        d["sigma"] = w.sigma->parts();
        d["sigma_self_conjugate"] = w.sigma_self_conjugate;
    }
    if (w.mn) d["mn_value"] = *w.mn;
    py::dict checks;
    for (const auto& c : w.checks) checks[py::str(c.name)] = to_string(c.verdict);
    d["checks"] = checks;
    d["verdict"] = to_string(w.overall());
    return d;
}

}  // namespace

PYBIND11_MODULE(vanishcheck, m) {
    m.doc() = "Exact verification of prime-power-order conjugacy witnesses: class sizes "
              "in alternating groups, Murnaghan-Nakayama character values, and the "
              "divisor tables for simple groups of Lie type.";

    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("sieve_primes", &sieve_primes, py::arg("limit"));
    m.def(
        "factorize", [](const py::object& n) { return factors_to_list(factorize(to_u128(n))); },
        py::arg("n"), "Factorization as a list of (prime, exponent) pairs; accepts int or str.");
    m.def("legendre_valuation", &legendre_valuation, py::arg("n"), py::arg("p"));
    m.def(
        "factorial_factorization",
        [](u64 n) { return factors_to_list(factorial_factorization(n)); }, py::arg("n"));
    m.def("multiplicative_order", &multiplicative_order, py::arg("a"), py::arg("p"));
    m.def(
        "zsigmondy_prime",
        [](u64 base, u64 exponent) -> std::optional<u64> {
            return zsigmondy_prime({base, exponent});
        },
        py::arg("base"), py::arg("exponent"));
    m.def("largest_prime_with_square_below", &largest_prime_with_square_below, py::arg("n"));
    m.def(
        "check_p_square_lemma", [](u64 n) { return outcome_to_dict(check_p_square_lemma(n)); },
        py::arg("n"));
    m.def(
        "check_nagura_interval", [](u64 x) { return outcome_to_dict(check_nagura_interval(x)); },
        py::arg("x"));
    m.def("is_prime_power", &is_prime_power, py::arg("q"));

    m.def(
        "conjugate",
        [](const std::vector<u32>& parts) { return to_partition(parts).conjugate().parts(); },
        py::arg("partition"));
    m.def(
        "is_self_conjugate",
        [](const std::vector<u32>& parts) { return to_partition(parts).is_self_conjugate(); },
        py::arg("partition"));
    m.def(
        "hook_product",
        [](const std::vector<u32>& parts) {
            return factors_to_list(to_partition(parts).hook_product());
        },
        py::arg("partition"));
    m.def(
        "character_degree",
        [](const std::vector<u32>& parts) {
            return factors_to_list(to_partition(parts).character_degree());
        },
        py::arg("partition"));
    m.def(
        "partitions_of",
        [](u32 n, u32 bound) {
            py::list out;
            for_each_partition(n, [&](const Partition& p) { out.append(p.parts()); }, bound);
            return out;
        },
        py::arg("n"), py::arg("bound") = kDefaultPartitionBound);
    m.def(
        "partition_string",
        [](const std::vector<u32>& parts, bool compress) {
            return to_partition(parts).to_string(compress);
        },
        py::arg("partition"), py::arg("compress_one_runs") = true);

    m.def(
        "rim_hooks",
        [](const std::vector<u32>& shape, u32 length) {
            py::list out;
            for (const auto& removal : rim_hooks(to_partition(shape), length)) {
                out.append(py::make_tuple(removal.remainder.parts(), removal.leg_length));
            }
            return out;
        },
        py::arg("shape"), py::arg("length"));
    m.def(
        "mn_value",
        [](const std::vector<u32>& sigma, const std::vector<u32>& lambda) {
            return mn_value(to_partition(sigma), to_partition(lambda));
        },
        py::arg("sigma"), py::arg("lambda"),
        "Exact symmetric-group character value chi_sigma at cycle type lambda.");
    m.def(
        "restricts_irreducibly_to_alternating",
        [](const std::vector<u32>& sigma) {
            return restricts_irreducibly_to_alternating(to_partition(sigma));
        },
        py::arg("sigma"));

    m.def(
        "centralizer_order_sym",
        [](const std::vector<u32>& ct) {
            return factors_to_list(centralizer_order_sym(CycleType(to_partition(ct))));
        },
        py::arg("cycle_type"));
    m.def(
        "class_size_sym",
        [](const std::vector<u32>& ct) {
            return factors_to_list(class_size_sym(CycleType(to_partition(ct))));
        },
        py::arg("cycle_type"));
    m.def(
        "class_size_alt",
        [](const std::vector<u32>& ct) {
            return factors_to_list(class_size_alt(CycleType(to_partition(ct))));
        },
        py::arg("cycle_type"));
    m.def(
        "is_even_cycle_type",
        [](const std::vector<u32>& ct) { return is_even(CycleType(to_partition(ct))); },
        py::arg("cycle_type"));
    m.def(
        "splits_in_alternating",
        [](const std::vector<u32>& ct) {
            return splits_in_alternating(CycleType(to_partition(ct)));
        },
        py::arg("cycle_type"));
    m.def("prime_set_of_alternating_order", &prime_set_of_alternating_order, py::arg("n"));

    m.def(
        "verify_alternating_witness",
        [](u64 n) { return witness_to_dict(verify_alternating_witness(n)); }, py::arg("n"));

    m.def("lie_family_ids", [] {
        std::vector<std::string> ids;
        for (const auto& family : lie_families()) ids.push_back(family.id);
        return ids;
    });
    m.def(
        "admissible_q",
        [](const std::string& id, u64 q_max) {
            const LieFamily* family = find_lie_family(id);
            if (!family) throw py::value_error("unknown Lie family '" + id + "'");
            return admissible_q(*family, q_max);
        },
        py::arg("family"), py::arg("q_max"));
    m.def(
        "lie_divisor_check",
        [](const std::string& id, u64 q) {
            const LieFamily* family = find_lie_family(id);
            if (!family) throw py::value_error("unknown Lie family '" + id + "'");
            return outcome_to_dict(lie_divisor_check(*family, q));
        },
        py::arg("family"), py::arg("q"));
    m.def(
        "psl2_classify",
        [](u64 q) {
            const Psl2Classification c = psl2_classify(q);
            py::dict d;
            d["q"] = c.q;
            d["branch"] = to_string(c.branch);
            d["l"] = c.l;
            d["expression"] = factors_to_list(c.expression);
            d["witness"] = c.witness;
            d["excluded_group"] = c.excluded_group;
            d["canonical_q"] = c.canonical_q;
            return d;
        },
        py::arg("q"));
    m.def("builtin_spot_values", [] {
        py::list out;
        for (const auto& spot : builtin_spot_values()) {
            py::dict d;
            d["group"] = spot.group;
            d["element_order"] = spot.element_order;
            d["class_size"] = factors_to_list(spot.class_size);
            out.append(d);
        }
        return out;
    });

    m.def(
        "check_record",
        [](const std::string& group_label, const std::string& class_label, u64 element_order,
           const py::object& class_size) {
            ExternalClassRecord record{group_label, class_label, element_order,
                                       py::str(class_size)};
            return outcome_to_dict(check_record(record));
        },
        py::arg("group_label"), py::arg("class_label"), py::arg("element_order"),
        py::arg("class_size"));

    m.def(
        "brute_force_classes",
        [](u32 n, bool alternating) {
            py::list out;
            for (const auto& cls : oracle::brute_force_classes(n, alternating)) {
                out.append(py::make_tuple(cls.label(), cls.size));
            }
            return out;
        },
        py::arg("n"), py::arg("alternating") = false);
}
