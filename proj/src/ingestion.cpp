#include "vanish/ingestion.hpp"

#include <istream>

#include <json.hpp>

namespace vanish {

namespace {

using json = nlohmann::json;

u64 require_positive_integer(const json& value, const char* field) {
    if (value.is_number_unsigned() && value.get<u64>() >= 1) return value.get<u64>();
    if (value.is_number_integer() && value.get<i64>() >= 1) {
        return static_cast<u64>(value.get<i64>());
    }
    throw std::invalid_argument(std::string(field) + " must be a positive integer");
}

std::string require_size_string(const json& value) {
    std::string text;
    if (value.is_string()) {
        text = value.get<std::string>();
    } else if (value.is_number_unsigned()) {
        text = std::to_string(value.get<u64>());
    } else if (value.is_number_integer() && value.get<i64>() >= 1) {
        text = std::to_string(value.get<i64>());
    } else {
        throw std::invalid_argument("class_size must be a decimal string or positive integer");
    }
    if (text.empty()) throw std::invalid_argument("class_size must be non-empty");
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("class_size must be a decimal string");
        }
    }
    if (text == "0") throw std::invalid_argument("class_size must be >= 1");
    return text;
}

}  // namespace

ExternalClassRecord parse_record_line(const std::string& line, bool strict) {
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("record is not valid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw std::invalid_argument("record must be a JSON object");

    static const char* kFields[] = {"group_label", "class_label", "element_order", "class_size"};
    for (const char* field : kFields) {
        if (!obj.contains(field)) {
            throw std::invalid_argument(std::string("record is missing field ") + field);
        }
    }
    if (strict) {
        for (const auto& [key, value] : obj.items()) {
            if (key != "group_label" && key != "class_label" && key != "element_order" &&
                key != "class_size") {
                throw std::invalid_argument("unknown field '" + key + "' in strict mode");
            }
        }
    }

    ExternalClassRecord record;
    if (!obj["group_label"].is_string() || !obj["class_label"].is_string()) {
        throw std::invalid_argument("group_label and class_label must be strings");
    }
    record.group_label = obj["group_label"].get<std::string>();
    record.class_label = obj["class_label"].get<std::string>();
    if (record.group_label.empty() || record.class_label.empty()) {
        throw std::invalid_argument("labels must be non-empty");
    }
    record.element_order = require_positive_integer(obj["element_order"], "element_order");
    record.class_size = require_size_string(obj["class_size"]);
    return record;
}

CheckOutcome check_record(const ExternalClassRecord& record) {
    CheckOutcome out;
    out.kind = "external-record";
    out.subject = record.group_label + " " + record.class_label;
    out.add("element_order", std::to_string(record.element_order));
    out.add("class_size", record.class_size);

    const bool prime_power_order =
        record.element_order > 1 && is_prime_power(record.element_order);
    out.add("prime_power_order", prime_power_order ? "yes" : "no");

    const auto size = parse_decimal_u128(record.class_size);
    if (!size) {
        out.verdict = Verdict::unverifiable;
        out.add("reason", "class size exceeds 128-bit width");
        return out;
    }
    if (*size == 0) {
        out.verdict = Verdict::fail;
        out.add("reason", "class size must be >= 1");
        return out;
    }
    PrimeFactorization factors;
    try {
        factors = factorize(*size);
    } catch (const resource_error&) {
        out.verdict = Verdict::unverifiable;
        out.add("reason", "class size exceeds factorization width");
        return out;
    }
    out.add("factorization", factors.to_string());
    out.add("distinct_primes", std::to_string(factors.distinct_primes()));
    out.verdict =
        (prime_power_order && factors.distinct_primes() >= 3) ? Verdict::pass : Verdict::fail;
    return out;
}

std::vector<CheckOutcome> check_record_stream(std::istream& in, bool strict) {
    std::vector<CheckOutcome> outcomes;
    std::string line;
    u64 line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            outcomes.push_back(check_record(parse_record_line(line, strict)));
        } catch (const std::invalid_argument& e) {
            if (strict) {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": " +
                                            e.what());
            }
            CheckOutcome out;
            out.kind = "external-record";
            out.subject = "line " + std::to_string(line_number);
            out.verdict = Verdict::fail;
            out.add("parse_error", e.what());
            outcomes.push_back(std::move(out));
        }
    }
    return outcomes;
}

}  // namespace vanish
