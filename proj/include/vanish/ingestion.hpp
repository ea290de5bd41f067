#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vanish/numtheory.hpp"

namespace vanish {

// Externally curated class data (e.g. hand-copied atlas rows). The class
// size arrives as a decimal string of arbitrary length; whether it can be
// factorized is decided by the width-limited factorizer.
struct ExternalClassRecord {
    std::string group_label;
    std::string class_label;
    u64 element_order = 0;
    std::string class_size;
};

// One JSON object per line with exactly the fields group_label,
// class_label, element_order, class_size (string or integer). In strict
// mode unknown fields are rejected; otherwise ignored. Malformed input
// throws std::invalid_argument.
ExternalClassRecord parse_record_line(const std::string& line, bool strict);

// Passes iff element_order is a prime power (> 1) and the class size has
// at least three distinct prime factors. Sizes beyond the factorization
// width come back unverifiable rather than fail.
CheckOutcome check_record(const ExternalClassRecord& record);

// Streaming check, verdicts in input order. Strict mode re-throws parse
// errors; lenient mode turns a bad line into a failing outcome.
std::vector<CheckOutcome> check_record_stream(std::istream& in, bool strict);

}  // namespace vanish
