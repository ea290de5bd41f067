#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vanish {

// Four-way verdict: `flagged` marks a known exception (reported, not a
// failure under the default allow-list), `unverifiable` marks input the
// width-limited arithmetic cannot decide either way.
enum class Verdict { pass, fail, flagged, unverifiable };

const char* to_string(Verdict v);

// Result of one audited claim together with the values that justify it.
// Evidence is kept as ordered key/value strings so reports render the
// same bytes regardless of integer width.
struct CheckOutcome {
    Verdict verdict = Verdict::fail;
    std::string kind;     // which check, e.g. "p-square-lemma"
    std::string subject;  // which instance, e.g. "n=74"
    std::vector<std::pair<std::string, std::string>> evidence;

    bool passed() const { return verdict == Verdict::pass; }
    void add(std::string key, std::string value);
    const std::string* find(std::string_view key) const;
};

}  // namespace vanish
