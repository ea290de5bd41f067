#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "vanish/check.hpp"
#include "vanish/witnesses.hpp"

namespace vanish {

enum class ReportFormat { text, records };

struct AuditOptions {
    ReportFormat format = ReportFormat::text;
    unsigned jobs = 1;
    // With the allow-list on, known exceptions (self-conjugate
    // certificates, SL2(4)/SL2(8)) are flagged instead of failed.
    bool allow_known_exceptions = true;
    bool strict = false;  // ingest-check field policy
};

struct AuditSummary {
    u64 passed = 0;
    u64 failed = 0;
    u64 flagged = 0;
    u64 unverifiable = 0;
};

struct AuditReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CheckOutcome> outcomes;
    AuditSummary summary;

    // 0 only when nothing failed; unverifiable records also block a clean
    // exit (the claim was not established). Flags block it only when the
    // allow-list is off -- that is folded into `failed` by finalize().
    int exit_code() const;
    void finalize(const AuditOptions& options);  // tallies outcomes
};

// Ordered fan-out: outcome i comes from fn(i) regardless of thread count,
// so reports are byte-identical for every --jobs value.
std::vector<CheckOutcome> run_indexed(u64 count, unsigned jobs,
                                      const std::function<CheckOutcome(u64)>& fn);

CheckOutcome witness_to_outcome(const WitnessReport& w);

AuditReport run_verify_alternating(u64 n_min, u64 n_max, const AuditOptions& options);
AuditReport run_verify_lie(const std::vector<std::string>& family_filter, u64 q_max,
                           const AuditOptions& options);
AuditReport run_verify_arith(const std::string& which, u64 lo, u64 hi,
                             const AuditOptions& options);
AuditReport run_char_eval(const Partition& sigma, const Partition& lambda,
                          const AuditOptions& options);
AuditReport run_selftest(const AuditOptions& options);
AuditReport run_ingest_check(const std::string& path, const AuditOptions& options);

void render_report(const AuditReport& report, std::ostream& out, const AuditOptions& options);

}  // namespace vanish
