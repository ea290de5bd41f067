#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vanish/report.hpp"

using namespace vanish;

namespace {

std::string rendered(const AuditReport& report, const AuditOptions& options) {
    std::ostringstream out;
    render_report(report, out, options);
    return out.str();
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("verify-alternating over a small range") {
    AuditOptions options;
    const AuditReport report = run_verify_alternating(6, 12, options);
    CHECK(report.outcomes.size() == 7);
    CHECK(report.summary.failed == 0);
    CHECK(report.summary.flagged == 0);
    CHECK(report.exit_code() == 0);
    CHECK(report.outcomes[1].subject == "n=7");
    CHECK(*report.outcomes[1].find("sigma") == "(5,2)");
    CHECK(*report.outcomes[1].find("mn_value") == "0");
    CHECK_THROWS_AS(run_verify_alternating(6, 5, options), std::invalid_argument);
    CHECK_THROWS_AS(run_verify_alternating(3, 5, options), std::invalid_argument);
}

TEST_CASE("records output is byte-identical across job counts") {
    AuditOptions serial;
    serial.format = ReportFormat::records;
    serial.jobs = 1;
    AuditOptions parallel = serial;
    parallel.jobs = 4;
    const std::string a = rendered(run_verify_alternating(6, 40, serial), serial);
    const std::string b = rendered(run_verify_alternating(6, 40, parallel), parallel);
    CHECK(a == b);
    CHECK(a.find("\"command\":\"verify-alternating\"") != std::string::npos);

    const std::string c = rendered(run_verify_lie({}, 64, serial), serial);
    const std::string d = rendered(run_verify_lie({}, 64, parallel), parallel);
    CHECK(c == d);
}

TEST_CASE("flag accounting follows the allow-list") {
    AuditOptions allow;  // default on
    const AuditReport flagged = run_verify_alternating(17, 17, allow);
    CHECK(flagged.summary.flagged == 1);
    CHECK(flagged.summary.failed == 0);
    CHECK(flagged.exit_code() == 0);

    AuditOptions strict_audit;
    strict_audit.allow_known_exceptions = false;
    const AuditReport failed = run_verify_alternating(17, 17, strict_audit);
    CHECK(failed.summary.failed == 1);
    CHECK(failed.exit_code() == 1);
}

TEST_CASE("verify-lie selection") {
    AuditOptions options;
    const AuditReport b2 = run_verify_lie({"2B2"}, 128, options);
    CHECK(b2.outcomes.size() == 3);  // q = 8, 32, 128
    CHECK(b2.summary.failed == 0);

    const AuditReport psl2 = run_verify_lie({"PSL2"}, 64, options);
    u64 flagged = 0;
    for (const auto& outcome : psl2.outcomes) {
        if (outcome.verdict == Verdict::flagged) ++flagged;
    }
    CHECK(flagged == 3);  // q = 4, 5 (alias of 4), 8
    CHECK(psl2.exit_code() == 0);

    AuditOptions no_allow;
    no_allow.allow_known_exceptions = false;
    CHECK(run_verify_lie({"PSL2"}, 64, no_allow).exit_code() == 1);

    CHECK_THROWS_AS(run_verify_lie({"E9"}, 64, options), std::invalid_argument);
    CHECK_THROWS_AS(run_verify_lie({"2G2"}, 9, options), std::invalid_argument);

    const AuditReport all9 = run_verify_lie({}, 9, options);  // includes the Tits row
    bool tits = false;
    for (const auto& outcome : all9.outcomes) {
        if (outcome.subject == "2F4(2)' q=2") tits = outcome.passed();
    }
    CHECK(tits);
}

TEST_CASE("verify-arith ranges") {
    AuditOptions options;
    const AuditReport psq = run_verify_arith("p-square-lemma", 9, 2000, options);
    CHECK(psq.outcomes.size() == 1);
    CHECK(psq.outcomes[0].passed());
    CHECK(*psq.outcomes[0].find("checked") == "1992");
    CHECK(*psq.outcomes[0].find("failures") == "0");

    const AuditReport nagura = run_verify_arith("nagura", 25, 2000, options);
    CHECK(nagura.summary.failed == 0);

    CHECK_THROWS_AS(run_verify_arith("p-square-lemma", 5, 10, options), std::invalid_argument);
    CHECK_THROWS_AS(run_verify_arith("nagura", 25, 20'000'001, options), std::invalid_argument);
    CHECK_THROWS_AS(run_verify_arith("bogus", 9, 10, options), std::invalid_argument);
}

TEST_CASE("char-eval") {
    AuditOptions options;
    const AuditReport report =
        run_char_eval(Partition({5, 2}), Partition({4, 2, 1}), options);
    CHECK(report.exit_code() == 0);
    CHECK(*report.outcomes[0].find("value") == "0");
    CHECK(*report.outcomes[0].find("sigma_self_conjugate") == "no");

    const AuditReport trivial = run_char_eval(Partition({3}), Partition({3}), options);
    CHECK(*trivial.outcomes[0].find("value") == "1");

    CHECK_THROWS_AS(run_char_eval(Partition({3}), Partition({2}), options),
                    std::invalid_argument);
}

TEST_CASE("selftest passes on a correct build") {
    AuditOptions options;
    const AuditReport report = run_selftest(options);
    CHECK(report.summary.failed == 0);
    CHECK(report.summary.unverifiable == 0);
    CHECK(report.exit_code() == 0);
    CHECK(report.outcomes.size() == 12 + 7 + 4);  // classes, tables, spots
}

TEST_CASE("ingest-check reads record files") {
    const std::string path = "test_records_tmp.jsonl";
    {
        std::ofstream out(path);
        out << R"x({"group_label":"PSL3(3)","class_label":"4A","element_order":4,"class_size":"702"})x"
            << "\n";
        out << R"({"group_label":"X","class_label":"6A","element_order":6,"class_size":"360"})"
            << "\n";
    }
    AuditOptions options;
    const AuditReport report = run_ingest_check(path, options);
    CHECK(report.outcomes.size() == 2);
    CHECK(report.outcomes[0].passed());
    CHECK(report.outcomes[1].verdict == Verdict::fail);
    CHECK(report.exit_code() == 1);
    std::remove(path.c_str());

    CHECK_THROWS_AS(run_ingest_check("does_not_exist.jsonl", options), std::invalid_argument);
}

TEST_CASE("text rendering carries verdicts and evidence") {
    AuditOptions options;
    const AuditReport report = run_verify_alternating(17, 17, options);
    const std::string text = rendered(report, options);
    CHECK(text.find("[flagged]") != std::string::npos);
    CHECK(text.find("sigma=(9,1^8)") != std::string::npos);
    CHECK(text.find("summary: 0 passed, 0 failed, 1 flagged") != std::string::npos);
}

}  // TEST_SUITE
