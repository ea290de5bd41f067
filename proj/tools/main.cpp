#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vanish/report.hpp"

namespace {

int emit(const vanish::AuditReport& report, const vanish::AuditOptions& options) {
    vanish::render_report(report, std::cout, options);
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vanishcheck: audits prime-power-order conjugacy witnesses in alternating\n"
                 "groups (class sizes, character vanishing) and the divisor tables for\n"
                 "simple groups of Lie type"};
    app.require_subcommand(1);

    vanish::AuditOptions options;
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();
    app.add_option("--jobs", options.jobs, "Worker threads for range commands")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app.add_flag("--allow-known-exceptions,!--no-allow-known-exceptions",
                 options.allow_known_exceptions,
                 "Count known exceptions (self-conjugate certificates, SL2(4)/SL2(8)) as "
                 "flagged rather than failed (default on)");

    vanish::u64 alt_min = 6, alt_max = 300;
    auto* alt = app.add_subcommand("verify-alternating",
                                   "Construct and verify the alternating-group witnesses");
    alt->add_option("--min", alt_min, "Smallest degree n")->capture_default_str();
    alt->add_option("--max", alt_max, "Largest degree n")->capture_default_str();

    vanish::u64 q_max = 1024;
    std::vector<std::string> families;
    auto* lie = app.add_subcommand("verify-lie", "Audit the Lie-type divisor tables");
    lie->add_option("--q-max", q_max, "Largest prime power q")->capture_default_str();
    lie->add_option("--family", families,
                    "Family id (repeatable; default all): 2B2 3D4 G2a G2b 2G2 F4 2F4 E6 2E6 "
                    "E7 E8 2F4(2)' PSLn PSUn_even PSUn_odd PSpn POmega_odd POmega_minus "
                    "POmega_plus PSL3 PSU3 PSp4 PSL2");

    std::string which;
    vanish::u64 arith_min = 0, arith_max = 0;
    auto* arith = app.add_subcommand("verify-arith", "Scan the two prime-interval lemmas");
    arith->add_option("--which", which, "p-square-lemma or nagura")
        ->required()
        ->check(CLI::IsMember({"p-square-lemma", "nagura"}));
    arith->add_option("--min", arith_min, "Range start (default: domain minimum)");
    arith->add_option("--max", arith_max, "Range end")->capture_default_str();

    std::string sigma_text, lambda_text;
    auto* chareval = app.add_subcommand("char-eval",
                                        "Evaluate a symmetric-group character at a cycle type");
    chareval->add_option("--sigma", sigma_text, "Character label, e.g. '5,2' or '(2,1^8)'")
        ->required();
    chareval->add_option("--lambda", lambda_text, "Cycle type, e.g. '4,2,1'")->required();

    auto* selftest = app.add_subcommand(
        "selftest", "Brute-force class/character cross-checks and fixed spot values");

    std::string record_path;
    auto* ingest = app.add_subcommand("ingest-check",
                                      "Check externally supplied class records (JSON lines)");
    ingest->add_option("path", record_path, "Record file")->required();
    ingest->add_flag("--strict", options.strict, "Reject unknown fields and abort on bad lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    options.format = (format == "records") ? vanish::ReportFormat::records
                                           : vanish::ReportFormat::text;

    try {
        if (alt->parsed()) {
            return emit(vanish::run_verify_alternating(alt_min, alt_max, options), options);
        }
        if (lie->parsed()) {
            return emit(vanish::run_verify_lie(families, q_max, options), options);
        }
        if (arith->parsed()) {
            if (arith->count("--min") == 0) arith_min = (which == "nagura") ? 25 : 9;
            if (arith->count("--max") == 0) arith_max = 1'000'000;
            return emit(vanish::run_verify_arith(which, arith_min, arith_max, options), options);
        }
        if (chareval->parsed()) {
            return emit(vanish::run_char_eval(vanish::Partition::parse(sigma_text),
                                              vanish::Partition::parse(lambda_text), options),
                        options);
        }
        if (selftest->parsed()) {
            return emit(vanish::run_selftest(options), options);
        }
        if (ingest->parsed()) {
            return emit(vanish::run_ingest_check(record_path, options), options);
        }
    } catch (const vanish::resource_error& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
