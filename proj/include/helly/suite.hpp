#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace helly {

enum class Mode { exact, floating };

const char *to_string(Mode mode);
/// "exact" or "float"; throws ParseError otherwise.
Mode parse_mode(std::string_view text);

struct SuiteConfig {
    std::string suite;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    Mode mode = Mode::exact;
    double tol = 1e-9;
    /// maxnorm, euclidean, random, or the path of a ball JSON file.
    std::string ball = "random";
    unsigned jobs = 1;
};

/// vacuous: the generated instance missed the hypothesis, so it says nothing
/// about the conclusion.
enum class TrialStatus { pass, fail, vacuous };

const char *to_string(TrialStatus status);

struct TrialRecord {
    std::size_t trial = 0;
    std::string digest;  // FNV-1a of the canonical instance text
    TrialStatus status = TrialStatus::pass;
    std::string family;  // which generator produced the instance
    std::string detail;
    std::vector<std::string> witnesses;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<TrialRecord> records;  // ordered by trial index
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t vacuous = 0;
    std::map<std::string, std::size_t> families;
    std::string notes;
    double wall_seconds = 0.0;  // not part of the JSON report

    bool ok() const { return failed == 0; }
};

const std::vector<std::string> &suite_names();

/// Runs `trials` independent instances; trial i uses the sub-seed seed ^ i, so
/// the report does not depend on jobs. Throws UnknownSuite, IoError,
/// ParseError, or PreconditionFailed for a ball the suite cannot use.
SuiteReport run_suite(const SuiteConfig &config);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace helly
