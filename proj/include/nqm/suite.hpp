#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace nqm {

struct SuiteConfig {
    std::uint64_t seed = 42;
    // Sample counts; the defaults are the acceptance values.
    int pbwWords = 500;
    int assocTriples = 200;
    int relationSamples = 200;
    int kashiwaraSamples = 200;
    int wordSamples = 200;
    int formSamples = 200;
    int quotientSamples = 50;
    // Windows.
    int modeLo = -3, modeHi = 3;
    int idxLo = -4, idxHi = 4;
    int kashIdxLo = -2, kashIdxHi = 2;

    /// Environment override NQM_SUITE_SAMPLES caps every sample count
    /// (budget control for slow machines); unset keeps the defaults.
    static SuiteConfig from_env(std::uint64_t seed);
};

struct CaseResult {
    std::string name;
    bool pass = true;
    std::string lhs;  // filled only on failure
    std::string rhs;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;
    bool pass = true;
    long case_count() const { return static_cast<long>(cases.size()); }
};

// Individual batteries; each case is one verified statement.
std::vector<CaseResult> battery_identity18();
std::vector<CaseResult> battery_pbw(const SuiteConfig& cfg);
std::vector<CaseResult> battery_omega_bounds();
std::vector<CaseResult> battery_omega_relations(const SuiteConfig& cfg);
std::vector<CaseResult> battery_kashiwara(const SuiteConfig& cfg);
std::vector<CaseResult> battery_form_basic(const SuiteConfig& cfg);
std::vector<CaseResult> battery_form_gram();
std::vector<CaseResult> battery_verma_dichotomy();
std::vector<CaseResult> battery_verma_dualpath();
std::vector<CaseResult> battery_verma_scan();

/// Named aggregations: relations, omega, form, verma, identity18, all.
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

nlohmann::ordered_json suite_report_json(const SuiteReport& rep);

}  // namespace nqm
