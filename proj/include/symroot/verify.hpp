#pragma once

// Exhaustive and randomized property sweeps over the library, shared by the
// command-line `verify` verb and the Python module.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace symroot {

struct VerifyOptions {
    std::optional<std::size_t> max_nodes;
    std::optional<std::size_t> max_rank;
    bool quick = false;
    std::uint64_t seed = 20240611;
};

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    /// Description of the first (smallest) failing instance.
    std::string first_failure;
    std::map<std::string, std::uint64_t> tallies;

    bool passed() const noexcept { return failures == 0; }
    void fail(const std::string& what);
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool passed() const noexcept;
};

const std::vector<std::string>& suite_names();

/// Runs one of restriction, extension, weyl, group, coclique; "all" runs
/// each in turn. Throws Error on an unknown suite name.
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& options);

nlohmann::json report_to_json(const std::vector<SuiteReport>& reports);
std::string report_to_text(const std::vector<SuiteReport>& reports);

}  // namespace symroot
