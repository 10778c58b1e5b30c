#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubedens
{
    struct CheckResult
    {
        std::string name;
        /// Acceptance criterion number, absent for informational checks.
        std::optional<int> criterion;
        bool passed = false;
        std::vector<std::pair<std::string, std::string>> measured;
        std::vector<std::string> failures;
        double seconds = 0;
        double limit_seconds = 0;
    };

    struct CheckInfo
    {
        std::string name;
        std::optional<int> criterion;
        std::string summary;
        double limit_seconds;
    };

    [[nodiscard]] auto list_checks() -> std::vector<CheckInfo>;

    /// Suite names: every check name, "acceptance" (criteria 1 to 10), "all", and
    /// "cycle-d4" (both C_8 checks).
    [[nodiscard]] auto suite_names() -> std::vector<std::string>;

    /// Runs the checks of a suite in criterion order. Throws InvalidArgument for an
    /// unknown suite.
    [[nodiscard]] auto run_suite(const std::string & suite) -> std::vector<CheckResult>;

    [[nodiscard]] auto run_check(const std::string & name) -> CheckResult;

    /// One line: "PASS [3] c8-lower (0.41s < 10s) count=256 ...".
    [[nodiscard]] auto format_result_line(const CheckResult & r) -> std::string;
}
