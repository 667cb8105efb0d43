#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace finegrad::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;
    std::string status;  // pass, fail, error
    std::string expected;
    std::string actual;
    std::string witness;               // set on fail and error
    std::vector<std::string> details;  // optional extra lines
};

struct Report {
    std::string command;
    std::vector<Check> checks;
    double seconds = 0;

    void add(std::string name, bool ok, std::string expected, std::string actual, std::string witness = {});
    void add_error(std::string name, std::string expected, std::string message);
    void sort();
    bool all_pass() const;
    std::string text() const;
    nlohmann::json json() const;
};

std::string version();

// target: f4, g3, d21a. alpha only for d21a; 0 and -1 are rejected.
Report theorem_check(const std::string& target, const std::optional<std::string>& alpha);

Report clifford_class(const std::string& config_path);

struct BuildOutput {
    std::string serialized;
    Report report;  // dimension and round-trip checks
};
// target: k10, g3, f4 (model cayley|tkk|quaternion), d21a
BuildOutput build(const std::string& target, const std::string& model, const std::optional<std::string>& alpha);

// one record per grading with its type, group and components; target k10, g3, f4, d21a
Report grading_report(const std::string& target, const std::optional<std::string>& alpha);

}  // namespace finegrad::cli
