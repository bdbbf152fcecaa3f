#ifndef QLIE_REPORT_HPP
#define QLIE_REPORT_HPP

#include <string>
#include <vector>

#include "qlie/liebialg.hpp"

namespace qlie {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> residual; // one entry per violation, full text

    bool operator==(const CheckResult &) const = default;
};

/// Outcome of one CLI command. The JSON and text renderings carry the same
/// fields; only `seconds` is nondeterministic.
struct Report {
    std::string command;
    std::string status = "pass"; // pass | fail | error
    int order = 0;
    int hcap = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> output; // command payload (relations, elements, values)
    std::string message;             // error text, if any
    double seconds = 0;

    // Appends every check of `rep`, each name prefixed with `scope` + ":" when
    // scope is nonempty, and downgrades status on failure.
    void add(const ValidationReport &rep, const std::string &scope = "");
    bool pass() const;

    std::string to_json(bool with_timing = true) const;
    std::string to_text() const;
};

Report report_from_json(const std::string &json);

} // namespace qlie

#endif
