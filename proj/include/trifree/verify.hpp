#ifndef TRIFREE_VERIFY_HPP
#define TRIFREE_VERIFY_HPP

#include <string>
#include <vector>

#include "trifree/io.hpp"

namespace trifree {

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string counterexample;  // empty iff passed
};

struct VerificationReport {
    std::string suite;
    int n = 0;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;

    bool passed() const;
    void add(std::string id, std::string description, bool ok, std::string counterexample = {});
};

// Suites: all, actions, diameter, isomorphism, geodesics, tableaux.
const std::vector<std::string>& suite_names();

// Largest n each suite accepts; all suites need n >= 5.
int suite_cap(const std::string& suite);

VerificationReport run_suite(const std::string& suite, int n);

// Human-readable text; timing is left out so output is reproducible.
std::string format_report(const VerificationReport& report);
json report_to_json(const VerificationReport& report);

}  // namespace trifree

#endif  // TRIFREE_VERIFY_HPP
