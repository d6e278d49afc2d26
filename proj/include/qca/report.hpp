// report.hpp — verification suite reports: per-instance pass/fail/skip
// counts with full counterexample payloads. A verifier's primary output is
// the counterexample, so failures carry both rendered sides.

#pragma once

#include "qca/scalar.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace qca {

struct Report {
    std::string suite;
    std::string context_name;
    std::string context_hash;
    long instances = 0, passed = 0, failed = 0, skipped = 0;
    nlohmann::json counterexamples = nlohmann::json::array();
    nlohmann::json skips = nlohmann::json::array();

    bool ok() const { return failed == 0; }

    void pass() {
        ++instances;
        ++passed;
    }
    void fail(const std::string& instance, const std::string& lhs, const std::string& rhs) {
        ++instances;
        ++failed;
        counterexamples.push_back({{"instance", instance}, {"lhs", lhs}, {"rhs", rhs}});
    }
    void skip(const std::string& instance, const std::string& reason) {
        ++instances;
        ++skipped;
        skips.push_back({{"instance", instance}, {"reason", reason}});
    }
    void check(bool okflag, const std::string& instance, const std::string& lhs,
               const std::string& rhs) {
        if (okflag) pass();
        else fail(instance, lhs, rhs);
    }

    nlohmann::json to_json() const {
        return {{"suite", suite},
                {"context", context_name},
                {"context_hash", context_hash},
                {"instances", instances},
                {"passed", passed},
                {"failed", failed},
                {"skipped", skipped},
                {"counterexamples", counterexamples},
                {"skips", skips}};
    }

    std::string summary() const {
        return suite + " [" + context_name + "]: " + std::to_string(passed) + "/" +
               std::to_string(instances) + " passed, " + std::to_string(failed) + " failed, " +
               std::to_string(skipped) + " skipped";
    }
};

} // namespace qca
