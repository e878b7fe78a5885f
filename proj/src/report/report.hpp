/*
   Copyright 2026 the heckelab developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace heckelab {

using json = nlohmann::ordered_json;

/// One verified relation/identity instance: machine-readable pass/fail with
/// a witness on failure.
struct CheckResult {
    std::string relation;
    json instance;
    bool pass = false;
    json witness;  // null unless failed
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    void add(std::string relation, json instance, bool pass, json witness = nullptr) {
        checks.push_back({std::move(relation), std::move(instance), pass, std::move(witness)});
    }
    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
    json to_json() const;
};

}  // namespace heckelab
