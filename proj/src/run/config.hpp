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

#include <string>
#include <vector>

#include "report/report.hpp"

namespace heckelab {

class ConfigError : public std::runtime_error {
   public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Batch run configuration. Charges are normalized (multiples of e added)
/// when the gaps fall below n in cyclotomic modes.
struct RunConfig {
    int n = 2;
    int level = 1;
    int e = 2;  // also the prime p in degenerate-p mode
    std::vector<long> charge;          // empty: default separated charge
    std::string mode = "cyclo";        // cyclo | degenerate-p | linear-quiver | generic-t
    std::string system = "";           // murphy | rational | diamond (default per suite)
    std::string gamma = "";            // murphy | klr (default per system)
    std::vector<std::string> suites;   // see run_suite
    std::string gram_variant = "murphy-generic";
    int jobs = 1;
    bool timing = false;
    std::string out;

    static RunConfig from_json(const json& j);
    json to_json() const;
    void validate() const;
};

struct SuiteReport {
    json config_echo;
    std::vector<VerificationReport> reports;
    json extras = json::object();  // per-suite structured payloads
    double seconds = 0.0;

    bool pass() const {
        for (const auto& r : reports)
            if (!r.pass()) return false;
        return true;
    }
    json to_json(bool with_timing) const;
};

SuiteReport run_suite(const RunConfig& config);

}  // namespace heckelab
