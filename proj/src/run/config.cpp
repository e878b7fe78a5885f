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

#include "run/config.hpp"

#include <set>

namespace heckelab {

RunConfig RunConfig::from_json(const json& j) {
    RunConfig c;
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        try {
            if (k == "n")
                c.n = it.value().get<int>();
            else if (k == "level")
                c.level = it.value().get<int>();
            else if (k == "e" || k == "p")
                c.e = it.value().get<int>();
            else if (k == "charge")
                c.charge = it.value().get<std::vector<long>>();
            else if (k == "mode")
                c.mode = it.value().get<std::string>();
            else if (k == "system")
                c.system = it.value().get<std::string>();
            else if (k == "gamma")
                c.gamma = it.value().get<std::string>();
            else if (k == "suites")
                c.suites = it.value().get<std::vector<std::string>>();
            else if (k == "gram_variant")
                c.gram_variant = it.value().get<std::string>();
            else if (k == "jobs")
                c.jobs = it.value().get<int>();
            else if (k == "timing")
                c.timing = it.value().get<bool>();
            else if (k == "out")
                c.out = it.value().get<std::string>();
            else
                throw ConfigError("unknown config key: " + k);
        } catch (const json::exception& ex) {
            throw ConfigError("bad value for config key '" + k + "': " + ex.what());
        }
    }
    c.validate();
    return c;
}

json RunConfig::to_json() const {
    json j;
    j["n"] = n;
    j["level"] = level;
    j["e"] = e;
    j["charge"] = charge;
    j["mode"] = mode;
    j["system"] = system;
    j["gamma"] = gamma;
    j["suites"] = suites;
    j["gram_variant"] = gram_variant;
    j["jobs"] = jobs;
    return j;
}

void RunConfig::validate() const {
    if (n < 0) throw ConfigError("n must be non-negative");
    if (level < 1) throw ConfigError("level must be at least 1");
    static const std::set<std::string> modes{"cyclo", "degenerate-p", "linear-quiver",
                                             "generic-t"};
    if (!modes.count(mode)) throw ConfigError("unknown mode: " + mode);
    if (mode == "cyclo" && e < 2) throw ConfigError("cyclo mode needs e >= 2");
    if (mode == "degenerate-p") {
        if (e < 2) throw ConfigError("degenerate-p mode needs a prime p >= 2");
        for (int q = 2; q * q <= e; ++q)
            if (e % q == 0) throw ConfigError("degenerate-p mode needs p prime");
    }
    if (!charge.empty() && (int)charge.size() != level)
        throw ConfigError("charge length must equal level");
    static const std::set<std::string> systems{"", "murphy", "rational", "diamond"};
    if (!systems.count(system)) throw ConfigError("unknown system kind: " + system);
    static const std::set<std::string> gammas{"", "murphy", "klr"};
    if (!gammas.count(gamma)) throw ConfigError("unknown gamma seed: " + gamma);
    static const std::set<std::string> known{
        "hecke",  "sncs", "props",        "deformation", "klr",
        "nilpotency", "gram", "psi",      "b-basis",     "combinatorics"};
    for (const auto& s : suites)
        if (!known.count(s)) throw ConfigError("unknown suite: " + s);
    if (jobs < 1) throw ConfigError("jobs must be positive");
}

json SuiteReport::to_json(bool with_timing) const {
    json out;
    out["tool"] = "heckelab";
    out["version"] = "0.1.0";
    out["config"] = config_echo;
    out["overall_pass"] = pass();
    json list = json::array();
    for (const auto& r : reports) list.push_back(r.to_json());
    out["suites"] = std::move(list);
    if (!extras.empty()) out["extras"] = extras;
    if (with_timing) out["timing_seconds"] = seconds;
    return out;
}

}  // namespace heckelab
