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

#include "report/report.hpp"

namespace heckelab {

json VerificationReport::to_json() const {
    json out;
    out["suite"] = suite;
    out["pass"] = pass();
    out["checked"] = checks.size();
    out["failures"] = failures();
    json items = json::array();
    for (const auto& c : checks) {
        json item;
        item["relation"] = c.relation;
        item["instance"] = c.instance;
        item["pass"] = c.pass;
        if (!c.witness.is_null()) item["witness"] = c.witness;
        items.push_back(std::move(item));
    }
    out["checks"] = std::move(items);
    return out;
}

}  // namespace heckelab
