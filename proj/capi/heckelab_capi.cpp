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

#include "heckelab/heckelab.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

#include "arith/scalar.hpp"
#include "combi/universe.hpp"
#include "run/config.hpp"

using namespace heckelab;

struct hl_session {
    std::mutex mutex;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hl_status fail(hl_session* session, hl_status code, const std::string& message) {
    if (session) session->last_error = message;
    return code;
}

}  // namespace

extern "C" {

const char* hl_version(void) { return "0.1.0"; }

hl_session* hl_session_new(void) {
    try {
        return new hl_session();
    } catch (...) {
        return nullptr;
    }
}

void hl_session_free(hl_session* session) { delete session; }

const char* hl_last_error(const hl_session* session) {
    return session ? session->last_error.c_str() : "";
}

hl_status hl_run_suite(hl_session* session, const char* config_json, char** result_json) {
    if (!session || !config_json || !result_json)
        return fail(session, HL_ERR_CONFIG, "null argument");
    std::lock_guard<std::mutex> lock(session->mutex);
    *result_json = nullptr;
    try {
        json parsed = json::parse(config_json);
        RunConfig config = RunConfig::from_json(parsed);
        SuiteReport report = run_suite(config);
        *result_json = dup_string(report.to_json(config.timing).dump(2) + "\n");
        if (!*result_json) return fail(session, HL_ERR_INTERNAL, "allocation failed");
        return report.pass() ? HL_OK : HL_ERR_VERIFY;
    } catch (const json::exception& ex) {
        return fail(session, HL_ERR_CONFIG, std::string("config parse error: ") + ex.what());
    } catch (const ConfigError& ex) {
        return fail(session, HL_ERR_CONFIG, ex.what());
    } catch (const std::exception& ex) {
        return fail(session, HL_ERR_INTERNAL, ex.what());
    }
}

hl_status hl_tableaux(hl_session* session, const char* shape, const char* charge_csv, int e,
                      char** result_json) {
    if (!session || !shape || !result_json)
        return fail(session, HL_ERR_CONFIG, "null argument");
    std::lock_guard<std::mutex> lock(session->mutex);
    *result_json = nullptr;
    try {
        Multipartition lam = Multipartition::parse(shape);
        std::vector<long> kappa;
        if (charge_csv && *charge_csv) {
            std::string s(charge_csv);
            std::size_t pos = 0;
            while (pos < s.size()) {
                std::size_t comma = s.find(',', pos);
                kappa.push_back(std::stol(s.substr(pos, comma - pos)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            for (int l = lam.level() - 1; l >= 0; --l) kappa.push_back((long)l * lam.size());
        }
        if ((int)kappa.size() != lam.level())
            return fail(session, HL_ERR_CONFIG, "charge length must equal the level");
        json out;
        out["shape"] = lam.str();
        out["e"] = e;
        out["charge"] = kappa;
        json tabs = json::array();
        for (const StdTableau& t : std_tableaux(lam)) {
            json jt;
            jt["tableau"] = t.str();
            json res = json::array(), con = json::array();
            for (int k = 1; k <= lam.size(); ++k) {
                con.push_back(node_content(t.node_of(k), kappa));
                res.push_back(node_residue(t.node_of(k), kappa, e));
            }
            jt["contents"] = std::move(con);
            jt["residues"] = std::move(res);
            jt["degree"] = tableau_degree(t, kappa, e);
            tabs.push_back(std::move(jt));
        }
        out["tableaux"] = std::move(tabs);
        *result_json = dup_string(out.dump(2) + "\n");
        if (!*result_json) return fail(session, HL_ERR_INTERNAL, "allocation failed");
        return HL_OK;
    } catch (const std::exception& ex) {
        return fail(session, HL_ERR_CONFIG, ex.what());
    }
}

hl_status hl_scalar_roundtrip(hl_session* session, const char* mode, int e, const char* text,
                              char** result) {
    if (!session || !mode || !text || !result)
        return fail(session, HL_ERR_CONFIG, "null argument");
    std::lock_guard<std::mutex> lock(session->mutex);
    *result = nullptr;
    try {
        Mode m = Mode::generic_t();
        std::string ms(mode);
        if (ms == "cyclo")
            m = Mode::cyclo(e);
        else if (ms == "degenerate-p")
            m = Mode::degenerate_p(e);
        else if (ms == "linear-quiver")
            m = Mode::linear_quiver();
        else if (ms != "generic-t")
            return fail(session, HL_ERR_CONFIG, "unknown mode: " + ms);
        Scalar s = Scalar::parse(m, text);
        *result = dup_string(s.str());
        if (!*result) return fail(session, HL_ERR_INTERNAL, "allocation failed");
        return HL_OK;
    } catch (const std::exception& ex) {
        return fail(session, HL_ERR_CONFIG, ex.what());
    }
}

void hl_string_free(char* str) { std::free(str); }

}  // extern "C"
