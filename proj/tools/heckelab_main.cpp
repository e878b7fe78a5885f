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

// Batch driver for the exact Hecke/KLR verification suites. Builds a JSON
// request from command-line flags and hands it to the shared C API.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "heckelab/heckelab.h"

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    int n = 2;
    int level = 1;
    int e = 2;
    std::string charge;
    std::string mode = "cyclo";
    std::string system;
    std::string gamma;
    std::string out;
    int jobs = 1;
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "size of the symmetric group part");
    cmd->add_option("--level", o.level, "level (number of charge components)");
    cmd->add_option("--e", o.e, "quantum characteristic (the prime p in degenerate-p mode)");
    cmd->add_option("--charge", o.charge, "multicharge, comma separated (e.g. 5,0)");
    cmd->add_option("--mode", o.mode,
                    "scalar mode: cyclo | degenerate-p | linear-quiver | generic-t");
    cmd->add_option("--system", o.system, "coefficient system: murphy | rational | diamond");
    cmd->add_option("--gamma", o.gamma, "gamma seed: murphy | klr");
    cmd->add_option("--out", o.out, "write the JSON report to this path");
    cmd->add_option("--jobs", o.jobs, "worker threads (HECKELAB_JOBS overrides the default)");
    cmd->add_flag("--timing", o.timing, "include wall-clock timing in the JSON report");
}

ordered_json config_json(const CommonOpts& o, const std::vector<std::string>& suites,
                         const std::string& gram_variant = "") {
    ordered_json j;
    j["n"] = o.n;
    j["level"] = o.level;
    j["e"] = o.e;
    if (!o.charge.empty()) {
        std::vector<long> kappa;
        std::size_t pos = 0;
        while (pos < o.charge.size()) {
            std::size_t comma = o.charge.find(',', pos);
            kappa.push_back(std::stol(o.charge.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        j["charge"] = kappa;
    }
    j["mode"] = o.mode;
    if (!o.system.empty()) j["system"] = o.system;
    if (!o.gamma.empty()) j["gamma"] = o.gamma;
    j["suites"] = suites;
    if (!gram_variant.empty()) j["gram_variant"] = gram_variant;
    j["jobs"] = o.jobs;
    if (o.timing) j["timing"] = true;
    return j;
}

int emit(hl_session* session, hl_status status, char* result, const std::string& out_path) {
    if (result) {
        if (out_path.empty()) {
            std::cout << result;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            f << result;
        }
        hl_string_free(result);
    }
    switch (status) {
        case HL_OK: return 0;
        case HL_ERR_VERIFY: return 1;
        default:
            std::cerr << "heckelab: " << hl_last_error(session) << "\n";
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heckelab: exact seminormal-form verification for cyclotomic Hecke/KLR algebras"};
    app.require_subcommand(1);

    int default_jobs = 1;
    if (const char* env = std::getenv("HECKELAB_JOBS")) default_jobs = std::max(1, std::atoi(env));

    CommonOpts vo, go, po, bo, so;
    vo.jobs = go.jobs = po.jobs = bo.jobs = so.jobs = default_jobs;

    auto* verify = app.add_subcommand("verify", "run verification sweeps");
    std::vector<std::string> verify_suites;
    verify
        ->add_option("suite", verify_suites,
                     "one or more of: hecke sncs props deformation klr nilpotency combinatorics")
        ->required();
    add_common(verify, vo);

    auto* gram = app.add_subcommand("gram", "Gram determinants and factorizations");
    std::string variant = "murphy-generic";
    std::string csv_path;
    gram->add_option("--variant", variant, "murphy-generic | degenerate-t1 | psi-graded");
    gram->add_option("--csv", csv_path, "also write a CSV table of shapes");
    add_common(gram, go);

    auto* psi = app.add_subcommand("psi-basis", "construct and verify the graded psi basis");
    add_common(psi, po);

    auto* bb = app.add_subcommand("b-basis", "construct and verify the distinguished B basis");
    add_common(bb, bo);

    auto* run = app.add_subcommand("suite", "run an arbitrary suite selection");
    std::vector<std::string> run_suites;
    run->add_option("--suite", run_suites, "suites to run")->required();
    std::string run_variant = "murphy-generic";
    run->add_option("--variant", run_variant, "gram variant when the gram suite is selected");
    add_common(run, so);

    auto* tabs = app.add_subcommand("tableaux", "standard tableaux with residues and degrees");
    std::string shape, tab_charge;
    int tab_e = 2;
    std::string tab_out;
    tabs->add_option("--shape", shape, "multipartition, e.g. 3,1|2")->required();
    tabs->add_option("--charge", tab_charge, "multicharge, comma separated");
    tabs->add_option("--e", tab_e, "quantum characteristic");
    tabs->add_option("--out", tab_out, "write JSON to this path");

    CLI11_PARSE(app, argc, argv);

    hl_session* session = hl_session_new();
    if (!session) {
        std::cerr << "heckelab: out of memory\n";
        return 2;
    }
    int exit_code = 2;
    char* result = nullptr;

    if (verify->parsed()) {
        // `verify deformation` runs the mode-appropriate specialization too
        auto cfg = config_json(vo, verify_suites);
        hl_status st = hl_run_suite(session, cfg.dump().c_str(), &result);
        exit_code = emit(session, st, result, vo.out);
    } else if (gram->parsed()) {
        if (go.mode == "cyclo" && variant != "psi-graded") go.mode = "generic-t";
        auto cfg = config_json(go, {"gram"}, variant);
        hl_status st = hl_run_suite(session, cfg.dump().c_str(), &result);
        if (result && !csv_path.empty() && st != HL_ERR_CONFIG && st != HL_ERR_INTERNAL) {
            ordered_json rep = ordered_json::parse(result);
            std::ofstream csv(csv_path);
            auto field = [](const std::string& s) {
                std::string out = "\"";
                for (char c : s) {
                    if (c == '"') out += '"';
                    out += c;
                }
                return out + "\"";
            };
            csv << "shape,pass,det,N,exponents\n";
            if (rep.contains("extras") && rep["extras"].contains("gram_reports"))
                for (const auto& row : rep["extras"]["gram_reports"]) {
                    const auto& det = row["details"];
                    csv << field(row["shape"].get<std::string>()) << ','
                        << (row["pass"].get<bool>() ? "pass" : "FAIL") << ','
                        << field(det.contains("det")
                                     ? det["det"]["value"].get<std::string>()
                                 : det.contains("det_t1") ? det["det_t1"].get<std::string>()
                                                          : "")
                        << ',' << (det.contains("N") ? det["N"].dump() : "") << ','
                        << field(det.contains("exponents") ? det["exponents"].dump()
                                 : det.contains("p_exponents") ? det["p_exponents"].dump()
                                                               : "{}")
                        << '\n';
                }
        }
        exit_code = emit(session, st, result, go.out);
    } else if (psi->parsed()) {
        auto cfg = config_json(po, {"psi"});
        hl_status st = hl_run_suite(session, cfg.dump().c_str(), &result);
        exit_code = emit(session, st, result, po.out);
    } else if (bb->parsed()) {
        auto cfg = config_json(bo, {"b-basis"});
        hl_status st = hl_run_suite(session, cfg.dump().c_str(), &result);
        exit_code = emit(session, st, result, bo.out);
    } else if (run->parsed()) {
        auto cfg = config_json(so, run_suites, run_variant);
        hl_status st = hl_run_suite(session, cfg.dump().c_str(), &result);
        exit_code = emit(session, st, result, so.out);
    } else if (tabs->parsed()) {
        hl_status st = hl_tableaux(session, shape.c_str(), tab_charge.c_str(), tab_e, &result);
        exit_code = emit(session, st, result, tab_out);
    }

    hl_session_free(session);
    return exit_code;
}
