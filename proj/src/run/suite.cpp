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

#include <chrono>

#include "gram/gram.hpp"
#include "graded/bbasis.hpp"
#include "klr/deform.hpp"
#include "klr/specialize.hpp"
#include "run/config.hpp"

namespace heckelab {

namespace {

Mode mode_of(const RunConfig& c) {
    if (c.mode == "cyclo") return Mode::cyclo(c.e);
    if (c.mode == "degenerate-p") return Mode::degenerate_p(c.e);
    if (c.mode == "linear-quiver") return Mode::linear_quiver();
    return Mode::generic_t();
}

SystemKind kind_of(const RunConfig& c, const std::string& suite) {
    if (c.mode == "linear-quiver") return SystemKind::LinearQuiver;
    if (c.system == "murphy") return SystemKind::Murphy;
    if (c.system == "rational") return SystemKind::Rational;
    if (c.system == "diamond") return SystemKind::DiamondKLR;
    // defaults per suite
    if (suite == "gram" && c.gram_variant != "psi-graded") return SystemKind::Murphy;
    if (c.mode == "generic-t") return SystemKind::Murphy;
    if (suite == "hecke" || suite == "sncs" || suite == "props") return SystemKind::Murphy;
    return SystemKind::DiamondKLR;
}

GammaSeed seed_of(const RunConfig& c, SystemKind kind) {
    if (c.gamma == "murphy") return GammaSeed::MurphySeed;
    if (c.gamma == "klr") return GammaSeed::KLRSeed;
    return kind == SystemKind::DiamondKLR ? GammaSeed::KLRSeed : GammaSeed::MurphySeed;
}

std::vector<long> default_charge(const RunConfig& c) {
    std::vector<long> kappa;
    if (!c.charge.empty()) {
        kappa = c.charge;
    } else {
        // separated default: gaps of n (strict gaps for the generic Gram runs)
        long step = c.mode == "generic-t" ? c.n + 1 : c.n;
        for (int l = c.level - 1; l >= 0; --l) kappa.push_back((long)l * step);
    }
    if (c.mode == "generic-t") return strict_charge(kappa, c.n);
    if (c.mode == "linear-quiver") return kappa;
    return charge_tools(kappa, c.n, c.e).normalized;
}

}  // namespace

SuiteReport run_suite(const RunConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    config.validate();
    SuiteReport out;

    std::vector<std::string> suites = config.suites;
    if (suites.empty()) suites = {"combinatorics", "hecke"};

    Mode mode = mode_of(config);
    std::vector<long> kappa = default_charge(config);
    auto universe =
        std::make_shared<Universe>(config.n, config.level, kappa, mode.quantum_char());

    json echo = config.to_json();
    echo["charge"] = kappa;  // echo the normalized charge
    out.config_echo = echo;

    // systems are shared between suites
    std::map<std::pair<SystemKind, GammaSeed>, std::shared_ptr<System>> systems;
    auto system_for = [&](const std::string& suite) -> System& {
        SystemKind kind = kind_of(config, suite);
        GammaSeed seed = seed_of(config, kind);
        auto key = std::make_pair(kind, seed);
        auto it = systems.find(key);
        if (it == systems.end())
            it = systems.emplace(key, std::make_shared<System>(universe, mode, kind, seed)).first;
        return *it->second;
    };

    std::map<const System*, std::shared_ptr<TriangularBasis>> psi_cache;
    auto psi_for = [&](System& sys) -> TriangularBasis& {
        auto it = psi_cache.find(&sys);
        if (it == psi_cache.end())
            it = psi_cache.emplace(&sys, std::make_shared<TriangularBasis>(build_psi_basis(sys)))
                     .first;
        return *it->second;
    };

    for (const std::string& suite : suites) {
        if (suite == "combinatorics") {
            VerificationReport rep;
            rep.suite = "combinatorics";
            // rank: sum |Std(lam)|^2 = ell^n n!
            long total = 0;
            for (int sh = 0; sh < universe->num_shapes(); ++sh) {
                long d = universe->num_tabs(sh);
                total += d * d;
            }
            long expected = 1;
            for (int k = 1; k <= config.n; ++k) expected *= k;
            for (int k = 0; k < config.n; ++k) expected *= config.level;
            rep.add("rank", json{{"n", config.n}, {"level", config.level}}, total == expected,
                    total == expected ? json(nullptr)
                                      : json{{"total", total}, {"expected", expected}});
            // degree recurrence for adjacent pairs
            {
                bool ok = true;
                json w = nullptr;
                int e = universe->e();
                for (int g = 0; g < universe->total_tabs() && ok; ++g) {
                    TabRef s = universe->flat_tab(g);
                    for (int r = 1; r < config.n && ok; ++r) {
                        auto t = universe->swapped(s, r);
                        if (!t || universe->perm(s).length() > universe->perm(*t).length())
                            continue;
                        int cij = cartan(universe->residue(s, r), universe->residue(s, r + 1), e);
                        if (universe->degree(s) != universe->degree(*t) + cij) {
                            ok = false;
                            w = json{{"s", universe->tab(s).str()}, {"r", r}};
                        }
                    }
                }
                rep.add("degree-recurrence", json{{"e", universe->e()}}, ok, w);
            }
            rep.merge(positivity_sweep(config.n, config.level, kappa));
            out.reports.push_back(std::move(rep));
        } else if (suite == "hecke") {
            out.reports.push_back(verify_hecke_relations(system_for(suite)));
        } else if (suite == "sncs") {
            out.reports.push_back(validate_sncs(system_for(suite)));
        } else if (suite == "props") {
            out.reports.push_back(property_suite(system_for(suite)));
        } else if (suite == "deformation") {
            if (mode.tag == ModeTag::GenericT)
                throw ConfigError("deformation suite needs an idempotent-subring mode");
            System& sys = system_for(suite);
            out.reports.push_back(verify_deformation_relations(sys));
            out.reports.push_back(crosscheck_klr_lift(sys));
        } else if (suite == "klr") {
            if (mode.tag != ModeTag::CycloLocal && mode.tag != ModeTag::DegenerateP)
                throw ConfigError("klr suite needs cyclo or degenerate-p mode");
            System& sys = system_for(suite);
            out.reports.push_back(specialize_and_verify_klr(sys, psi_for(sys)));
        } else if (suite == "nilpotency") {
            if (mode.tag == ModeTag::GenericT)
                throw ConfigError("nilpotency suite needs an idempotent-subring mode");
            System& sys = system_for(suite);
            std::vector<NilpotencyObservation> obs;
            out.reports.push_back(nilpotency_checks(sys, &obs));
            json jo = json::array();
            for (const auto& o : obs)
                jo.push_back(json{{"i", o.i}, {"r", o.r}, {"bound", o.bound},
                                  {"observed_minimal", o.observed}});
            out.extras["nilpotency_observations"] = std::move(jo);
        } else if (suite == "gram") {
            GramVariant v = gram_variant_from_name(config.gram_variant);
            if (v == GramVariant::PsiGraded && mode.tag != ModeTag::CycloLocal)
                throw ConfigError("psi-graded gram needs cyclo mode");
            if (v != GramVariant::PsiGraded && mode.tag != ModeTag::GenericT)
                throw ConfigError("generic gram variants need generic-t mode");
            System& sys = system_for(suite);
            std::vector<GramShapeReport> shapes;
            out.reports.push_back(gram_suite(sys, v, config.jobs, &shapes));
            json rows = json::array();
            for (const auto& r : shapes)
                rows.push_back(json{{"shape", r.shape}, {"pass", r.pass},
                                    {"details", r.details}});
            out.extras["gram_reports"] = std::move(rows);
        } else if (suite == "psi") {
            if (mode.tag == ModeTag::GenericT || mode.tag == ModeTag::LinearQuiver)
                throw ConfigError("psi suite needs cyclo or degenerate-p mode");
            System& sys = system_for(suite);
            TriangularBasis& psi = psi_for(sys);
            out.reports.push_back(psi_triangularity_report(sys, psi));
            out.reports.push_back(graded_consistency_check(sys, psi));
            json elems = json::array();
            for (const auto& [key, elem] : psi.elems) {
                json je;
                je["shape"] = universe->shape(key.shape).str();
                je["s"] = universe->tab(key.row()).str();
                je["t"] = universe->tab(key.col()).str();
                je["degree"] = universe->degree(key.row()) + universe->degree(key.col());
                json fc = json::array();
                for (const auto& [k, v] : elem.coeffs())
                    fc.push_back(json{{"s", universe->tab(k.row()).str()},
                                      {"t", universe->tab(k.col()).str()},
                                      {"value", v.str()}});
                je["f_coords"] = std::move(fc);
                elems.push_back(std::move(je));
            }
            out.extras["psi_basis"] = std::move(elems);
        } else if (suite == "b-basis") {
            if (mode.tag != ModeTag::CycloLocal)
                throw ConfigError("b-basis suite needs cyclo mode");
            System& sys = system_for(suite);
            TriangularBasis& psi = psi_for(sys);
            BBasis primary = build_b_basis(sys, psi, false);
            BBasis alternate = build_b_basis(sys, psi, true);
            out.reports.push_back(b_basis_reports(sys, psi, primary, alternate));
            json elems = json::array();
            for (const auto& elem : primary.elems) {
                json je;
                je["shape"] = universe->shape(elem.key.shape).str();
                je["s"] = universe->tab(elem.key.row()).str();
                je["t"] = universe->tab(elem.key.col()).str();
                json fc = json::array();
                for (const auto& [k, v] : elem.f_coords.coeffs())
                    fc.push_back(json{{"s", universe->tab(k.row()).str()},
                                      {"t", universe->tab(k.col()).str()},
                                      {"value", v.str()}});
                je["f_coords"] = std::move(fc);
                json pp = json::array();
                for (const auto& [k, v] : elem.f_coords.coeffs()) {
                    if (k == elem.key) continue;
                    pp.push_back(json{{"s", universe->tab(k.row()).str()},
                                      {"t", universe->tab(k.col()).str()},
                                      {"p", v.str()}});
                }
                je["p_polynomials"] = std::move(pp);
                json pc = json::array();
                for (const auto& [k, v] : elem.psi_at_zero)
                    pc.push_back(json{{"s", universe->tab(k.row()).str()},
                                      {"t", universe->tab(k.col()).str()},
                                      {"value", v.str()}});
                je["psi_at_zero"] = std::move(pc);
                je["degree"] = universe->degree(elem.key.row()) +
                               universe->degree(elem.key.col());
                elems.push_back(std::move(je));
            }
            out.extras["b_basis"] = std::move(elems);
        }
    }

    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace heckelab
