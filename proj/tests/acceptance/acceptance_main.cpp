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

// Acceptance suite: every headline identity at desk scale, exact arithmetic,
// one pass/fail line per criterion. Exit status 0 iff everything passes.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <vector>

#include "algebra/integral.hpp"
#include "gram/gram.hpp"
#include "graded/bbasis.hpp"
#include "klr/deform.hpp"
#include "klr/specialize.hpp"

using namespace heckelab;

namespace {

struct Criterion {
    int index;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

std::shared_ptr<System> make(int n, int level, std::vector<long> kappa, Mode mode,
                             SystemKind kind, GammaSeed seed) {
    auto ct = charge_tools(kappa, n, mode.quantum_char());
    auto u = std::make_shared<Universe>(n, level, ct.normalized, mode.quantum_char());
    return std::make_shared<System>(u, mode, kind, seed);
}

std::vector<long> levelcharge(int level, long step) {
    std::vector<long> kappa;
    for (int l = level - 1; l >= 0; --l) kappa.push_back(l * step);
    return kappa;
}

bool note_failures(const VerificationReport& rep, std::string& detail) {
    if (rep.pass()) return true;
    for (const auto& c : rep.checks)
        if (!c.pass) {
            detail = rep.suite + "/" + c.relation + " " + c.instance.dump();
            return false;
        }
    return false;
}

bool criterion_rank(std::string& detail) {
    auto check = [&](int n, int level) {
        long total = 0;
        for (const auto& lam : enumerate_multipartitions(n, level)) {
            long d = (long)std_tableaux(lam).size();
            total += d * d;
        }
        long expected = 1;
        for (int k = 1; k <= n; ++k) expected *= k;
        for (int k = 0; k < n; ++k) expected *= level;
        if (total != expected) {
            detail = "rank mismatch at n=" + std::to_string(n) +
                     " level=" + std::to_string(level);
            return false;
        }
        return true;
    };
    for (int n = 0; n <= 5; ++n)
        if (!check(n, 1)) return false;
    for (int n = 0; n <= 4; ++n)
        if (!check(n, 2)) return false;
    return true;
}

bool criterion_hecke(std::string& detail) {
    for (int e : {2, 3}) {
        for (auto [n, level] :
             std::vector<std::pair<int, int>>{{5, 1}, {4, 1}, {4, 2}, {3, 1}, {3, 2}}) {
            for (SystemKind kind : {SystemKind::Murphy, SystemKind::DiamondKLR}) {
                auto sys = make(n, level, levelcharge(level, n), Mode::cyclo(e), kind,
                                kind == SystemKind::Murphy ? GammaSeed::MurphySeed
                                                           : GammaSeed::KLRSeed);
                if (!note_failures(verify_hecke_relations(*sys), detail)) {
                    detail += " [" + kind_name(kind) + " e=" + std::to_string(e) + "]";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_thm_a(std::string& detail) {
    for (int e : {2, 3, 4})
        for (auto [n, level] :
             std::vector<std::pair<int, int>>{{5, 1}, {4, 1}, {3, 1}, {4, 2}, {3, 2}}) {
            auto sys = make(n, level, levelcharge(level, n), Mode::cyclo(e),
                            SystemKind::DiamondKLR, GammaSeed::KLRSeed);
            if (!note_failures(verify_deformation_relations(*sys), detail) ||
                !note_failures(crosscheck_klr_lift(*sys), detail)) {
                detail += " [e=" + std::to_string(e) + " n=" + std::to_string(n) + "]";
                return false;
            }
        }
    return true;
}

bool criterion_specialize(std::string& detail) {
    for (int e : {2, 3, 4})
        for (auto [n, level] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}}) {
            auto sys = make(n, level, levelcharge(level, n), Mode::cyclo(e),
                            SystemKind::DiamondKLR, GammaSeed::KLRSeed);
            TriangularBasis psi = build_psi_basis(*sys);
            if (!note_failures(specialize_and_verify_klr(*sys, psi), detail)) {
                detail += " [cyclo e=" + std::to_string(e) + "]";
                return false;
            }
        }
    for (int n = 2; n <= 4; ++n) {
        auto sys = make(n, 1, {0}, Mode::degenerate_p(3), SystemKind::DiamondKLR,
                        GammaSeed::KLRSeed);
        if (!note_failures(verify_deformation_relations(*sys), detail)) {
            detail += " [degenerate corollary]";
            return false;
        }
        TriangularBasis psi = build_psi_basis(*sys);
        if (!note_failures(specialize_and_verify_klr(*sys, psi), detail)) {
            detail += " [degenerate mod p]";
            return false;
        }
    }
    return true;
}

bool criterion_gram(std::string& detail) {
    for (auto [n, level] : std::vector<std::pair<int, int>>{{4, 1}, {3, 1}, {4, 2}, {3, 2}}) {
        auto kappa = strict_charge(levelcharge(level, n + 1), n);
        auto u = std::make_shared<Universe>(n, level, kappa, 0);
        auto sys = std::make_shared<System>(u, Mode::generic_t(), SystemKind::Murphy,
                                            GammaSeed::MurphySeed);
        if (!note_failures(gram_suite(*sys, GramVariant::MurphyGeneric, 2), detail) ||
            !note_failures(gram_suite(*sys, GramVariant::DegenerateT1, 2), detail) ||
            !note_failures(positivity_sweep(n, level, kappa), detail)) {
            detail += " [n=" + std::to_string(n) + " level=" + std::to_string(level) + "]";
            return false;
        }
    }
    return true;
}

bool criterion_psi(std::string& detail) {
    for (int e : {2, 3})
        for (auto [n, level] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {2, 2}}) {
            auto sys = make(n, level, levelcharge(level, n), Mode::cyclo(e),
                            SystemKind::DiamondKLR, GammaSeed::KLRSeed);
            TriangularBasis psi = build_psi_basis(*sys);
            if (!note_failures(psi_triangularity_report(*sys, psi), detail) ||
                !note_failures(graded_consistency_check(*sys, psi), detail)) {
                detail += " [e=" + std::to_string(e) + "]";
                return false;
            }
            // gamma_t is a unit multiple of Phi_e(t)^{deg t}
            bool saw = false;
            for (const auto& c : property_suite(*sys).checks)
                if (c.relation == "klr-gamma-unit") {
                    saw = true;
                    if (!c.pass) {
                        detail = "klr-gamma-unit " + c.instance.dump();
                        return false;
                    }
                }
            if (!saw) {
                detail = "klr-gamma-unit checks missing";
                return false;
            }
        }
    return true;
}

bool criterion_bbasis(std::string& detail) {
    struct Cfg {
        int n, level, e;
        std::vector<long> kappa;
    };
    for (const Cfg& cfg : {Cfg{3, 1, 2, {0}}, Cfg{2, 2, 2, {2, 0}}, Cfg{3, 3, 3, {9, 4, 0}}}) {
        auto sys = make(cfg.n, cfg.level, cfg.kappa, Mode::cyclo(cfg.e),
                        SystemKind::DiamondKLR, GammaSeed::KLRSeed);
        TriangularBasis psi = build_psi_basis(*sys);
        BBasis primary = build_b_basis(*sys, psi, false);
        BBasis alternate = build_b_basis(*sys, psi, true);
        if (!note_failures(b_basis_reports(*sys, psi, primary, alternate), detail)) {
            detail += " [n=" + std::to_string(cfg.n) + " level=" + std::to_string(cfg.level) + "]";
            return false;
        }
        if (cfg.level == 3) {
            // the worked example: B'_{t^lam t} = psi_{t^lam t} + (2/3) psi_{t^lam t^lam}
            const Universe& u = sys->U();
            int sh = u.shape_index(Multipartition::parse("1|1|1"));
            int tcol = u.num_tabs(sh) - 1;
            const BBasisElement& B = primary.at({sh, 0, tcol});
            Scalar expected = Scalar::of_rat(sys->mode(), Rat(Int(2), Int(3)));
            if (!B.b_prime.count({sh, 0, 0}) || !(B.b_prime.at({sh, 0, 0}) == expected) ||
                B.b_prime.size() != 2) {
                detail = "worked example coefficient is not 2/3";
                return false;
            }
        }
    }
    return true;
}

bool criterion_nilpotency(std::string& detail) {
    for (int e : {2, 3, 4})
        for (auto [n, level] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}}) {
            auto sys = make(n, level, levelcharge(level, n), Mode::cyclo(e),
                            SystemKind::DiamondKLR, GammaSeed::KLRSeed);
            std::vector<NilpotencyObservation> obs;
            if (!note_failures(nilpotency_checks(*sys, &obs), detail)) {
                detail += " [e=" + std::to_string(e) + "]";
                return false;
            }
        }
    // the level bound y_r^ell = 0 at e = 5 > n = 4, level 2
    auto big = make(4, 2, levelcharge(2, 5), Mode::cyclo(5), SystemKind::DiamondKLR,
                    GammaSeed::KLRSeed);
    VerificationReport rep = nilpotency_checks(*big);
    bool saw = false;
    for (const auto& c : rep.checks)
        if (c.relation == "nilpotent-level-bound") saw = true;
    if (!saw) {
        detail = "level bound checks missing at e=5";
        return false;
    }
    return note_failures(rep, detail);
}

bool criterion_appendix(std::string& detail) {
    for (auto [n, level] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {2, 2}}) {
        std::vector<long> kappa((std::size_t)level, 0);
        auto u = std::make_shared<Universe>(n, level, kappa, 0);
        auto sys = std::make_shared<System>(u, Mode::linear_quiver(),
                                            SystemKind::LinearQuiver, GammaSeed::MurphySeed);
        if (!note_failures(validate_sncs(*sys), detail) ||
            !note_failures(verify_deformation_relations(*sys), detail) ||
            !note_failures(crosscheck_klr_lift(*sys), detail) ||
            !note_failures(nilpotency_checks(*sys), detail)) {
            detail += " [n=" + std::to_string(n) + " level=" + std::to_string(level) + "]";
            return false;
        }
    }
    return true;
}

bool criterion_properties(std::string& detail) {
    struct Cfg {
        int n, level, e;
        SystemKind kind;
    };
    std::vector<Cfg> cfgs{{4, 1, 2, SystemKind::Murphy},    {4, 1, 2, SystemKind::DiamondKLR},
                          {4, 1, 3, SystemKind::DiamondKLR}, {4, 2, 2, SystemKind::Murphy},
                          {4, 2, 2, SystemKind::DiamondKLR}};
    for (const Cfg& cfg : cfgs) {
        auto sys = make(cfg.n, cfg.level, levelcharge(cfg.level, cfg.n), Mode::cyclo(cfg.e),
                        cfg.kind,
                        cfg.kind == SystemKind::Murphy ? GammaSeed::MurphySeed
                                                       : GammaSeed::KLRSeed);
        if (!note_failures(validate_sncs(*sys), detail) ||
            !note_failures(property_suite(*sys), detail)) {
            detail += " [" + kind_name(cfg.kind) + " e=" + std::to_string(cfg.e) + "]";
            return false;
        }
    }
    // the generic Murphy gamma closed form at strict gaps, both levels
    for (int level : {1, 2}) {
        auto kappa = strict_charge(levelcharge(level, 5), 4);
        auto u = std::make_shared<Universe>(4, level, kappa, 0);
        auto gen = std::make_shared<System>(u, Mode::generic_t(), SystemKind::Murphy,
                                            GammaSeed::MurphySeed);
        if (!note_failures(property_suite(*gen), detail)) {
            detail += " [generic level=" + std::to_string(level) + "]";
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria{
        {1, "rank: sum |Std|^2 = level^n n!", 1.0, criterion_rank},
        {2, "Hecke relations in Murphy and diamond systems", 60.0, criterion_hecke},
        {3, "deformed KLR presentation over Q(zeta_e)(x)", 300.0, criterion_thm_a},
        {4, "specialization: quiver relations at x=0 and mod p", 120.0, criterion_specialize},
        {5, "integral Gram determinant factorization", 300.0, criterion_gram},
        {6, "graded psi basis: triangularity, degrees, gamma units", 180.0, criterion_psi},
        {7, "distinguished B basis with the worked example", 300.0, criterion_bbasis},
        {8, "nilpotency bounds for the KLR y generators", 120.0, criterion_nilpotency},
        {9, "appendix mode: linear quiver at t=1 over Q(x)", 120.0, criterion_appendix},
        {10, "seminormal property suites", 180.0, criterion_properties},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    bool all_pass = true;
    for (const auto& c : criteria) {
        if (only && c.index != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < c.budget_seconds;
        bool pass = ok && in_budget;
        all_pass = all_pass && pass;
        std::printf("[%s] criterion %2d: %s (%.1fs, budget %.0fs)%s%s\n",
                    pass ? "PASS" : "FAIL", c.index, c.title.c_str(), secs,
                    c.budget_seconds, ok ? "" : (" -- " + detail).c_str(),
                    !in_budget ? " -- over budget" : "");
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
