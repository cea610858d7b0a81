#include "anw/quadratic.hpp"

#include <random>

namespace anw {

RegularModuleElt dd_apply(const RootSystem& sys, int i, int j, const RegularModuleElt& m,
                          const BruhatConfig& cfg, LevelTrace* trace) {
    if (i == j) throw std::domain_error("dd_apply: equal indices");
    if (i > j) return module_negate(dd_apply(sys, j, i, m, cfg, trace));
    RootRef beta = sys.eps_root(i, j);
    return dd_level_sum(sys, m, beta, cfg, trace);
}

RegularModuleElt t_apply(const RootSystem& sys, int i, const RegularModuleElt& m,
                         const BruhatConfig& cfg) {
    RootRef alpha = sys.eps_root(i, i + 1);
    AffineElt t = AffineElt::translation(sys, sys.coroot_coeffs(alpha));
    RegularModuleElt out{m.v, {}};
    for (const auto& [x, f] : m.terms) {
        AffineElt y = x.mul(sys, t);
        if (regularity_slack(sys, y) < cfg.margin) throw MarginExhausted();
        auto [it, inserted] = out.terms.emplace(y, f);
        if (!inserted) it->second += f;
    }
    return out;
}

RegularModuleElt dunkl_apply(const RootSystem& sys, int i, const RegularModuleElt& m,
                             const BruhatConfig& cfg) {
    const int n = sys.rank() + 1;
    RegularModuleElt out = module_zero(m.v);
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        out = module_add(sys, out, dd_apply(sys, i, j, m, cfg));
    }
    return out;
}

bool Prop51Report::all_pass() const {
    for (const QuadCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

Prop51Report verify_prop51(const RootSystem& sys, int trials, std::uint64_t seed,
                           const BruhatConfig& cfg) {
    const int n = sys.rank() + 1;
    Prop51Report report;
    std::mt19937_64 rng(seed);
    std::vector<WeylElt> weyl = WeylElt::enumerate(sys);
    WeylElt v = WeylElt::identity(sys);

    // margin budget: two operator applications per relation, each moving the
    // translation part by at most one coroot
    long long want_slack = cfg.margin + 16;

    for (int t = 0; t < trials; ++t) {
        // force the identity and the longest element into the sample so both
        // proof cases occur
        WeylElt w;
        if (t == 0) {
            w = WeylElt::identity(sys);
        } else if (t == 1) {
            w = weyl[0];
            for (const WeylElt& cand : weyl)
                if (cand.length() > w.length()) w = cand;
        } else {
            w = weyl[rng() % weyl.size()];
        }
        IntVec lam = random_superregular_lam(sys, rng(), want_slack);
        AffineElt x(w, lam);
        RegularModuleElt mx = module_basis(sys, v, x, Polynomial::constant(sys.rank(), Rat(1)));
        std::string instance = "trial " + std::to_string(t);

        // (i) squares
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                LevelTrace trace;
                RegularModuleElt first = dd_apply(sys, i, j, mx, cfg, &trace);
                RegularModuleElt sq = dd_apply(sys, i, j, first, cfg);
                bool ok;
                if (j == i + 1) {
                    ok = module_equal(sq, t_apply(sys, i, mx, cfg));
                    // classify the contributing first level
                    long long lam_alpha = sys.pair_root_coroot(
                        sys.root_coeffs(sys.eps_root(i, j)), lam);
                    for (const auto& [root, k] : trace) {
                        (void)root;
                        if (k == -lam_alpha) report.case1_seen = true;
                        if (k == -lam_alpha - 1) report.case2_seen = true;
                    }
                } else {
                    ok = sq.terms.empty();
                }
                report.checks.push_back({"prop51.i DD(" + std::to_string(i) +
                                             std::to_string(j) + ")^2",
                                         instance, ok});
            }
        }

        // (ii) disjoint commutation
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = i + 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) {
                        if (k == i || k == j || l == i || l == j) continue;
                        RegularModuleElt ab =
                            dd_apply(sys, k, l, dd_apply(sys, i, j, mx, cfg), cfg);
                        RegularModuleElt ba =
                            dd_apply(sys, i, j, dd_apply(sys, k, l, mx, cfg), cfg);
                        report.checks.push_back(
                            {"prop51.ii [DD(" + std::to_string(i) + std::to_string(j) +
                                 "),DD(" + std::to_string(k) + std::to_string(l) + ")]",
                             instance, module_equal(ab, ba)});
                    }

        // (iii) three-term relation, cyclic form
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    RegularModuleElt sum = dd_apply(sys, j, k, dd_apply(sys, i, j, mx, cfg), cfg);
                    sum = module_add(sys, sum,
                                     dd_apply(sys, k, i, dd_apply(sys, j, k, mx, cfg), cfg));
                    sum = module_add(sys, sum,
                                     dd_apply(sys, i, j, dd_apply(sys, k, i, mx, cfg), cfg));
                    report.checks.push_back(
                        {"prop51.iii cyclic(" + std::to_string(i) + std::to_string(j) +
                             std::to_string(k) + ")",
                         instance, sum.terms.empty()});
                }
    }
    return report;
}

}  // namespace anw
