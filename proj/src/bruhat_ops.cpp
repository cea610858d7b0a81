#include "anw/bruhat_ops.hpp"

#include <algorithm>
#include <random>

namespace anw {

namespace {

void add_into(std::map<AffineElt, Polynomial>& t, const AffineElt& x, const Polynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace

ChamberDecomposition decompose(const RootSystem& sys, const AffineElt& x) {
    ChamberDecomposition d;
    d.w = x.finite();
    d.v = WeylElt::identity(sys);
    d.lam = x.translation_part();
    // Push lam into the antidominant cone; v tracks the chamber.
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < sys.rank(); ++i) {
            RootRef ai{sys.simple_root_index(i), +1};
            if (sys.pair_root_coroot(sys.root_coeffs(ai), d.lam) > 0) {
                d.lam = WeylElt::simple(sys, i).act_coroot(sys, d.lam);
                d.v = d.v.compose(WeylElt::simple(sys, i));
                moved = true;
            }
        }
    }
    for (int p = 0; p < sys.num_positive(); ++p)
        if (sys.pair_root_coroot(sys.positive_roots()[p].coeffs, d.lam) == 0)
            throw ChamberUndefined();
    return d;
}

AffineElt recompose(const RootSystem& sys, const ChamberDecomposition& d) {
    return AffineElt(d.w, d.v.act_coroot(sys, d.lam));
}

long long regularity_slack(const RootSystem& sys, const IntVec& lam) {
    long long min_abs = -1;
    for (int p = 0; p < sys.num_positive(); ++p) {
        long long c = sys.pair_root_coroot(sys.positive_roots()[p].coeffs, lam);
        long long a = c < 0 ? -c : c;
        if (min_abs < 0 || a < min_abs) min_abs = a;
    }
    return min_abs - (2 * sys.weyl_order() + 2);
}

long long regularity_slack(const RootSystem& sys, const AffineElt& x) {
    return regularity_slack(sys, decompose(sys, x).lam);
}

bool is_superregular(const RootSystem& sys, const AffineElt& x) {
    try {
        return regularity_slack(sys, x) >= 1;
    } catch (const ChamberUndefined&) {
        return false;
    }
}

std::optional<AffineElt> lemma41_rule(const RootSystem& sys, const AffineElt& x,
                                      RootRef alpha, long long k) {
    if (k <= 0) throw std::domain_error("lemma41_rule: level must be positive");
    AffineElt y = x.mul(sys, AffineElt::reflection(sys, alpha, k));
    if (y.length(sys) == x.length(sys) - 1) return y;
    return std::nullopt;
}

RegularModuleElt module_basis(const RootSystem& sys, const WeylElt& v, const AffineElt& x,
                              Polynomial coeff) {
    ChamberDecomposition d = decompose(sys, x);
    if (!(d.v == v)) throw ChamberUndefined();
    if (regularity_slack(sys, d.lam) < 1) throw MarginExhausted();
    RegularModuleElt m{v, {}};
    add_into(m.terms, x, coeff);
    return m;
}

RegularModuleElt module_zero(const WeylElt& v) { return RegularModuleElt{v, {}}; }

bool module_equal(const RegularModuleElt& a, const RegularModuleElt& b) {
    return a.v == b.v && a.terms == b.terms;
}

RegularModuleElt module_add(const RootSystem& sys, const RegularModuleElt& a,
                            const RegularModuleElt& b) {
    (void)sys;
    RegularModuleElt out = a;
    for (const auto& [x, c] : b.terms) add_into(out.terms, x, c);
    return out;
}

RegularModuleElt module_negate(const RegularModuleElt& a) {
    RegularModuleElt out{a.v, {}};
    for (const auto& [x, c] : a.terms) out.terms.emplace(x, -c);
    return out;
}

RegularModuleElt lemma41_action(const RootSystem& sys, const RegularModuleElt& m,
                                RootRef alpha, long long k, const BruhatConfig& cfg,
                                std::vector<std::pair<RootRef, long long>>* trace) {
    RegularModuleElt out{m.v, {}};
    for (const auto& [x, c] : m.terms) {
        auto y = lemma41_rule(sys, x, alpha, k);
        if (!y) continue;
        if (regularity_slack(sys, *y) < cfg.margin) throw MarginExhausted();
        add_into(out.terms, *y, c);
        if (trace) trace->emplace_back(alpha, k);
    }
    return out;
}

CoverKind classify_cover(const RootSystem& sys, const AffineElt& x, RootRef alpha,
                         long long n) {
    ChamberDecomposition d = decompose(sys, x);
    if (regularity_slack(sys, d.lam) < 1) throw MarginExhausted();
    long long lam_alpha = sys.pair_root_coroot(sys.root_coeffs(alpha), d.lam);
    long long rho2 = sys.two_rho_pairing(alpha);
    WeylElt wv = d.w.compose(d.v);
    WeylElt salpha = WeylElt::reflection(sys, alpha);
    long long lwv = wv.length(), lwvs = wv.compose(salpha).length();
    long long lv = d.v.length(), lvs = d.v.compose(salpha).length();
    if (n == lam_alpha && lwv == lwvs - 1) return CoverKind::near1;
    if (n == lam_alpha + 1 && lwv == lwvs + rho2 - 1) return CoverKind::near2;
    if (n == 0 && lv == lvs + 1) return CoverKind::far3;
    if (n == -1 && lv == lvs - rho2 + 1) return CoverKind::far4;
    return CoverKind::none;
}

AffineElt cover_partner(const RootSystem& sys, const AffineElt& x, RootRef alpha,
                        long long n) {
    ChamberDecomposition d = decompose(sys, x);
    RootRef valpha = d.v.act(alpha);
    return x.mul(sys, AffineElt::reflection(sys, valpha, -n));
}

SCombination affine_bruhat_operator(const RootSystem& sys, const IntVec& mu,
                                    const AffineElt& x, const BruhatConfig& cfg) {
    ChamberDecomposition d = decompose(sys, x);
    if (regularity_slack(sys, d.lam) < cfg.margin) throw MarginExhausted();
    SCombination out;
    // (mu - wv mu) x
    IntVec wvmu = d.w.compose(d.v).act_weight(sys, mu);
    Polynomial head = Polynomial::weight_form(sys, mu) - Polynomial::weight_form(sys, wvmu);
    add_into(out, x, head);
    // near covers: conditions (1) and (2) of the classification
    for (int p = 0; p < sys.num_positive(); ++p) {
        RootRef alpha{p, +1};
        long long lam_alpha = sys.pair_root_coroot(sys.root_coeffs(alpha), d.lam);
        long long coeff = sys.pair_weight_coroot(mu, sys.coroot_coeffs(alpha));
        if (coeff == 0) continue;
        for (long long n : {lam_alpha, lam_alpha + 1}) {
            CoverKind kind = classify_cover(sys, x, alpha, n);
            if (kind != CoverKind::near1 && kind != CoverKind::near2) continue;
            add_into(out, cover_partner(sys, x, alpha, n),
                     Polynomial::constant(sys.rank(), Rat(coeff)));
        }
    }
    return out;
}

RegularModuleElt dd_level_sum(const RootSystem& sys, const RegularModuleElt& m, RootRef beta,
                              const BruhatConfig& cfg,
                              std::vector<std::pair<RootRef, long long>>* trace) {
    RegularModuleElt out{m.v, {}};
    for (const auto& [x, f] : m.terms) {
        RegularModuleElt unit{m.v, {}};
        add_into(unit.terms, x, f);
        // only levels within the translation window can drop the length
        long long reach = sys.pair_root_coroot(sys.root_coeffs(beta), x.translation_part());
        long long bound = (reach < 0 ? -reach : reach) + 2;
        for (long long k = cfg.k_lower_bound; k <= bound; ++k) {
            RegularModuleElt step = lemma41_action(sys, unit, beta, k, cfg, trace);
            for (const auto& [y, g] : step.terms) add_into(out.terms, y, g);
        }
    }
    return out;
}

RegularModuleElt beta_op(const RootSystem& sys, const IntVec& mu, const RegularModuleElt& m,
                         const BruhatConfig& cfg, bool include_scalar_term) {
    RegularModuleElt out{m.v, {}};
    for (const auto& [x, f] : m.terms) {
        ChamberDecomposition d = decompose(sys, x);
        if (regularity_slack(sys, d.lam) < cfg.margin) throw MarginExhausted();
        if (include_scalar_term) {
            IntVec wvmu = d.w.compose(d.v).act_weight(sys, mu);
            Polynomial head =
                Polynomial::weight_form(sys, mu) - Polynomial::weight_form(sys, wvmu);
            add_into(out.terms, x, head * f);
        }
        RegularModuleElt unit{m.v, {}};
        add_into(unit.terms, x, f);
        for (int p = 0; p < sys.num_positive(); ++p) {
            RootRef alpha{p, +1};
            long long coeff = sys.pair_weight_coroot(mu, sys.coroot_coeffs(alpha));
            if (coeff == 0) continue;
            RegularModuleElt part = dd_level_sum(sys, unit, m.v.act(alpha), cfg, nullptr);
            for (const auto& [y, g] : part.terms)
                add_into(out.terms, y, Rat(coeff) * g);
        }
    }
    return out;
}

RegularModuleElt iota(const RootSystem& sys, const WeylElt& v, const SCombination& comb) {
    RegularModuleElt out{v, {}};
    for (const auto& [x, c] : comb) {
        if (!(decompose(sys, x).v == v)) throw ChamberUndefined();
        add_into(out.terms, x, c);
    }
    return out;
}

AffineElt theta_map(const RootSystem& sys, const WeylElt& w, const IntVec& lam,
                    const IntVec& mu, const WeylElt& v) {
    for (int p = 0; p < sys.num_positive(); ++p)
        if (sys.pair_root_coroot(sys.positive_roots()[p].coeffs, lam) >= 0)
            throw std::domain_error("theta_map: lam is not antidominant regular");
    if (regularity_slack(sys, lam) < 1) throw MarginExhausted();
    IntVec sum = lam;
    for (int i = 0; i < sys.rank(); ++i) sum[i] += mu[i];
    IntVec abs_sum = sum;
    // lam + mu must stay superregular (sign pattern may differ; slack checks
    // absolute pairings)
    if (regularity_slack(sys, abs_sum) < 1) throw MarginExhausted();
    return AffineElt(v.compose(w.inverse()), w.act_coroot(sys, sum));
}

IntVec random_superregular_lam(const RootSystem& sys, std::uint64_t seed,
                               long long want_slack) {
    std::mt19937_64 rng(seed);
    // base vector b = sum of the positive coroots: <alpha_i, b> = 2 for all i
    IntVec base(sys.rank(), 0);
    for (int p = 0; p < sys.num_positive(); ++p)
        for (int i = 0; i < sys.rank(); ++i)
            base[i] += sys.positive_roots()[p].coroot_coeffs[i];
    long long threshold = 2 * sys.weyl_order() + 2;
    long long c0 = (threshold + want_slack + 1) / 2 + 1;
    for (int attempt = 0; attempt < 256; ++attempt) {
        IntVec lam(sys.rank());
        long long c = c0 + (long long)(rng() % 5);
        for (int i = 0; i < sys.rank(); ++i)
            lam[i] = -c * base[i] + ((long long)(rng() % 5) - 2);
        bool ok = true;
        for (int p = 0; p < sys.num_positive() && ok; ++p)
            if (sys.pair_root_coroot(sys.positive_roots()[p].coeffs, lam) >= 0) ok = false;
        if (ok && regularity_slack(sys, lam) >= want_slack) return lam;
    }
    throw std::runtime_error("random_superregular_lam: sampling failed");
}

}  // namespace anw
