// Superregular combinatorics: chamber decomposition x = w t_{v(lam)}, the
// length-drop differential rule on module symbols [x], the cover
// classification for superregular elements, the affine Bruhat operator B^mu,
// and its braided-differential realization beta^mu_v.
//
// The module model treats [x] as an opaque basis symbol with S-coefficients;
// the tensor model (anw/nichols.hpp, anw/alcove.hpp) certifies the action
// rule at small length via bruhat_symbol().

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "anw/affine_weyl.hpp"
#include "anw/polynomial.hpp"
#include "anw/weyl.hpp"

namespace anw {

struct ChamberUndefined : std::runtime_error {
    ChamberUndefined() : std::runtime_error("chamber undefined") {}
};
struct MarginExhausted : std::runtime_error {
    MarginExhausted() : std::runtime_error("regularity margin exhausted") {}
};

struct ChamberDecomposition {
    WeylElt w;
    WeylElt v;
    IntVec lam;  // antidominant regular
};

// x = w t_{v(lam)} with lam antidominant; unique for regular translation
// parts.  Throws ChamberUndefined otherwise.
ChamberDecomposition decompose(const RootSystem& sys, const AffineElt& x);
AffineElt recompose(const RootSystem& sys, const ChamberDecomposition& d);

// min over positive roots of |<lam, alpha>| minus the superregularity
// threshold 2|W| + 2; superregular iff slack >= 1.
long long regularity_slack(const RootSystem& sys, const IntVec& antidominant_lam);
long long regularity_slack(const RootSystem& sys, const AffineElt& x);
bool is_superregular(const RootSystem& sys, const AffineElt& x);

// The bare length-drop rule behind the module action (valid for every x):
// returns x s_{alpha,k} when its length is l(x) - 1, nothing otherwise.
std::optional<AffineElt> lemma41_rule(const RootSystem& sys, const AffineElt& x,
                                      RootRef alpha, long long k);

struct BruhatConfig {
    long long k_lower_bound = 2;  // level sum starts here (the k > 1 convention)
    long long margin = 4;         // required slack on every produced index
};

struct RegularModuleElt {
    WeylElt v;  // chamber
    std::map<AffineElt, Polynomial> terms;
};

RegularModuleElt module_basis(const RootSystem& sys, const WeylElt& v, const AffineElt& x,
                              Polynomial coeff);
RegularModuleElt module_zero(const WeylElt& v);
bool module_equal(const RegularModuleElt& a, const RegularModuleElt& b);
RegularModuleElt module_add(const RootSystem& sys, const RegularModuleElt& a,
                            const RegularModuleElt& b);
RegularModuleElt module_negate(const RegularModuleElt& a);

// [x] -> [x s_{alpha,k}] when the length drops by one, else 0; coefficients
// carried through unchanged.  k must be positive.  Produced indices must stay
// superregular with slack >= cfg.margin (MarginExhausted otherwise).
// `trace`, when given, records each (alpha, k) that produced a term.
RegularModuleElt lemma41_action(const RootSystem& sys, const RegularModuleElt& m,
                                RootRef alpha, long long k, const BruhatConfig& cfg,
                                std::vector<std::pair<RootRef, long long>>* trace = nullptr);

// The level sum DD(beta) = sum_{k >= cfg.k_lower_bound} D_{[beta,k]} in the
// module model; only finitely many levels act, bounded by the translation
// window of each index.
RegularModuleElt dd_level_sum(const RootSystem& sys, const RegularModuleElt& m, RootRef beta,
                              const BruhatConfig& cfg,
                              std::vector<std::pair<RootRef, long long>>* trace = nullptr);

enum class CoverKind { none, near1, near2, far3, far4 };

// Which of the four cover conditions holds for y = x s_{v(alpha), -n} under x
// (x superregular, alpha positive); CoverKind::none if y is not covered by x.
CoverKind classify_cover(const RootSystem& sys, const AffineElt& x, RootRef alpha,
                         long long n);

// Covered element for a classified (alpha, n).
AffineElt cover_partner(const RootSystem& sys, const AffineElt& x, RootRef alpha, long long n);

using SCombination = std::map<AffineElt, Polynomial>;

// B^mu(x) = (mu - wv mu) x + sum over near covers <alpha^vee, mu> x s_{v(alpha),k},
// with the near covers enumerated through the cover classification.
SCombination affine_bruhat_operator(const RootSystem& sys, const IntVec& mu,
                                    const AffineElt& x, const BruhatConfig& cfg);

// beta^mu_v([x]) = (mu - wv mu)[x] + [x] sum_{alpha>0, k>=klb} <alpha^vee,mu>
// D_{[v(alpha),k]}, realized through lemma41_action (independent of the cover
// classification).
RegularModuleElt beta_op(const RootSystem& sys, const IntVec& mu, const RegularModuleElt& m,
                         const BruhatConfig& cfg, bool include_scalar_term = true);

// The left S-module identification iota: x -> [x] on the v-chamber.
RegularModuleElt iota(const RootSystem& sys, const WeylElt& v, const SCombination& comb);

// theta_w^lam(q^mu sigma^v) = v w^{-1} t_{w(lam+mu)}.
AffineElt theta_map(const RootSystem& sys, const WeylElt& w, const IntVec& lam,
                    const IntVec& mu, const WeylElt& v);

// Seeded antidominant lambda with slack >= want_slack.
IntVec random_superregular_lam(const RootSystem& sys, std::uint64_t seed,
                               long long want_slack);

}  // namespace anw
