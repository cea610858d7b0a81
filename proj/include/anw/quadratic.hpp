// Type-A specialization of the level-sum operators on the identity chamber:
// DD(ij), the translation operators T_i, the Dunkl-type sums, and the
// quadratic-relation verifier.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anw/bruhat_ops.hpp"

namespace anw {

using LevelTrace = std::vector<std::pair<RootRef, long long>>;

// DD(ij) for the root eps_i - eps_j (1-based); DD(ij) = -DD(ji) for i > j.
RegularModuleElt dd_apply(const RootSystem& sys, int i, int j, const RegularModuleElt& m,
                          const BruhatConfig& cfg, LevelTrace* trace = nullptr);

// T_i([x]) = [x t_{alpha_i}].
RegularModuleElt t_apply(const RootSystem& sys, int i, const RegularModuleElt& m,
                         const BruhatConfig& cfg);

// The Dunkl-type operator sum_{j != i} DD(ij).
RegularModuleElt dunkl_apply(const RootSystem& sys, int i, const RegularModuleElt& m,
                             const BruhatConfig& cfg);

struct QuadCheck {
    std::string relation;
    std::string instance;
    bool pass = false;
};

struct Prop51Report {
    std::vector<QuadCheck> checks;
    bool case1_seen = false;  // first contributing level -<lam, alpha_i>
    bool case2_seen = false;  // first contributing level -<lam, alpha_i> - 1
    bool all_pass() const;
};

// Runs the square, disjoint-commutation and three-term relations on seeded
// superregular samples of the identity chamber (type A_{n-1}).
Prop51Report verify_prop51(const RootSystem& sys, int trials, std::uint64_t seed,
                           const BruhatConfig& cfg);

}  // namespace anw
