// Finite crystallographic root systems generated from a Cartan matrix by
// reflection closure.  Roots are integer coefficient vectors over the simple
// roots; every root is generated together with its coroot (coefficients over
// the simple coroots), so all pairings are integer table lookups.
//
// Pairing convention, used everywhere in this library:
//   <alpha_j, alpha_i^vee> = a[i][j].

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anw/cartan.hpp"

namespace anw {

// A root of the generated system: +/- a positive root.
// `index` points into RootSystem::positive_roots(); sign distinguishes beta
// from -beta.
struct RootRef {
    int index = 0;
    int sign = +1;

    RootRef negated() const { return {index, -sign}; }
    friend bool operator==(const RootRef& x, const RootRef& y) {
        return x.index == y.index && x.sign == y.sign;
    }
    friend bool operator!=(const RootRef& x, const RootRef& y) { return !(x == y); }
    friend bool operator<(const RootRef& x, const RootRef& y) {
        return x.index != y.index ? x.index < y.index : x.sign < y.sign;
    }
};

struct RootData {
    IntVec coeffs;         // over simple roots
    IntVec coroot_coeffs;  // over simple coroots
    long long height = 0;  // sum of coeffs
};

class RootSystem {
public:
    // Generates the full system.  Throws std::runtime_error("not finite type")
    // if the reflection closure exceeds `max_roots`.
    explicit RootSystem(Cartan cartan, std::size_t max_roots = 4096);

    const Cartan& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank; }

    const std::vector<RootData>& positive_roots() const { return positive_; }
    int num_positive() const { return (int)positive_.size(); }

    int simple_root_index(int i) const { return simple_index_[i]; }
    int highest_root_index() const { return theta_; }

    // Root coefficient vectors, sign applied.
    IntVec root_coeffs(RootRef r) const;
    IntVec coroot_coeffs(RootRef r) const;

    // Looks up a coefficient vector in the generated set.
    std::optional<RootRef> find_root(const IntVec& coeffs) const;
    std::optional<RootRef> find_root_by_coroot(const IntVec& coroot_coeffs) const;

    // <x, y^vee> for x a root-lattice vector (coeffs over simple roots) and
    // y^vee a coroot-lattice vector (coeffs over simple coroots).
    long long pair_root_coroot(const IntVec& root_coeffs, const IntVec& coroot_coeffs) const;

    // <weight, y^vee>; fundamental-weight coordinates pair by dot product.
    long long pair_weight_coroot(const IntVec& weight_coeffs, const IntVec& coroot_coeffs) const;

    long long pairing(RootRef root, RootRef coroot_of) const;  // <root, coroot_of^vee>

    // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, as a table lookup.
    RootRef reflect_simple(int i, RootRef beta) const;

    // s_alpha(beta) for any alpha in the system.
    RootRef reflect(RootRef alpha, RootRef beta) const;

    // <2 rho, beta^vee> = 2 * (height of beta^vee in the dual system).
    long long two_rho_pairing(RootRef beta) const;

    // Root lattice vector -> fundamental weight coordinates (alpha_j maps to
    // the j-th column of the Cartan matrix).
    IntVec root_to_weight_coords(const IntVec& root_coeffs) const;

    // Order of the finite Weyl group (by orbit-stabilizer-free enumeration).
    long long weyl_order() const;

    // Type-A helper: the root eps_i - eps_j (1-based, i != j) of A_{n-1}.
    RootRef eps_root(int i, int j) const;

private:
    Cartan cartan_;
    std::vector<RootData> positive_;
    std::vector<int> simple_index_;
    int theta_ = -1;
    std::map<IntVec, int> index_of_;
    std::map<IntVec, int> index_of_coroot_;
    // sref_[i][p] = signed image of positive root p under s_i, encoded
    // +(q+1) / -(q+1).
    std::vector<std::vector<int>> sref_;
    mutable long long weyl_order_ = 0;

    friend class WeylElt;
    int signed_reflect_table(int i, int p) const { return sref_[i][p]; }
};

}  // namespace anw
