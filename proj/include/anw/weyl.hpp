// Finite Weyl group elements, stored as signed permutations of the positive
// roots.  The signed permutation determines the element and gives O(1) action
// on roots; actions on coroot-lattice and weight vectors are derived from the
// images of the simple (co)roots.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "anw/root_system.hpp"

namespace anw {

class WeylElt {
public:
    WeylElt() = default;

    static WeylElt identity(const RootSystem& sys);
    static WeylElt simple(const RootSystem& sys, int i);           // s_{alpha_i}
    static WeylElt reflection(const RootSystem& sys, RootRef alpha);  // s_alpha

    bool is_identity() const;

    RootRef act(RootRef r) const;
    IntVec act_coroot(const RootSystem& sys, const IntVec& coroot_coeffs) const;
    IntVec act_weight(const RootSystem& sys, const IntVec& weight_coeffs) const;

    WeylElt compose(const WeylElt& rhs) const;  // this o rhs
    WeylElt inverse() const;

    // Number of positive roots sent negative.
    int length() const;

    // Deterministic reduced word over 1..r (least left descent first).
    std::vector<int> reduced_word(const RootSystem& sys) const;

    // If this element is a reflection s_alpha, returns alpha (positive).
    std::optional<RootRef> as_reflection(const RootSystem& sys) const;

    friend bool operator==(const WeylElt& x, const WeylElt& y) { return x.perm_ == y.perm_; }
    friend bool operator!=(const WeylElt& x, const WeylElt& y) { return !(x == y); }
    friend bool operator<(const WeylElt& x, const WeylElt& y) { return x.perm_ < y.perm_; }

    std::size_t hash() const;

    static std::vector<WeylElt> enumerate(const RootSystem& sys);  // all of W

private:
    // perm_[p] = signed image of positive root p, encoded +/-(q+1).
    std::vector<int> perm_;
};

}  // namespace anw
