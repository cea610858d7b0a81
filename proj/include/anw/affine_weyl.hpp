// The affine Weyl group W_af = W x| Q^vee in the normal form x = w * t_lam,
// its action on affine root labels [alpha, k], the inversion-count length,
// deterministic reduced words, Bruhat covers, and a BFS length oracle.
//
// Conventions:
//   t_lam [alpha, k] = [alpha, k + <alpha, lam>],   w [alpha, k] = [w alpha, k]
//   s_{alpha,k} = (s_alpha, -k alpha^vee) in (w, lam) form
//   [-alpha, -k] = -[alpha, k]  (canonicalization, sign tracked separately)

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "anw/root_system.hpp"
#include "anw/weyl.hpp"

namespace anw {

// A canonicalized real affine root label: sign * [root, level] with the root
// stored positive.
struct AffineRootLabel {
    int root_index = 0;
    long long level = 0;
    int sign = +1;

    // Canonicalizes [root, level] for a signed root.
    static AffineRootLabel make(RootRef root, long long level) {
        if (root.sign > 0) return {root.index, level, +1};
        return {root.index, -level, -1};
    }
    AffineRootLabel negated() const { return {root_index, level, -sign}; }

    friend bool operator==(const AffineRootLabel& a, const AffineRootLabel& b) {
        return a.root_index == b.root_index && a.level == b.level && a.sign == b.sign;
    }
};

// A wall/crossing label (root, level) where the root's sign is meaningful
// (it records a direction, not a canonical form).
struct WallLabel {
    RootRef root;
    long long level = 0;

    friend bool operator==(const WallLabel& a, const WallLabel& b) {
        return a.root == b.root && a.level == b.level;
    }
};

class AffineElt {
public:
    AffineElt() = default;
    AffineElt(WeylElt w, IntVec lam) : w_(std::move(w)), lam_(std::move(lam)) {}

    static AffineElt identity(const RootSystem& sys);
    static AffineElt translation(const RootSystem& sys, IntVec lam);
    static AffineElt from_finite(const RootSystem& sys, WeylElt w);
    // s_i for i in 0..r; s_0 = s_{theta,1}.
    static AffineElt simple(const RootSystem& sys, int i);
    // s_{alpha,k} = (s_alpha, -k alpha^vee).
    static AffineElt reflection(const RootSystem& sys, RootRef alpha, long long k);

    const WeylElt& finite() const { return w_; }
    const IntVec& translation_part() const { return lam_; }

    AffineElt mul(const RootSystem& sys, const AffineElt& rhs) const;
    AffineElt inverse(const RootSystem& sys) const;
    bool is_identity() const;

    // x [alpha, k] = [w(alpha), k + <alpha, lam>], canonicalized.
    AffineRootLabel act(const RootSystem& sys, const AffineRootLabel& v) const;
    // Same action on a direction-carrying wall label (no canonicalization).
    WallLabel act_wall(const RootSystem& sys, const WallLabel& v) const;

    // Coxeter length, by counting positive affine roots sent negative.
    long long length(const RootSystem& sys) const;

    // Deterministic reduced word over 0..r: repeatedly strip the first left
    // descent, scanning generators in the order 1, 2, ..., r, 0.  This order
    // is a fixed convention of the library; it pins the alcove paths and all
    // derived tensor words.
    std::vector<int> reduced_word(const RootSystem& sys) const;

    // Every reduced word (for small elements; order deterministic).
    std::vector<std::vector<int>> all_reduced_words(const RootSystem& sys) const;

    // If *this = s_{alpha,k} with alpha positive, k in Z, returns (alpha, k).
    std::optional<std::pair<RootRef, long long>> as_reflection(const RootSystem& sys) const;

    friend bool operator==(const AffineElt& x, const AffineElt& y) {
        return x.lam_ == y.lam_ && x.w_ == y.w_;
    }
    friend bool operator!=(const AffineElt& x, const AffineElt& y) { return !(x == y); }
    friend bool operator<(const AffineElt& x, const AffineElt& y) {
        if (x.lam_ != y.lam_) return x.lam_ < y.lam_;
        return x.w_ < y.w_;
    }

private:
    WeylElt w_;
    IntVec lam_;
};

AffineElt product_of_word(const RootSystem& sys, const std::vector<int>& word);

// true iff x covers y: y^{-1} x is an affine reflection and l(x) = l(y) + 1.
bool is_cover(const RootSystem& sys, const AffineElt& y, const AffineElt& x);

// Breadth-first closure over s_0..s_r up to length max_len; authoritative
// lengths for testing.  Throws std::runtime_error on the element cap.
std::map<AffineElt, long long> bfs_oracle(const RootSystem& sys, int max_len,
                                          std::size_t max_elements = 2000000);

}  // namespace anw
