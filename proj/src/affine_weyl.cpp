#include "anw/affine_weyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace anw {

AffineElt AffineElt::identity(const RootSystem& sys) {
    return AffineElt(WeylElt::identity(sys), IntVec(sys.rank(), 0));
}

AffineElt AffineElt::translation(const RootSystem& sys, IntVec lam) {
    return AffineElt(WeylElt::identity(sys), std::move(lam));
}

AffineElt AffineElt::from_finite(const RootSystem& sys, WeylElt w) {
    return AffineElt(std::move(w), IntVec(sys.rank(), 0));
}

AffineElt AffineElt::simple(const RootSystem& sys, int i) {
    if (i == 0) return reflection(sys, RootRef{sys.highest_root_index(), +1}, 1);
    return AffineElt(WeylElt::simple(sys, i - 1), IntVec(sys.rank(), 0));
}

AffineElt AffineElt::reflection(const RootSystem& sys, RootRef alpha, long long k) {
    if (alpha.sign < 0) {  // s_{-alpha,-k} = s_{alpha,k}
        alpha = alpha.negated();
        k = -k;
    }
    IntVec lam = sys.coroot_coeffs(alpha);
    for (auto& c : lam) c *= -k;
    return AffineElt(WeylElt::reflection(sys, alpha), std::move(lam));
}

AffineElt AffineElt::mul(const RootSystem& sys, const AffineElt& rhs) const {
    // (w1, l1)(w2, l2) = (w1 w2, w2^{-1}(l1) + l2)
    IntVec lam = rhs.w_.inverse().act_coroot(sys, lam_);
    for (int i = 0; i < sys.rank(); ++i) lam[i] += rhs.lam_[i];
    return AffineElt(w_.compose(rhs.w_), std::move(lam));
}

AffineElt AffineElt::inverse(const RootSystem& sys) const {
    // (w, lam)^{-1} = (w^{-1}, -w(lam))
    IntVec lam = w_.act_coroot(sys, lam_);
    for (auto& c : lam) c = -c;
    return AffineElt(w_.inverse(), std::move(lam));
}

bool AffineElt::is_identity() const {
    return w_.is_identity() &&
           std::all_of(lam_.begin(), lam_.end(), [](long long c) { return c == 0; });
}

AffineRootLabel AffineElt::act(const RootSystem& sys, const AffineRootLabel& v) const {
    RootRef root{v.root_index, +1};
    long long level = v.level + sys.pair_root_coroot(sys.root_coeffs(root), lam_);
    AffineRootLabel out = AffineRootLabel::make(w_.act(root), level);
    out.sign *= v.sign;
    return out;
}

WallLabel AffineElt::act_wall(const RootSystem& sys, const WallLabel& v) const {
    long long level = v.level + sys.pair_root_coroot(sys.root_coeffs(v.root), lam_);
    return {w_.act(v.root), level};
}

long long AffineElt::length(const RootSystem& sys) const {
    // x(alpha + k delta) = w(alpha) + (k - <alpha, lam>) delta.  Count the
    // positive affine roots with negative image; per root direction alpha the
    // count has a closed form.
    long long total = 0;
    for (int p = 0; p < sys.num_positive(); ++p) {
        for (int sign : {+1, -1}) {
            RootRef alpha{p, sign};
            long long c = sys.pair_root_coroot(sys.root_coeffs(alpha), lam_);
            long long k_min = sign > 0 ? 0 : 1;
            if (c > k_min) total += c - k_min;
            if (c >= k_min && w_.act(alpha).sign < 0) total += 1;
        }
    }
    return total;
}

std::vector<int> AffineElt::reduced_word(const RootSystem& sys) const {
    std::vector<int> word;
    AffineElt cur = *this;
    long long len = cur.length(sys);
    word.reserve(len);
    while (len > 0) {
        bool found = false;
        for (int i = 1; i <= sys.rank() + 1; ++i) {
            int gen = i <= sys.rank() ? i : 0;
            AffineElt next = simple(sys, gen).mul(sys, cur);
            long long nl = next.length(sys);
            if (nl == len - 1) {
                word.push_back(gen);
                cur = std::move(next);
                len = nl;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("affine_weyl: no left descent");
    }
    return word;
}

namespace {
void collect_words(const RootSystem& sys, const AffineElt& x, long long len,
                   std::map<AffineElt, std::vector<std::vector<int>>>& memo) {
    if (memo.count(x)) return;
    if (len == 0) {
        memo[x] = {{}};
        return;
    }
    std::vector<std::vector<int>> words;
    for (int i = 1; i <= sys.rank() + 1; ++i) {
        int gen = i <= sys.rank() ? i : 0;
        AffineElt prev = x.mul(sys, AffineElt::simple(sys, gen));
        long long pl = prev.length(sys);
        if (pl != len - 1) continue;
        collect_words(sys, prev, pl, memo);
        for (auto w : memo[prev]) {
            w.push_back(gen);
            words.push_back(std::move(w));
        }
    }
    memo[x] = std::move(words);
}
}  // namespace

std::vector<std::vector<int>> AffineElt::all_reduced_words(const RootSystem& sys) const {
    std::map<AffineElt, std::vector<std::vector<int>>> memo;
    collect_words(sys, *this, length(sys), memo);
    return memo[*this];
}

std::optional<std::pair<RootRef, long long>> AffineElt::as_reflection(const RootSystem& sys) const {
    auto alpha = w_.as_reflection(sys);
    if (!alpha) return std::nullopt;
    // lam must equal -k * alpha^vee for an integer k.
    IntVec cr = sys.coroot_coeffs(*alpha);
    long long k = 0;
    bool have_k = false;
    for (int i = 0; i < sys.rank(); ++i) {
        if (cr[i] == 0) {
            if (lam_[i] != 0) return std::nullopt;
            continue;
        }
        if (lam_[i] % cr[i] != 0) return std::nullopt;
        long long ki = -lam_[i] / cr[i];
        if (have_k && ki != k) return std::nullopt;
        k = ki;
        have_k = true;
    }
    return std::make_pair(*alpha, k);
}

AffineElt product_of_word(const RootSystem& sys, const std::vector<int>& word) {
    AffineElt x = AffineElt::identity(sys);
    for (int gen : word) x = x.mul(sys, AffineElt::simple(sys, gen));
    return x;
}

bool is_cover(const RootSystem& sys, const AffineElt& y, const AffineElt& x) {
    AffineElt z = y.inverse(sys).mul(sys, x);
    if (!z.as_reflection(sys)) return false;
    return x.length(sys) == y.length(sys) + 1;
}

std::map<AffineElt, long long> bfs_oracle(const RootSystem& sys, int max_len,
                                          std::size_t max_elements) {
    std::map<AffineElt, long long> lengths;
    std::deque<AffineElt> frontier{AffineElt::identity(sys)};
    lengths[AffineElt::identity(sys)] = 0;
    long long depth = 0;
    while (!frontier.empty() && depth < max_len) {
        ++depth;
        std::deque<AffineElt> next;
        for (const AffineElt& x : frontier) {
            for (int gen = 0; gen <= sys.rank(); ++gen) {
                AffineElt cand = x.mul(sys, AffineElt::simple(sys, gen));
                if (lengths.count(cand)) continue;
                if (lengths.size() >= max_elements)
                    throw std::runtime_error("bfs_oracle: element cap exceeded");
                lengths[cand] = depth;
                next.push_back(std::move(cand));
            }
        }
        frontier = std::move(next);
    }
    return lengths;
}

}  // namespace anw
