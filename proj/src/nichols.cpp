#include "anw/nichols.hpp"

#include <algorithm>

namespace anw {

Baf::Baf(const RootSystem& sys) : sys_(&sys) {
    const int np = sys.num_positive();
    sref_all_.assign(np, std::vector<int>(np, 0));
    pair_.assign(np, std::vector<long long>(np, 0));
    for (int a = 0; a < np; ++a) {
        for (int b = 0; b < np; ++b) {
            RootRef img = sys.reflect(RootRef{a, +1}, RootRef{b, +1});
            sref_all_[a][b] = img.sign * (img.index + 1);
            pair_[a][b] = sys.pair_root_coroot(sys.positive_roots()[b].coeffs,
                                               sys.positive_roots()[a].coroot_coeffs);
        }
    }
}

std::pair<Letter, int> Baf::braid(Letter a, Letter b) const {
    // s_{alpha,k}(b) for a = [alpha,k]: root s_alpha(beta), level l - k <alpha^vee, beta>.
    int enc = sref_all_[a.root][b.root];
    long long level = b.level - a.level * pair_[a.root][b.root];
    if (enc > 0) return {Letter{enc - 1, level}, +1};
    return {Letter{-enc - 1, -level}, -1};
}

const std::vector<std::vector<int>>& Baf::perm_words(int n) const {
    auto it = perm_words_.find(n);
    if (it != perm_words_.end()) return it->second;
    std::vector<std::vector<int>> words;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        // adjacent-swap sort of the permutation; the reversed swap list is a
        // reduced word
        std::vector<int> v = perm;
        std::vector<int> swaps;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i + 1 < n; ++i) {
                if (v[i] > v[i + 1]) {
                    std::swap(v[i], v[i + 1]);
                    swaps.push_back(i);
                    moved = true;
                    break;
                }
            }
        }
        std::reverse(swaps.begin(), swaps.end());
        words.push_back(std::move(swaps));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return perm_words_.emplace(n, std::move(words)).first->second;
}

AffineRootLabel generator_label(const RootSystem& sys, int i) {
    if (i == 0)  // [alpha_0, -1] = -[theta, 1]
        return AffineRootLabel::make(RootRef{sys.highest_root_index(), -1}, -1);
    return AffineRootLabel::make(RootRef{sys.simple_root_index(i - 1), +1}, 0);
}

AffineElt waf_degree(const RootSystem& sys, const Word& w) {
    AffineElt x = AffineElt::identity(sys);
    for (const Letter& u : w)
        x = x.mul(sys, AffineElt::reflection(sys, RootRef{u.root, +1}, u.level));
    return x;
}

bool is_scalar_one(const Tensor& t) {
    return t.size() == 1 && t.begin()->first.empty() && t.begin()->second.is_one();
}

}  // namespace anw
