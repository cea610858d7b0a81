// The Yetter-Drinfeld module V_af over W_af and its Nichols-Woronowicz
// algebra B_af, computed on free-tensor representatives: braiding, the
// Woronowicz symmetrizer (zero-testing), braided differential operators,
// and the level-forgetting projection onto the finite-type algebra.
//
// Words are lists of canonical letters [alpha, k] (alpha a positive root);
// signs live in the coefficients.  Equality in B_af is decided degree-wise:
// an element vanishes iff the symmetrizer kills every homogeneous component.

#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "anw/affine_weyl.hpp"
#include "anw/rational.hpp"
#include "anw/root_system.hpp"

namespace anw {

struct Letter {
    int32_t root = 0;  // positive root index
    long long level = 0;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

template <class C>
using WordMap = std::map<Word, C>;

using Tensor = WordMap<Rat>;

inline constexpr int kMaxSymmetrizerDegree = 8;

// Braiding tables and symmetrizer word caches for a fixed root system.
class Baf {
public:
    explicit Baf(const RootSystem& sys);

    const RootSystem& sys() const { return *sys_; }

    // psi(a (x) b) = deg(a)(b) (x) a = s_{alpha,k}(b) (x) a for a = [alpha,k].
    // Returns the canonicalized left output letter and its sign.
    std::pair<Letter, int> braid(Letter a, Letter b) const;

    // One fixed reduced word (as adjacent-swap positions) per element of S_n.
    const std::vector<std::vector<int>>& perm_words(int n) const;

    std::pair<Letter, int> canonical(RootRef root, long long level) const {
        if (root.sign > 0) return {Letter{root.index, level}, +1};
        return {Letter{root.index, -level}, -1};
    }

private:
    const RootSystem* sys_;
    // sref_all_[a][b] = signed index of s_{root a}(root b) over positive roots
    std::vector<std::vector<int>> sref_all_;
    // pair_[a][b] = <root_a^vee, root_b>
    std::vector<std::vector<long long>> pair_;
    mutable std::map<int, std::vector<std::vector<int>>> perm_words_;
};

// tau_0 -> [alpha_0,-1] = -[theta,1], tau_i -> [alpha_i,0].
AffineRootLabel generator_label(const RootSystem& sys, int i);

// --- generic word-map helpers -------------------------------------------

template <class C>
void add_term(WordMap<C>& t, const Word& w, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

template <class C>
WordMap<C> add(const WordMap<C>& a, const WordMap<C>& b) {
    WordMap<C> out = a;
    for (const auto& [w, c] : b) add_term(out, w, c);
    return out;
}

template <class C>
WordMap<C> negate(const WordMap<C>& a) {
    WordMap<C> out;
    for (const auto& [w, c] : a) out.emplace(w, -c);
    return out;
}

template <class C>
WordMap<C> sub(const WordMap<C>& a, const WordMap<C>& b) { return add(a, negate(b)); }

// Concatenation product on tensor representatives.
template <class C>
WordMap<C> concat_mul(const WordMap<C>& a, const WordMap<C>& b) {
    WordMap<C> out;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            add_term(out, w, C(cu * cv));
        }
    }
    return out;
}

// psi applied at positions (i, i+1); sign returned.
inline std::pair<Word, int> apply_psi_at(const Baf& baf, Word w, int i) {
    auto [left, sign] = baf.braid(w[i], w[i + 1]);
    w[i + 1] = w[i];
    w[i] = left;
    return {std::move(w), sign};
}

// Psi_w for the cached reduced word of one permutation.
inline std::pair<Word, int> apply_perm_word(const Baf& baf, Word w,
                                            const std::vector<int>& swaps) {
    int sign = 1;
    for (int i : swaps) {
        auto [left, s] = baf.braid(w[i], w[i + 1]);
        w[i + 1] = w[i];
        w[i] = left;
        sign *= s;
    }
    return {std::move(w), sign};
}

// The Woronowicz symmetrizer on one homogeneous component.
template <class C>
WordMap<C> symmetrize(const Baf& baf, const WordMap<C>& t) {
    WordMap<C> out;
    for (const auto& [w, c] : t) {
        const int n = (int)w.size();
        if (n > kMaxSymmetrizerDegree)
            throw std::runtime_error("symmetrize: degree exceeds the cap");
        if (n <= 1) {
            add_term(out, w, c);
            continue;
        }
        for (const auto& swaps : baf.perm_words(n)) {
            auto [img, sign] = apply_perm_word(baf, w, swaps);
            add_term(out, img, sign < 0 ? C(-c) : c);
        }
    }
    return out;
}

// Zero test in B_af: every homogeneous component symmetrizes to zero.
template <class C>
bool is_zero_in_B(const Baf& baf, const WordMap<C>& t) {
    std::map<std::size_t, WordMap<C>> by_degree;
    for (const auto& [w, c] : t) add_term(by_degree[w.size()], w, c);
    for (const auto& [n, comp] : by_degree) {
        (void)n;
        if (!symmetrize(baf, comp).empty()) return false;
    }
    return true;
}

template <class C>
bool equal_in_B(const Baf& baf, const WordMap<C>& a, const WordMap<C>& b) {
    return is_zero_in_B(baf, sub(a, b));
}

// Right differential contraction:
//   (u_1...u_n) D_v = sum_i (u_i, v) u_1...u_{i-1} (x) s_v(u_{i+1})...s_v(u_n)
template <class C>
WordMap<C> differential(const Baf& baf, const WordMap<C>& t, const AffineRootLabel& v) {
    Letter vl{v.root_index, v.level};
    WordMap<C> out;
    for (const auto& [w, c] : t) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != vl) continue;
            int sign = v.sign;
            Word img(w.begin(), w.begin() + i);
            img.reserve(w.size() - 1);
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                auto [tw, s] = baf.braid(vl, w[j]);
                img.push_back(tw);
                sign *= s;
            }
            add_term(out, img, sign < 0 ? C(-c) : c);
        }
    }
    return out;
}

// Differentials along a reduced word of x, first letter first.  With the
// library's path conventions, gamma words contract under this to +1.
template <class C>
WordMap<C> d_along_word(const Baf& baf, WordMap<C> t, const std::vector<int>& word) {
    for (int gen : word) t = differential(baf, t, generator_label(baf.sys(), gen));
    return t;
}

template <class C>
WordMap<C> d_x(const Baf& baf, const WordMap<C>& t, const AffineElt& x) {
    return d_along_word(baf, t, x.reduced_word(baf.sys()));
}

// Diagonal W_af-action, letter by letter.
template <class C>
WordMap<C> act_elementwise(const Baf& baf, const WordMap<C>& t, const AffineElt& x) {
    WordMap<C> out;
    for (const auto& [w, c] : t) {
        Word img;
        img.reserve(w.size());
        int sign = 1;
        for (const Letter& u : w) {
            AffineRootLabel l = x.act(baf.sys(), AffineRootLabel{u.root, u.level, +1});
            img.push_back(Letter{l.root_index, l.level});
            sign *= l.sign;
        }
        add_term(out, img, sign < 0 ? C(-c) : c);
    }
    return out;
}

// Level-forgetting projection onto the finite-type algebra B_W.
template <class C>
WordMap<C> pi_project(const WordMap<C>& t) {
    WordMap<C> out;
    for (const auto& [w, c] : t) {
        Word img = w;
        for (Letter& u : img) u.level = 0;
        add_term(out, img, c);
    }
    return out;
}

// deg_{W_af} of a word: the product of its letters' reflections.
AffineElt waf_degree(const RootSystem& sys, const Word& w);

// Whether every term of t has W_af-degree x.
template <class C>
bool has_waf_degree(const RootSystem& sys, const WordMap<C>& t, const AffineElt& x) {
    for (const auto& [w, c] : t) {
        (void)c;
        if (!(waf_degree(sys, w) == x)) return false;
    }
    return true;
}

inline Tensor tensor_scalar(Rat c) {
    Tensor t;
    add_term(t, Word{}, c);
    return t;
}

inline Tensor tensor_letter(const Baf& baf, RootRef root, long long level) {
    auto [l, sign] = baf.canonical(root, level);
    Tensor t;
    add_term(t, Word{l}, Rat(sign));
    return t;
}

bool is_scalar_one(const Tensor& t);

}  // namespace anw
