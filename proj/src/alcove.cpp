#include "anw/alcove.hpp"

#include <stdexcept>

namespace anw {

WallLabel simple_crossing(const RootSystem& sys, int j) {
    if (j == 0) return {RootRef{sys.highest_root_index(), +1}, 1};
    return {RootRef{sys.simple_root_index(j - 1), -1}, 0};
}

AlcovePath path_from_word(const RootSystem& sys, const std::vector<int>& word) {
    AlcovePath p;
    AffineElt y = AffineElt::identity(sys);
    p.crossings.reserve(word.size());
    for (int j : word) {
        p.crossings.push_back(y.act_wall(sys, simple_crossing(sys, j)));
        y = y.mul(sys, AffineElt::simple(sys, j));
    }
    p.target = y;
    return p;
}

AlcovePath reduced_alcove_path(const RootSystem& sys, const AffineElt& x) {
    AlcovePath p = path_from_word(sys, x.reduced_word(sys));
    if (!(p.target == x)) throw std::logic_error("alcove: path does not reach the target");
    return p;
}

Tensor gamma_word(const Baf& baf, const AlcovePath& p) {
    Word w;
    w.reserve(p.crossings.size());
    int sign = 1;
    for (const WallLabel& c : p.crossings) {
        auto [letter, s] = baf.canonical(c.root.negated(), -c.level);
        w.push_back(letter);
        sign *= s;
    }
    Tensor t;
    add_term(t, w, Rat(sign));
    return t;
}

AffineElt replay_crossings(const RootSystem& sys, const AlcovePath& p) {
    AffineElt x = AffineElt::identity(sys);
    for (const WallLabel& c : p.crossings)
        x = AffineElt::reflection(sys, c.root, c.level).mul(sys, x);
    return x;
}

Tensor bruhat_symbol(const Baf& baf, const AffineElt& x) {
    const RootSystem& sys = baf.sys();
    AlcovePath p = reduced_alcove_path(sys, x.inverse(sys));
    Tensor t = gamma_word(baf, p);
    if (x.length(sys) % 2 == 1) t = negate(t);
    return t;
}

}  // namespace anw
