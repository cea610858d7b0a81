#include "anw/bafs.hpp"

namespace anw {

BafsElt bafs_scalar(const RootSystem& sys, Polynomial f) {
    (void)sys;
    BafsElt out;
    if (!f.is_zero()) out.emplace(Word{}, std::move(f));
    return out;
}

BafsElt bafs_letter(const Baf& baf, RootRef root, long long level) {
    auto [l, sign] = baf.canonical(root, level);
    BafsElt out;
    out.emplace(Word{l}, Polynomial::constant(baf.sys().rank(), Rat(sign)));
    return out;
}

BafsElt push_through(const Baf& baf, const Word& u, const Polynomial& f) {
    const RootSystem& sys = baf.sys();
    if (u.empty()) return bafs_scalar(sys, f);
    // u = u' c:  u' (c f) = u' d_c(f) + u' s_{c,0}(f) c
    Word prefix(u.begin(), u.end() - 1);
    Letter c = u.back();
    RootRef root{c.root, +1};
    BafsElt out = push_through(baf, prefix, f.divided_difference(sys, root));
    BafsElt kept = push_through(baf, prefix, f.weyl_act(sys, WeylElt::reflection(sys, root)));
    for (const auto& [w, g] : kept) {
        Word ext = w;
        ext.push_back(c);
        add_term(out, ext, g);
    }
    return out;
}

BafsElt bafs_mul(const Baf& baf, const BafsElt& a, const BafsElt& b) {
    BafsElt out;
    for (const auto& [u, f] : a) {
        for (const auto& [v, g] : b) {
            BafsElt mid = push_through(baf, u, g);
            for (const auto& [w, h] : mid) {
                Word ext = w;
                ext.insert(ext.end(), v.begin(), v.end());
                add_term(out, ext, Polynomial(f * h));
            }
        }
    }
    return out;
}

BafsElt phi(const Baf& baf, const NilHeckeElt& a) {
    const RootSystem& sys = baf.sys();
    BafsElt out;
    for (const auto& [x, f] : a) {
        Word w;
        int sign = 1;
        for (int gen : x.reduced_word(sys)) {
            AffineRootLabel l = generator_label(sys, gen);
            w.push_back(Letter{l.root_index, l.level});
            sign *= l.sign;
        }
        add_term(out, w, sign < 0 ? -f : f);
    }
    return out;
}

}  // namespace anw
