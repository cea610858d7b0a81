#include "anw/weyl.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace anw {

WeylElt WeylElt::identity(const RootSystem& sys) {
    WeylElt w;
    w.perm_.resize(sys.num_positive());
    for (int p = 0; p < sys.num_positive(); ++p) w.perm_[p] = p + 1;
    return w;
}

WeylElt WeylElt::simple(const RootSystem& sys, int i) {
    WeylElt w;
    w.perm_.resize(sys.num_positive());
    for (int p = 0; p < sys.num_positive(); ++p) w.perm_[p] = sys.signed_reflect_table(i, p);
    return w;
}

WeylElt WeylElt::reflection(const RootSystem& sys, RootRef alpha) {
    WeylElt w;
    w.perm_.resize(sys.num_positive());
    for (int p = 0; p < sys.num_positive(); ++p) {
        RootRef img = sys.reflect(alpha, RootRef{p, +1});
        w.perm_[p] = img.sign * (img.index + 1);
    }
    return w;
}

bool WeylElt::is_identity() const {
    for (int p = 0; p < (int)perm_.size(); ++p)
        if (perm_[p] != p + 1) return false;
    return true;
}

RootRef WeylElt::act(RootRef r) const {
    int enc = perm_[r.index];
    int idx = (enc > 0 ? enc : -enc) - 1;
    return {idx, (enc > 0 ? +1 : -1) * r.sign};
}

IntVec WeylElt::act_coroot(const RootSystem& sys, const IntVec& coroot_coeffs) const {
    // w(lambda) = sum_j lambda_j * w(alpha_j^vee), and w(alpha_j^vee) = (w alpha_j)^vee.
    IntVec out(sys.rank(), 0);
    for (int j = 0; j < sys.rank(); ++j) {
        if (coroot_coeffs[j] == 0) continue;
        RootRef img = act(RootRef{sys.simple_root_index(j), +1});
        IntVec cr = sys.coroot_coeffs(img);
        for (int i = 0; i < sys.rank(); ++i) out[i] += coroot_coeffs[j] * cr[i];
    }
    return out;
}

IntVec WeylElt::act_weight(const RootSystem& sys, const IntVec& weight_coeffs) const {
    // (w mu)_i = <mu, (w^{-1} alpha_i)^vee>.
    WeylElt inv = inverse();
    IntVec out(sys.rank(), 0);
    for (int i = 0; i < sys.rank(); ++i) {
        RootRef pre = inv.act(RootRef{sys.simple_root_index(i), +1});
        out[i] = sys.pair_weight_coroot(weight_coeffs, sys.coroot_coeffs(pre));
    }
    return out;
}

WeylElt WeylElt::compose(const WeylElt& rhs) const {
    WeylElt out;
    out.perm_.resize(perm_.size());
    for (int p = 0; p < (int)perm_.size(); ++p) {
        int enc = rhs.perm_[p];
        int idx = (enc > 0 ? enc : -enc) - 1;
        int img = perm_[idx];
        out.perm_[p] = enc > 0 ? img : -img;
    }
    return out;
}

WeylElt WeylElt::inverse() const {
    WeylElt out;
    out.perm_.resize(perm_.size());
    for (int p = 0; p < (int)perm_.size(); ++p) {
        int enc = perm_[p];
        int idx = (enc > 0 ? enc : -enc) - 1;
        out.perm_[idx] = enc > 0 ? (p + 1) : -(p + 1);
    }
    return out;
}

int WeylElt::length() const {
    int n = 0;
    for (int enc : perm_)
        if (enc < 0) ++n;
    return n;
}

std::vector<int> WeylElt::reduced_word(const RootSystem& sys) const {
    std::vector<int> word;
    WeylElt cur = *this;
    int len = cur.length();
    while (len > 0) {
        bool found = false;
        for (int i = 0; i < sys.rank(); ++i) {
            WeylElt next = WeylElt::simple(sys, i).compose(cur);
            int nl = next.length();
            if (nl == len - 1) {
                word.push_back(i + 1);
                cur = next;
                len = nl;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("weyl: no descent found");
    }
    return word;
}

std::optional<RootRef> WeylElt::as_reflection(const RootSystem& sys) const {
    for (int p = 0; p < sys.num_positive(); ++p) {
        if (perm_[p] != -(p + 1)) continue;  // s_alpha(alpha) = -alpha
        if (*this == WeylElt::reflection(sys, RootRef{p, +1})) return RootRef{p, +1};
    }
    return std::nullopt;
}

std::size_t WeylElt::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int enc : perm_) {
        h ^= (std::size_t)(enc + 1000003);
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<WeylElt> WeylElt::enumerate(const RootSystem& sys) {
    std::vector<WeylElt> out;
    std::set<WeylElt> seen;
    std::deque<WeylElt> queue{identity(sys)};
    seen.insert(identity(sys));
    while (!queue.empty()) {
        WeylElt cur = queue.front();
        queue.pop_front();
        out.push_back(cur);
        for (int i = 0; i < sys.rank(); ++i) {
            WeylElt next = cur.compose(simple(sys, i));
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return out;
}

}  // namespace anw
