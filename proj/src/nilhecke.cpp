#include "anw/nilhecke.hpp"

#include <stdexcept>

namespace anw {

namespace {

// Finite reflection and divided difference used by generator i (0..r).
RootRef generator_root(const RootSystem& sys, int i) {
    return i == 0 ? RootRef{sys.highest_root_index(), +1}
                  : RootRef{sys.simple_root_index(i - 1), +1};
}

template <class C>
void add_into(std::map<AffineElt, C>& t, const AffineElt& x, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace

NilCoxeterElt nc_basis(const AffineElt& x, Rat c) {
    NilCoxeterElt t;
    if (!c.is_zero()) t.emplace(x, c);
    return t;
}

NilCoxeterElt nc_generator(const RootSystem& sys, int i) {
    return nc_basis(AffineElt::simple(sys, i));
}

NilCoxeterElt nc_mul(const RootSystem& sys, const NilCoxeterElt& a, const NilCoxeterElt& b) {
    NilCoxeterElt out;
    for (const auto& [x, cx] : a) {
        long long lx = x.length(sys);
        for (const auto& [y, cy] : b) {
            AffineElt xy = x.mul(sys, y);
            if (xy.length(sys) != lx + y.length(sys)) continue;
            add_into(out, xy, Rat(cx * cy));
        }
    }
    return out;
}

Polynomial generator_act(const RootSystem& sys, int i, const Polynomial& f) {
    Polynomial d = f.divided_difference(sys, generator_root(sys, i));
    return i == 0 ? -d : d;  // tau_0 acts by d_{alpha_0} = -d_theta
}

Polynomial act_on_poly(const RootSystem& sys, const NilCoxeterElt& a, const Polynomial& f) {
    Polynomial out(sys.rank());
    for (const auto& [x, c] : a) {
        Polynomial g = f;
        std::vector<int> word = x.reduced_word(sys);
        for (auto it = word.rbegin(); it != word.rend(); ++it) g = generator_act(sys, *it, g);
        out += c * g;
    }
    return out;
}

NilHeckeElt nh_from_nc(const RootSystem& sys, const NilCoxeterElt& a) {
    NilHeckeElt out;
    for (const auto& [x, c] : a) out.emplace(x, Polynomial::constant(sys.rank(), c));
    return out;
}

NilHeckeElt nh_scalar(const RootSystem& sys, const Polynomial& f) {
    return nh_basis(sys, AffineElt::identity(sys), f);
}

NilHeckeElt nh_basis(const RootSystem& sys, const AffineElt& x, Polynomial f) {
    (void)sys;
    NilHeckeElt out;
    if (!f.is_zero()) out.emplace(x, std::move(f));
    return out;
}

namespace {

// tau_i * (sum_z h_z tau_z), one cross-relation step.
NilHeckeElt nh_left_generator(const RootSystem& sys, int i, const NilHeckeElt& a) {
    NilHeckeElt out;
    AffineElt si = AffineElt::simple(sys, i);
    WeylElt twist = WeylElt::reflection(sys, generator_root(sys, i));
    for (const auto& [z, h] : a) {
        add_into(out, z, generator_act(sys, i, h));
        AffineElt sz = si.mul(sys, z);
        if (sz.length(sys) == z.length(sys) + 1)
            add_into(out, sz, h.weyl_act(sys, twist));
    }
    return out;
}

}  // namespace

NilHeckeElt nh_mul(const RootSystem& sys, const NilHeckeElt& a, const NilHeckeElt& b) {
    NilHeckeElt out;
    for (const auto& [x, f] : a) {
        std::vector<int> word = x.reduced_word(sys);
        for (const auto& [y, g] : b) {
            // f tau_x g tau_y: push tau_x through g, then multiply with tau_y.
            NilHeckeElt mid = nh_basis(sys, AffineElt::identity(sys), g);
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                mid = nh_left_generator(sys, *it, mid);
            long long ly = y.length(sys);
            for (const auto& [z, h] : mid) {
                AffineElt zy = z.mul(sys, y);
                if (zy.length(sys) != z.length(sys) + ly) continue;
                add_into(out, zy, f * h);
            }
        }
    }
    return out;
}

Polynomial act_on_poly(const RootSystem& sys, const NilHeckeElt& a, const Polynomial& f) {
    Polynomial out(sys.rank());
    for (const auto& [x, c] : a)
        out += c * act_on_poly(sys, nc_basis(x), f);
    return out;
}

bool centralizer_test(const RootSystem& sys, const NilHeckeElt& a) {
    for (int i = 0; i < sys.rank(); ++i) {
        NilHeckeElt w = nh_scalar(sys, Polynomial::variable(sys.rank(), i));
        if (nh_mul(sys, a, w) != nh_mul(sys, w, a)) return false;
    }
    return true;
}

long long coxeter_order(const RootSystem& sys, int i, int j, long long cap) {
    AffineElt p = AffineElt::simple(sys, i).mul(sys, AffineElt::simple(sys, j));
    AffineElt cur = p;
    for (long long m = 1; m <= cap; ++m) {
        if (cur.is_identity()) return m;
        cur = cur.mul(sys, p);
    }
    return 0;
}

std::vector<RelationCheck> verify_nilcoxeter_relations(const RootSystem& sys) {
    std::vector<RelationCheck> out;
    for (int i = 0; i <= sys.rank(); ++i) {
        NilCoxeterElt ti = nc_generator(sys, i);
        RelationCheck sq{"tau" + std::to_string(i) + "^2 = 0",
                         nc_mul(sys, ti, ti).empty()};
        out.push_back(sq);
    }
    for (int i = 0; i <= sys.rank(); ++i) {
        for (int j = i + 1; j <= sys.rank(); ++j) {
            long long m = coxeter_order(sys, i, j, 16);
            if (m == 0) continue;  // infinite order: no relation
            // (tau_i tau_j)^[m/2] tau_i^nu = (tau_j tau_i)^[m/2] tau_j^nu
            auto side = [&](int a, int b) {
                NilCoxeterElt acc = nc_basis(AffineElt::identity(sys));
                for (long long s = 0; s < m / 2; ++s) {
                    acc = nc_mul(sys, acc, nc_generator(sys, a));
                    acc = nc_mul(sys, acc, nc_generator(sys, b));
                }
                if (m % 2 == 1) acc = nc_mul(sys, acc, nc_generator(sys, a));
                return acc;
            };
            RelationCheck braid{"braid(" + std::to_string(i) + "," + std::to_string(j) +
                                    "), m=" + std::to_string(m),
                                side(i, j) == side(j, i)};
            out.push_back(braid);
        }
    }
    return out;
}

}  // namespace anw
