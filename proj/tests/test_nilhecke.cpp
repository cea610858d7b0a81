#include "doctest.h"

#include <random>

#include "anw/bafs.hpp"
#include "anw/nilhecke.hpp"

using namespace anw;

TEST_CASE("nil-Coxeter products") {
    RootSystem sys(Cartan::preset("A2"));
    NilCoxeterElt t1 = nc_generator(sys, 1);
    NilCoxeterElt t2 = nc_generator(sys, 2);
    CHECK(nc_mul(sys, t1, t1).empty());
    AffineElt s1s2 = AffineElt::simple(sys, 1).mul(sys, AffineElt::simple(sys, 2));
    CHECK(nc_mul(sys, t1, t2) == nc_basis(s1s2));
    CHECK(nc_mul(sys, nc_basis(s1s2), t2).empty());
}

TEST_CASE("nil-Coxeter relations hold in the tau_x model") {
    for (const char* name : {"A2", "B2", "G2"}) {
        RootSystem sys(Cartan::preset(name));
        for (const RelationCheck& rc : verify_nilcoxeter_relations(sys)) {
            INFO(name, ": ", rc.name);
            CHECK(rc.pass);
        }
    }
}

TEST_CASE("nc_mul is associative on random basis triples") {
    RootSystem sys(Cartan::preset("A2"));
    auto oracle = bfs_oracle(sys, 5);
    std::vector<AffineElt> elts;
    for (const auto& [x, len] : oracle) {
        (void)len;
        elts.push_back(x);
    }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        NilCoxeterElt a = nc_basis(elts[rng() % elts.size()]);
        NilCoxeterElt b = nc_basis(elts[rng() % elts.size()]);
        NilCoxeterElt c = nc_basis(elts[rng() % elts.size()]);
        CHECK(nc_mul(sys, nc_mul(sys, a, b), c) == nc_mul(sys, a, nc_mul(sys, b, c)));
    }
}

TEST_CASE("divided-difference representation") {
    RootSystem sys(Cartan::preset("A2"));
    Polynomial w1 = Polynomial::variable(2, 0);
    // tau_0(w1) = -d_theta(w1) = -1
    CHECK(generator_act(sys, 0, w1) == Polynomial::constant(2, Rat(-1)));
    CHECK(generator_act(sys, 1, Polynomial::constant(2, Rat(1))).is_zero());
    // the action factors through nc_mul
    std::mt19937_64 rng(17);
    auto oracle = bfs_oracle(sys, 4);
    std::vector<AffineElt> elts;
    for (const auto& [x, len] : oracle) {
        (void)len;
        elts.push_back(x);
    }
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial f = random_polynomial(2, rng(), 4);
        NilCoxeterElt a = nc_basis(elts[rng() % elts.size()]);
        NilCoxeterElt b = nc_basis(elts[rng() % elts.size()]);
        CHECK(act_on_poly(sys, nc_mul(sys, a, b), f) ==
              act_on_poly(sys, a, act_on_poly(sys, b, f)));
    }
}

TEST_CASE("nil-Hecke cross relation") {
    RootSystem sys(Cartan::preset("A2"));
    Polynomial w1 = Polynomial::variable(2, 0);
    NilHeckeElt t1 = nh_from_nc(sys, nc_generator(sys, 1));
    NilHeckeElt prod = nh_mul(sys, t1, nh_scalar(sys, w1));
    // tau_1 w1 = 1 + s_1(w1) tau_1
    NilHeckeElt expect = nh_scalar(sys, Polynomial::constant(2, Rat(1)));
    WeylElt s1 = WeylElt::simple(sys, 0);
    expect = [&] {
        NilHeckeElt e = expect;
        auto term = nh_basis(sys, AffineElt::simple(sys, 1), w1.weyl_act(sys, s1));
        for (auto& [x, f] : term) {
            auto [it, ins] = e.emplace(x, f);
            if (!ins) it->second += f;
        }
        return e;
    }();
    CHECK(prod == expect);

    // pure polynomials multiply as polynomials
    Polynomial f = random_polynomial(2, 5), g = random_polynomial(2, 6);
    CHECK(nh_mul(sys, nh_scalar(sys, f), nh_scalar(sys, g)) == nh_scalar(sys, f * g));
}

TEST_CASE("nil-Hecke associativity and cross-relation consistency") {
    RootSystem sys(Cartan::preset("A2"));
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial f = random_polynomial(2, rng(), 3, 3);
        Polynomial g = random_polynomial(2, rng(), 3, 3);
        NilHeckeElt t1 = nh_from_nc(sys, nc_generator(sys, rng() % 3));
        NilHeckeElt a = nh_mul(sys, t1, nh_scalar(sys, f));
        CHECK(nh_mul(sys, a, nh_scalar(sys, g)) ==
              nh_mul(sys, t1, nh_scalar(sys, f * g)));
    }
    // acting with tau_i f and with d_i(f) + s_i(f) tau_i agree on random polys
    for (int gen = 0; gen <= 2; ++gen) {
        for (int trial = 0; trial < 10; ++trial) {
            Polynomial f = random_polynomial(2, rng(), 3, 3);
            Polynomial h = random_polynomial(2, rng(), 3, 3);
            NilHeckeElt ti = nh_from_nc(sys, nc_generator(sys, gen));
            NilHeckeElt lhs = nh_mul(sys, ti, nh_scalar(sys, f));
            Polynomial via_elt = act_on_poly(sys, lhs, h);
            RootRef root = gen == 0 ? RootRef{sys.highest_root_index(), +1}
                                    : RootRef{sys.simple_root_index(gen - 1), +1};
            Polynomial direct = generator_act(sys, gen, f * h);
            CHECK(via_elt == direct);
            Polynomial split = generator_act(sys, gen, f) * h +
                               f.weyl_act(sys, WeylElt::reflection(sys, root)) *
                                   generator_act(sys, gen, h);
            CHECK(direct == split);
        }
    }
}

TEST_CASE("centralizer membership") {
    RootSystem sys(Cartan::preset("A2"));
    CHECK(centralizer_test(sys, nh_scalar(sys, random_polynomial(2, 123))));
    CHECK(centralizer_test(sys, nh_basis(sys, AffineElt::identity(sys),
                                         Polynomial::variable(2, 0))));
    for (int gen = 0; gen <= 2; ++gen)
        CHECK(!centralizer_test(sys, nh_from_nc(sys, nc_generator(sys, gen))));
}

TEST_CASE("phi: generators, relations, injectivity at small length") {
    RootSystem sys(Cartan::preset("A2"));
    Baf baf(sys);
    // phi(tau_0) = [alpha_0,-1] = -[theta,1]
    BafsElt p0 = phi(baf, nh_from_nc(sys, nc_generator(sys, 0)));
    REQUIRE(p0.size() == 1);
    CHECK(p0.begin()->first == Word{Letter{sys.highest_root_index(), 1}});
    CHECK(p0.begin()->second == Polynomial::constant(2, Rat(-1)));
    // phi(f) = f
    Polynomial f = random_polynomial(2, 31);
    CHECK(phi(baf, nh_scalar(sys, f)) == bafs_scalar(sys, f));

    // defining relation images vanish in B_af(S)
    for (int i = 0; i <= 2; ++i) {
        for (int j = i + 1; j <= 2; ++j) {
            NilHeckeElt ti = nh_from_nc(sys, nc_generator(sys, i));
            NilHeckeElt tj = nh_from_nc(sys, nc_generator(sys, j));
            BafsElt lhs = bafs_mul(baf, bafs_mul(baf, phi(baf, ti), phi(baf, tj)), phi(baf, ti));
            BafsElt rhs = bafs_mul(baf, bafs_mul(baf, phi(baf, tj), phi(baf, ti)), phi(baf, tj));
            CHECK(is_zero_in_B(baf, sub(lhs, rhs)));
            BafsElt sq = bafs_mul(baf, phi(baf, ti), phi(baf, ti));
            CHECK(is_zero_in_B(baf, sq));
        }
    }

    // phi(tau_x) != 0 for all x of length <= 4 (full sweep in acceptance)
    for (const auto& [x, len] : bfs_oracle(sys, 4)) {
        (void)len;
        CHECK(!is_zero_in_B(baf, phi(baf, nh_from_nc(sys, nc_basis(x)))));
    }
}

TEST_CASE("phi is multiplicative on sampled pairs") {
    RootSystem sys(Cartan::preset("A2"));
    Baf baf(sys);
    std::mt19937_64 rng(41);
    auto oracle = bfs_oracle(sys, 3);
    std::vector<AffineElt> elts;
    for (const auto& [x, len] : oracle) {
        (void)len;
        elts.push_back(x);
    }
    for (int trial = 0; trial < 12; ++trial) {
        NilHeckeElt a = nh_basis(sys, elts[rng() % elts.size()],
                                 random_polynomial(2, rng(), 2, 2));
        NilHeckeElt b = nh_basis(sys, elts[rng() % elts.size()],
                                 random_polynomial(2, rng(), 2, 2));
        BafsElt lhs = phi(baf, nh_mul(sys, a, b));
        BafsElt rhs = bafs_mul(baf, phi(baf, a), phi(baf, b));
        CHECK(is_zero_in_B(baf, sub(lhs, rhs)));
    }
}

TEST_CASE("B_af(S) cross relation") {
    RootSystem sys(Cartan::preset("A2"));
    Baf baf(sys);
    Polynomial w1 = Polynomial::variable(2, 0);
    RootRef a1{sys.simple_root_index(0), +1};
    for (long long level : {0LL, 5LL}) {
        // [a1, k] w1 = 1 + s_1(w1) [a1, k]; the twist ignores the level
        BafsElt prod = bafs_mul(baf, bafs_letter(baf, a1, level), bafs_scalar(sys, w1));
        BafsElt expect = bafs_scalar(sys, Polynomial::constant(2, Rat(1)));
        add_term(expect, Word{Letter{a1.index, level}},
                 w1.weyl_act(sys, WeylElt::reflection(sys, a1)));
        CHECK(prod == expect);
    }
    Polynomial f = random_polynomial(2, 8), g = random_polynomial(2, 9);
    CHECK(bafs_mul(baf, bafs_scalar(sys, f), bafs_scalar(sys, g)) == bafs_scalar(sys, f * g));
}
