#include "doctest.h"

#include <set>

#include "anw/alcove.hpp"

using namespace anw;

namespace {

WallLabel wall(const RootSystem& sys, const IntVec& root, long long k) {
    auto r = sys.find_root(root);
    REQUIRE(r.has_value());
    return {*r, k};
}

}  // namespace

TEST_CASE("identity path is empty, gamma is 1") {
    RootSystem sys(Cartan::preset("A2"));
    Baf baf(sys);
    AlcovePath p = reduced_alcove_path(sys, AffineElt::identity(sys));
    CHECK(p.crossings.empty());
    CHECK(is_scalar_one(gamma_word(baf, p)));
}

TEST_CASE("the four crossings of t_{a1} in A2") {
    RootSystem sys(Cartan::preset("A2"));
    Baf baf(sys);
    AffineElt t1 = AffineElt::translation(sys, {1, 0});
    AlcovePath p = reduced_alcove_path(sys, t1);
    REQUIRE(p.crossings.size() == 4);
    CHECK(p.crossings[0] == wall(sys, {0, -1}, 0));   // (-a2, 0)
    CHECK(p.crossings[1] == wall(sys, {1, 0}, 1));    // (a1, 1)
    CHECK(p.crossings[2] == wall(sys, {1, 1}, 1));    // (-a0, 1) = (theta, 1)
    CHECK(p.crossings[3] == wall(sys, {1, 0}, 2));    // (a1, 2)

    // [gamma] = [23][21,-1][31,-1][21,-2]: the word [a2,0][a1,1][theta,1][a1,2]
    // with total sign -1
    Tensor g = gamma_word(baf, p);
    REQUIRE(g.size() == 1);
    auto [word, coeff] = *g.begin();
    CHECK(coeff == Rat(-1));
    int a1 = sys.simple_root_index(0), a2 = sys.simple_root_index(1);
    int th = sys.highest_root_index();
    CHECK(word == Word{{a2, 0}, {a1, 1}, {th, 1}, {a1, 2}});

    // full contraction along the reduced word (2,0,2,1) gives +1
    CHECK(is_scalar_one(d_along_word(baf, g, {2, 0, 2, 1})));
    CHECK(is_scalar_one(d_x(baf, g, t1)));
}

TEST_CASE("single-crossing paths") {
    RootSystem sys(Cartan::preset("A2"));
    Baf baf(sys);
    AlcovePath p1 = reduced_alcove_path(sys, AffineElt::simple(sys, 1));
    REQUIRE(p1.crossings.size() == 1);
    CHECK(p1.crossings[0] == wall(sys, {-1, 0}, 0));
    Tensor g1 = gamma_word(baf, p1);
    CHECK(g1 == Tensor{{Word{{sys.simple_root_index(0), 0}}, Rat(1)}});

    AlcovePath p0 = reduced_alcove_path(sys, AffineElt::simple(sys, 0));
    REQUIRE(p0.crossings.size() == 1);
    CHECK(p0.crossings[0] == wall(sys, {1, 1}, 1));
    // gamma = [-theta,-1] = -[theta,1]
    CHECK(gamma_word(baf, p0) == Tensor{{Word{{sys.highest_root_index(), 1}}, Rat(-1)}});
    CHECK(is_scalar_one(d_along_word(baf, gamma_word(baf, p0), {0})));
}

TEST_CASE("path structure invariants") {
    RootSystem sys(Cartan::preset("B2"));
    Baf baf(sys);
    auto oracle = bfs_oracle(sys, 5);
    for (const auto& [x, len] : oracle) {
        AlcovePath p = reduced_alcove_path(sys, x);
        CHECK((long long)p.crossings.size() == len);
        CHECK(replay_crossings(sys, p) == x);
        // each separating wall is crossed exactly once
        std::set<std::pair<std::pair<int, int>, long long>> walls;
        for (const WallLabel& c : p.crossings) {
            auto [letter, s] = baf.canonical(c.root, c.level);
            (void)s;
            walls.insert({{letter.root, 0}, letter.level});
        }
        CHECK(walls.size() == p.crossings.size());
        // gamma word is homogeneous of W_af-degree x^{-1}
        CHECK(has_waf_degree(sys, gamma_word(baf, p), x.inverse(sys)));
    }
}

TEST_CASE("gamma contraction equals 1, small sweep") {
    for (const char* name : {"A2", "B2", "G2"}) {
        RootSystem sys(Cartan::preset(name));
        Baf baf(sys);
        auto oracle = bfs_oracle(sys, 4);
        for (const auto& [x, len] : oracle) {
            (void)len;
            Tensor g = gamma_word(baf, reduced_alcove_path(sys, x));
            CHECK(is_scalar_one(d_x(baf, g, x)));
        }
    }
}

TEST_CASE("gamma words are reduced-word independent in B_af") {
    RootSystem sys(Cartan::preset("A2"));
    Baf baf(sys);
    auto oracle = bfs_oracle(sys, 4);
    for (const auto& [x, len] : oracle) {
        (void)len;
        auto words = x.all_reduced_words(sys);
        Tensor base = symmetrize(baf, gamma_word(baf, path_from_word(sys, words[0])));
        for (std::size_t i = 1; i < words.size(); ++i) {
            Tensor other = symmetrize(baf, gamma_word(baf, path_from_word(sys, words[i])));
            CHECK(base == other);
        }
    }
}

TEST_CASE("bruhat symbols contract without signs") {
    RootSystem sys(Cartan::preset("A2"));
    Baf baf(sys);
    AffineElt s0 = AffineElt::simple(sys, 0);
    // [s_0] D_{[theta,1]} = [e] = 1
    AffineRootLabel v = AffineRootLabel::make(RootRef{sys.highest_root_index(), +1}, 1);
    Tensor d = differential(baf, bruhat_symbol(baf, s0), v);
    CHECK(d == bruhat_symbol(baf, AffineElt::identity(sys)));
    CHECK(is_scalar_one(d));
}
