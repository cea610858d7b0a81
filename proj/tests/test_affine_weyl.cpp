#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "anw/affine_weyl.hpp"

using namespace anw;

namespace {

AffineRootLabel label(const RootSystem& sys, const IntVec& root, long long k) {
    auto r = sys.find_root(root);
    REQUIRE(r.has_value());
    return AffineRootLabel::make(*r, k);
}

AffineElt random_element(const RootSystem& sys, std::mt19937_64& rng, int word_len) {
    AffineElt x = AffineElt::identity(sys);
    for (int i = 0; i < word_len; ++i)
        x = x.mul(sys, AffineElt::simple(sys, (int)(rng() % (sys.rank() + 1))));
    return x;
}

}  // namespace

TEST_CASE("action on labels") {
    RootSystem sys(Cartan::preset("A2"));
    AffineElt t1 = AffineElt::translation(sys, {1, 0});

    // t_{a1^vee} [a1, 0] = [a1, 2]
    AffineRootLabel v = t1.act(sys, label(sys, {1, 0}, 0));
    CHECK(v == label(sys, {1, 0}, 2));

    // s_1 [a1, 5] = [-a1, 5] = -[a1, -5]
    AffineElt s1 = AffineElt::simple(sys, 1);
    AffineRootLabel u = s1.act(sys, label(sys, {1, 0}, 5));
    CHECK(u.root_index == sys.simple_root_index(0));
    CHECK(u.level == -5);
    CHECK(u.sign == -1);

    // identity fixes labels
    AffineElt e = AffineElt::identity(sys);
    AffineRootLabel w = label(sys, {1, 1}, -3);
    CHECK(e.act(sys, w) == w);
}

TEST_CASE("simple affine reflections") {
    RootSystem sys(Cartan::preset("A2"));
    for (int i = 0; i <= sys.rank(); ++i) {
        AffineElt s = AffineElt::simple(sys, i);
        CHECK(s.mul(sys, s).is_identity());
        CHECK(s.length(sys) == 1);
    }
    // s_0 negates its own wall label [theta, 1]
    AffineElt s0 = AffineElt::simple(sys, 0);
    AffineRootLabel wall = label(sys, {1, 1}, 1);
    CHECK(s0.act(sys, wall) == wall.negated());

    // braid relation s1 s2 s1 = s2 s1 s2
    AffineElt s1 = AffineElt::simple(sys, 1), s2 = AffineElt::simple(sys, 2);
    CHECK(s1.mul(sys, s2).mul(sys, s1) == s2.mul(sys, s1).mul(sys, s2));
}

TEST_CASE("length basics") {
    RootSystem sys(Cartan::preset("A2"));
    CHECK(AffineElt::identity(sys).length(sys) == 0);
    CHECK(AffineElt::simple(sys, 0).length(sys) == 1);
    CHECK(AffineElt::translation(sys, {1, 0}).length(sys) == 4);
}

TEST_CASE("length agrees with the BFS oracle") {
    for (const char* name : {"A2", "B2", "G2"}) {
        RootSystem sys(Cartan::preset(name));
        auto oracle = bfs_oracle(sys, 8);
        for (const auto& [x, len] : oracle) CHECK(x.length(sys) == len);
    }
    RootSystem a3(Cartan::preset("A3"));
    auto oracle = bfs_oracle(a3, 6);
    for (const auto& [x, len] : oracle) CHECK(x.length(a3) == len);
}

TEST_CASE("BFS oracle counts") {
    RootSystem sys(Cartan::preset("A2"));
    auto upto1 = bfs_oracle(sys, 1);
    CHECK(upto1.size() == 4);  // identity + three generators
    auto upto2 = bfs_oracle(sys, 2);
    // direct dedup of all products of two generators
    std::set<AffineElt> two;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            two.insert(AffineElt::simple(sys, i).mul(sys, AffineElt::simple(sys, j)));
    std::size_t expect = 0;
    for (const auto& [x, len] : upto2) {
        (void)len;
        expect += two.count(x) || x.length(sys) <= 1 ? 1 : 0;
    }
    CHECK(expect == upto2.size());
    CHECK_THROWS_AS(bfs_oracle(sys, 10, 16), std::runtime_error);
}

TEST_CASE("reduced words") {
    RootSystem sys(Cartan::preset("A2"));
    CHECK(AffineElt::identity(sys).reduced_word(sys).empty());
    CHECK(AffineElt::simple(sys, 2).reduced_word(sys) == std::vector<int>{2});

    AffineElt t1 = AffineElt::translation(sys, {1, 0});
    auto word = t1.reduced_word(sys);
    REQUIRE(word.size() == 4);
    CHECK(product_of_word(sys, word) == t1);
    // the fixed generator scan order pins this word
    CHECK(word == std::vector<int>{2, 0, 2, 1});

    auto words = t1.all_reduced_words(sys);
    CHECK(!words.empty());
    for (const auto& w : words) {
        CHECK(w.size() == 4);
        CHECK(product_of_word(sys, w) == t1);
    }
}

TEST_CASE("group laws and action, randomized") {
    RootSystem sys(Cartan::preset("B2"));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        AffineElt x = random_element(sys, rng, 5);
        AffineElt y = random_element(sys, rng, 5);
        CHECK(x.mul(sys, x.inverse(sys)).is_identity());
        CHECK(x.length(sys) == x.inverse(sys).length(sys));
        AffineRootLabel v = AffineRootLabel::make(
            RootRef{(int)(rng() % sys.num_positive()), rng() % 2 ? +1 : -1},
            (long long)(rng() % 7) - 3);
        CHECK(x.mul(sys, y).act(sys, v) == x.act(sys, y.act(sys, v)));
        for (int gen = 0; gen <= sys.rank(); ++gen) {
            long long diff =
                x.mul(sys, AffineElt::simple(sys, gen)).length(sys) - x.length(sys);
            CHECK((diff == 1 || diff == -1));
        }
    }
}

TEST_CASE("covers") {
    RootSystem sys(Cartan::preset("A2"));
    AffineElt e = AffineElt::identity(sys);
    AffineElt s1 = AffineElt::simple(sys, 1);
    CHECK(is_cover(sys, e, s1));
    CHECK(!is_cover(sys, e, s1.mul(sys, AffineElt::simple(sys, 2))));
    CHECK(!is_cover(sys, s1, s1));

    // reflections detected in (w, lam) form
    auto refl = AffineElt::reflection(sys, RootRef{sys.highest_root_index(), +1}, 3);
    auto back = refl.as_reflection(sys);
    REQUIRE(back.has_value());
    CHECK(back->first == RootRef{sys.highest_root_index(), +1});
    CHECK(back->second == 3);
    CHECK(refl.mul(sys, refl).is_identity());
    CHECK(!AffineElt::translation(sys, {1, 0}).as_reflection(sys).has_value());
}
