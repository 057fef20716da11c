#include <doctest.h>

#include <algorithm>
#include <set>

#include "trifree/arcperm.hpp"
#include "trifree/coxeter.hpp"

using namespace trifree;

TEST_CASE("is_arc_permutation") {
    std::vector<int> a{2, 3, 1, 4, 0}, b{0, 2, 1, 3, 4}, c{0, 1, 4, 3, 2};
    CHECK(is_arc_permutation(5, a));
    CHECK_FALSE(is_arc_permutation(5, b));
    CHECK(is_arc_permutation(5, c));
    std::vector<int> bad{0, 0, 1, 2, 3};
    CHECK_THROWS_AS(is_arc_permutation(5, bad), Error);
}

TEST_CASE("enumerate_arc_perms") {
    CHECK(enumerate_arc_perms(4).size() == 16);
    CHECK(enumerate_arc_perms(5).size() == 40);
    for (int n = 2; n <= 9; ++n) {
        auto all = enumerate_arc_perms(n);
        CHECK(all.size() == static_cast<std::size_t>(n) << (n - 2));
        CHECK(std::is_sorted(all.begin(), all.end()));
        // brute force over every permutation
        std::vector<int> letters(n);
        for (int i = 0; i < n; ++i) letters[i] = i;
        std::size_t brute = 0;
        do {
            brute += is_arc_permutation(n, letters) ? 1 : 0;
        } while (n <= 8 && std::next_permutation(letters.begin(), letters.end()));
        if (n <= 8) CHECK(brute == all.size());
    }
}

TEST_CASE("encode_arc / decode_arc") {
    ArcPermutation p{5, {0, 1, 4, 3, 2}};
    auto v = encode_arc(p);
    CHECK(v.head == 0);
    CHECK(v.dirs == std::vector<std::uint8_t>{1, 0, 0});
    for (int n = 3; n <= 8; ++n) {
        std::set<ArcVector> image;
        for (const auto& q : enumerate_arc_perms(n)) {
            auto w = encode_arc(q);
            CHECK(decode_arc(w) == q);
            CHECK(w.head == q.letters[0]);
            image.insert(w);
        }
        CHECK(image.size() == static_cast<std::size_t>(n) << (n - 2));
    }
}

TEST_CASE("rho") {
    for (int n = 4; n <= 7; ++n) {
        auto all = enumerate_arc_perms(n);
        for (const auto& p : all) {
            for (int i = 0; i <= n - 2; ++i) {
                auto q = rho(p, i);
                CHECK(rho(q, i) == p);
                auto swapped = p.letters;
                std::swap(swapped[i], swapped[i + 1]);
                if (is_arc_permutation(n, swapped)) {
                    CHECK(q.letters == swapped);
                } else {
                    CHECK(q == p);
                }
                if (i > 0 && i < n - 2) {
                    // dirs[k] belongs to position k+2 (1-based)
                    auto d = encode_arc(p).dirs;
                    CHECK((q != p) == (d[i - 1] != d[i]));
                } else {
                    CHECK(q != p);
                }
            }
        }
    }
    CHECK_THROWS_AS(rho(ArcPermutation{5, {0, 1, 2, 3, 4}}, 4), Error);
}

TEST_CASE("rho_0 on encodings") {
    // swapping the first two letters moves the head one step along the first direction
    // and reverses that direction
    for (int n = 4; n <= 7; ++n) {
        for (const auto& p : enumerate_arc_perms(n)) {
            auto v = encode_arc(p), w = encode_arc(rho(p, 0));
            int step = v.dirs[0] ? 1 : -1;
            CHECK(w.head == mod(v.head + step, n));
            CHECK(w.dirs[0] == 1 - v.dirs[0]);
            CHECK(std::equal(v.dirs.begin() + 1, v.dirs.end(), w.dirs.begin() + 1));
        }
    }
}

TEST_CASE("rho: Coxeter relations, transitivity, head preserved by the parabolic") {
    for (int n = 4; n <= 6; ++n) {
        auto all = enumerate_arc_perms(n);
        auto act = [](const ArcPermutation& p, int i) { return rho(p, i); };
        CHECK_FALSE(coxeter_violation(all, n - 2, act).has_value());
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        CHECK(orbit(ArcPermutation{n, id}, n - 2, act) == all);
        for (const auto& p : all) {
            for (int i = 1; i <= n - 2; ++i) CHECK(rho(p, i).letters[0] == p.letters[0]);
        }
    }
}

TEST_CASE("class_of") {
    ArcPermutation id{6, {0, 1, 2, 3, 4, 5}};
    auto cl = class_of(id);
    CHECK(cl.subsets == std::vector<std::vector<int>>{{0, 1}, {2}, {3}, {4, 5}});
    CHECK_THROWS_AS(class_of(ArcPermutation{3, {0, 1, 2}}), Error);

    for (int n = 4; n <= 8; ++n) {
        std::set<ArcClass> classes;
        for (const auto& p : enumerate_arc_perms(n)) {
            auto c = class_of(p);
            CHECK(class_of(rho(p, 0)) == c);
            CHECK(class_of(rho(p, n - 2)) == c);
            CHECK(class_of(rho(rho(p, 0), n - 2)) == c);
            CHECK(is_valid_class(c));
            auto members = class_members(c);
            CHECK(members.size() == 4);
            CHECK(std::find(members.begin(), members.end(), p) != members.end());
            CHECK(representative(c) == members.front());
            classes.insert(c);
        }
        CHECK(classes.size() == static_cast<std::size_t>(n) << (n - 4));
        CHECK(enumerate_classes(n) == std::vector<ArcClass>(classes.begin(), classes.end()));
    }
}

TEST_CASE("theta") {
    ArcClass cl{6, {{0, 1}, {2}, {3}, {4, 5}}};
    CHECK(theta(cl, 0) == ArcClass{6, {{1, 2}, {0}, {3}, {4, 5}}});
    CHECK(theta(cl, 1) == cl);
    CHECK_THROWS_AS(theta(cl, 3), Error);

    for (int n = 5; n <= 8; ++n) {
        auto all = enumerate_classes(n);
        for (const auto& c : all) {
            for (int i = 0; i <= n - 4; ++i) {
                auto d = theta(c, i);
                CHECK(is_valid_class(d));
                CHECK(theta(d, i) == c);
            }
        }
        auto act = [](const ArcClass& c, int i) { return theta(c, i); };
        CHECK(orbit(all.front(), n - 4, act) == all);
        if (n >= 6) CHECK_FALSE(coxeter_violation(all, n - 4, act).has_value());
    }
}

TEST_CASE("f_map") {
    auto t0 = canonical_star(6);
    CHECK(f_map(t0) == ArcClass{6, {{0, 1}, {2}, {3}, {4, 5}}});
    for (int n = 5; n <= 8; ++n) {
        std::set<ArcClass> image;
        for (const auto& t : enumerate_ctft(n)) {
            auto c = f_map(t);
            CHECK(f_inv(c) == t);
            image.insert(c);
            auto rev = c.subsets;
            std::reverse(rev.begin(), rev.end());
            CHECK(f_map(reverse(t)).subsets == rev);
            CHECK(reverse_class(c).subsets == rev);
            for (int i = 0; i <= n - 4; ++i) CHECK(f_map(flip_label(t, i)) == theta(c, i));
        }
        CHECK(image.size() == enumerate_classes(n).size());
    }
}
