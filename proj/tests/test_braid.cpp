#include <doctest.h>

#include <stdexcept>

#include "testutil.hpp"
#include "twistcover/braid.hpp"

using namespace twistcover;

TEST_CASE("permutation composition is left to right") {
    Permutation a = Permutation::transposition(3, 0, 1);
    Permutation b = Permutation::transposition(3, 1, 2);
    Permutation ab = a.then(b);
    // 0 -> 1 -> 2 under a then b
    CHECK(ab(0) == 2);
    CHECK(ab(1) == 0);
    CHECK(ab(2) == 1);
    CHECK(a.then(a).is_identity());
    CHECK(ab.then(ab.inverse()).is_identity());
}

TEST_CASE("permutation cycles and cycle strings") {
    CHECK(Permutation(4).cycle_string() == "()");
    CHECK(Permutation::transposition(4, 0, 2).cycle_string() == "(1 3)");
    Permutation p(std::vector<int>{2, 0, 1, 4, 3});
    CHECK(p.cycle_string() == "(1 3 2)(4 5)");
    auto cyc = p.cycles();
    REQUIRE(cyc.size() == 2);
    CHECK(cyc[0] == std::vector<int>{0, 2, 1});
    CHECK(cyc[1] == std::vector<int>{3, 4});
}

TEST_CASE("permutation constructor rejects junk") {
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3}), std::invalid_argument);
}

TEST_CASE("braid word validation") {
    CHECK_NOTHROW(BraidWord(3, {1, -2, 1}));
    CHECK_THROWS_AS(BraidWord(3, {3}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(2, {-2}), std::invalid_argument);
}

TEST_CASE("strand permutation of a word") {
    // sigma_1 sigma_2 sends strand 1 -> 3, 2 -> 1, 3 -> 2
    Permutation p = perm(BraidWord(3, {1, 2}));
    CHECK(p.image() == std::vector<int>{2, 0, 1});
    CHECK(p.cycle_string() == "(1 3 2)");
    CHECK(perm(BraidWord(3, {1, -1})).is_identity());
    CHECK(perm(BraidWord(3, {1})) == perm(BraidWord(3, {-1})));
}

TEST_CASE("perm is a homomorphism to the symmetric group") {
    auto g = testutil::rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 4;
        BraidWord u = testutil::random_word(g, n, 6);
        BraidWord v = testutil::random_word(g, n, 6);
        CHECK(perm(compose(u, v)) == perm(u).then(perm(v)));
        CHECK(perm(invert(u)) == perm(u).inverse());
    }
}

TEST_CASE("compose and invert") {
    BraidWord u(3, {1, 2});
    BraidWord v(3, {-1});
    CHECK(compose(u, v).letters == std::vector<int>{1, 2, -1});
    CHECK(invert(u).letters == std::vector<int>{-2, -1});
    CHECK(u.exponent_sum() == 2);
    CHECK(invert(u).exponent_sum() == -2);
    CHECK_THROWS_AS(compose(u, BraidWord(4, {1})), std::invalid_argument);
}

TEST_CASE("full twist word") {
    CHECK(full_twist(2).letters == std::vector<int>{1, 1});
    CHECK(full_twist(3).letters == std::vector<int>{1, 2, 1, 2, 1, 2});
    CHECK(perm(full_twist(4)).is_identity());
    CHECK(full_twist(4).exponent_sum() == 12);  // n(n-1)
    CHECK_THROWS_AS(full_twist(1), std::invalid_argument);
}

TEST_CASE("band generators are conjugated crossings") {
    CHECK(band_generator(3, 1, 2).letters == std::vector<int>{1});
    CHECK(band_generator(3, 1, 3).letters == std::vector<int>{2, 1, -2});
    CHECK(band_generator(4, 2, 4).letters == std::vector<int>{3, 2, -3});
    CHECK(perm(band_generator(3, 1, 3)).cycle_string() == "(1 3)");
    CHECK(perm(band_generator(4, 2, 4)).cycle_string() == "(2 4)");
    CHECK(perm(band_generator(6, 2, 5)).cycle_string() == "(2 5)");
    CHECK_THROWS_AS(band_generator(3, 2, 2), std::invalid_argument);
}

TEST_CASE("free words reduce on construction") {
    FreeWord w(3, {1, 2, -2, -1, 3});
    CHECK(w.letters == std::vector<int>{3});
    CHECK(FreeWord(2, {1, -1}).empty());
    CHECK(concat(FreeWord(2, {1, 2}), FreeWord(2, {-2, -1})).empty());
    CHECK(FreeWord(2, {1, 2, 1}).inverse().letters == std::vector<int>{-1, -2, -1});
    CHECK(FreeWord(3, {1, 1, -2, 3, 1}).exponent_vector() ==
          std::vector<long long>{3, -1, 1});
}

TEST_CASE("artin action of a single generator") {
    FreeWord x1 = FreeWord::generator(2, 1);
    FreeWord x2 = FreeWord::generator(2, 2);
    BraidWord s1(2, {1});
    CHECK(artin_action(s1, x1).letters == std::vector<int>{1, 2, -1});
    CHECK(artin_action(s1, x2).letters == std::vector<int>{1});
    BraidWord s1inv(2, {-1});
    CHECK(artin_action(s1inv, x1).letters == std::vector<int>{2});
    CHECK(artin_action(s1inv, x2).letters == std::vector<int>{-2, 1, 2});
}

TEST_CASE("artin action composes and inverts") {
    FreeWord x1 = FreeWord::generator(2, 1);
    // sigma_1^2: x1 -> x1 x2 x1 x2^{-1} x1^{-1}
    CHECK(artin_action(BraidWord(2, {1, 1}), x1).letters ==
          std::vector<int>{1, 2, 1, -2, -1});
    // a word followed by its inverse acts as the identity
    auto g = testutil::rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 3;
        BraidWord w = testutil::random_word(g, n, 8);
        for (int i = 1; i <= n; ++i) {
            FreeWord x = FreeWord::generator(n, i);
            CHECK(artin_action(compose(w, invert(w)), x) == x);
        }
    }
}

TEST_CASE("artin action fixes the ascending boundary product") {
    auto g = testutil::rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 4;
        std::vector<int> asc(n);
        for (int i = 0; i < n; ++i) asc[i] = i + 1;
        FreeWord boundary(n, asc);
        BraidWord w = testutil::random_word(g, n, 10);
        CHECK(artin_action(w, boundary) == boundary);
    }
}

TEST_CASE("letter parsing") {
    CHECK(parse_letters("1 2 -1") == std::vector<int>{1, 2, -1});
    CHECK(parse_letters("  ") == std::vector<int>{});
    CHECK(parse_letters("\t3\n-3 ") == std::vector<int>{3, -3});
    CHECK_THROWS_AS(parse_letters("1 x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_letters("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_letters("1.5"), std::invalid_argument);
    CHECK(format_letters({1, -2, 3}) == "1 -2 3");
    CHECK(format_letters({}) == "");
}
