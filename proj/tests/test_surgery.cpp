#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "twistcover/surgery.hpp"

using namespace twistcover;

namespace {

AbelianPresentation mu_gamma_ambient(int p) {
    AbelianPresentation amb;
    amb.generators = {"mu", "gamma"};
    amb.relations.push_back({Integer(1), Integer(0)});   // mu = 0
    amb.relations.push_back({Integer(0), Integer(3)});   // 3 gamma = 0
    amb.relations.push_back({Integer(0), Integer(p)});   // p gamma = 0
    return amb;
}

SurgerySpec spec_k(int k) {
    SurgerySpec s;
    s.k = k;
    s.mu = "mu";
    s.gamma = "gamma";
    return s;
}

}  // namespace

TEST_CASE("homology classes prune zeros and add termwise") {
    HomologyClass a = HomologyClass::of("x", Rational(1, 2));
    HomologyClass b = HomologyClass::of("x", Rational(-1, 2)) + HomologyClass::of("y", 3);
    HomologyClass s = a + b;
    CHECK(s.coefficient("x") == 0);
    CHECK(s.coefficient("y") == 3);
    CHECK(s.terms().size() == 1);
    CHECK(a.scaled(0).is_zero());
    CHECK(a.scaled(4).coefficient("x") == 2);
    CHECK(HomologyClass{}.is_zero());
}

TEST_CASE("class serialization round trips") {
    HomologyClass c = HomologyClass::of("PD[T]", Rational(3, 2)) +
                      HomologyClass::of("H_cls", Rational(-5));
    std::string text = serialize_class(c);
    CHECK(text == "sym H_cls -5/1\nsym PD[T] 3/2\n");
    CHECK(parse_class(text) == c);
    CHECK(serialize_class(parse_class(text)) == text);
    CHECK(serialize_class(HomologyClass{}) == "");
    CHECK(parse_class("").is_zero());
    CHECK(parse_class("# nothing\n\n").is_zero());
    // accumulation across duplicate lines
    CHECK(parse_class("sym a 1/2\nsym a 1/2\n").coefficient("a") == 1);
    CHECK_THROWS_AS(parse_class("sym a\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("foo a 1/2\n"), std::invalid_argument);
}

TEST_CASE("reduction mod relations is canonical") {
    AbelianPresentation amb = mu_gamma_ambient(3);
    // [mu] dies, gamma has order 3
    CHECK(reduce_mod_relations(amb, {Integer(1), Integer(0)}) ==
          std::vector<Integer>{0, 0});
    CHECK(reduce_mod_relations(amb, {Integer(0), Integer(3)}) ==
          std::vector<Integer>{0, 0});
    std::vector<Integer> g1 = reduce_mod_relations(amb, {Integer(0), Integer(1)});
    std::vector<Integer> g4 = reduce_mod_relations(amb, {Integer(5), Integer(4)});
    CHECK(g1 == g4);  // 4 gamma = gamma and mu = 0
    CHECK(g1 != std::vector<Integer>{0, 0});
}

TEST_CASE("class orders in the quotient") {
    AbelianPresentation amb = mu_gamma_ambient(3);
    CHECK(class_order(amb, {Integer(1), Integer(0)}) == 1);
    CHECK(class_order(amb, {Integer(0), Integer(1)}) == 3);
    CHECK(class_order(amb, {Integer(0), Integer(3)}) == 1);
    AbelianPresentation free_amb;
    free_amb.generators = {"a"};
    CHECK(class_order(free_amb, {Integer(2)}) == 0);  // infinite order
}

TEST_CASE("surgered meridian class") {
    SUBCASE("p = 3: order-3 gamma survives unless k is divisible by 3") {
        AbelianPresentation amb = mu_gamma_ambient(3);
        CHECK_FALSE(meridian_after_surgery(spec_k(1), amb).is_zero());
        CHECK_FALSE(meridian_after_surgery(spec_k(2), amb).is_zero());
        CHECK(meridian_after_surgery(spec_k(3), amb).is_zero());
        CHECK(meridian_after_surgery(spec_k(0), amb).is_zero());
        // the class is supported on the ambient generator basis
        HomologyClass c = meridian_after_surgery(spec_k(1), amb);
        CHECK(c.coefficient("gamma") != 0);
        CHECK(c.coefficient("mu") == 0);
    }
    SUBCASE("p = 4: gcd(3,4) = 1 kills gamma entirely") {
        AbelianPresentation amb = mu_gamma_ambient(4);
        for (int k = 0; k <= 6; ++k)
            CHECK(meridian_after_surgery(spec_k(k), amb).is_zero());
    }
    SUBCASE("additivity in k at the class level") {
        AbelianPresentation amb = mu_gamma_ambient(3);
        for (int k1 = 0; k1 <= 4; ++k1)
            for (int k2 = 0; k2 <= 4; ++k2) {
                HomologyClass lhs = meridian_after_surgery(spec_k(k1 + k2), amb);
                // [mu]+(k1+k2)[gamma] equals ([mu]+k1[gamma]) + k2[gamma] - [mu]
                // reduced; verify through reduce_mod_relations directly
                std::vector<Integer> v = {Integer(1), Integer(k1 + k2)};
                std::vector<Integer> w1 = {Integer(1), Integer(k1)};
                std::vector<Integer> w2 = {Integer(0), Integer(k2)};
                std::vector<Integer> sum = {w1[0] + w2[0] - 1, w1[1] + w2[1]};
                CHECK(reduce_mod_relations(amb, v) == reduce_mod_relations(amb, sum));
                (void)lhs;
            }
    }
}

TEST_CASE("torus primitivity closed form") {
    for (int p = 2; p <= 30; ++p)
        for (int k = 0; k <= 30; ++k) {
            bool expected = (p % 3 != 0) || (k % 3 == 0);
            CHECK(torus_primitivity(p, k) == expected);
            // lattice-membership oracle: k gamma lies in <3 gamma, p gamma>
            // exactly when gcd(3, p) divides k
            bool member = k % std::gcd(3, p) == 0;
            CHECK(torus_primitivity(p, k) == member);
        }
    CHECK_THROWS_AS(torus_primitivity(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(torus_primitivity(3, -1), std::invalid_argument);
}

TEST_CASE("canonical defect is k H PD[T]") {
    HolonomyValue H{Rational(1, 2), true};
    HomologyClass d = canonical_defect(1, H);
    CHECK(d.coefficient("PD[T]") == Rational(1, 2));
    CHECK(d.terms().size() == 1);
    CHECK(canonical_defect(0, H).is_zero());
    CHECK(canonical_defect(4, H).coefficient("PD[T]") == 2);
    CHECK(canonical_defect(-2, H).coefficient("PD[T]") == -1);
}

TEST_CASE("holonomy from the pairing identity") {
    // m H = lambda <omega> - <c1 K> - I_half
    HolonomyValue h = holonomy_relative(Integer(3), Rational(1), Rational(1),
                                        Rational(-3), Rational(3));
    CHECK(h.value == Rational(1, 3));
    CHECK(h.trivialization_shift_ambiguity);
    // half integers are legal intersection contributions
    HolonomyValue half = holonomy_relative(Integer(2), Rational(0), Rational(0),
                                           Rational(0), Rational(-3, 2));
    CHECK(half.value == Rational(3, 4));
    CHECK_THROWS_AS(holonomy_relative(Integer(0), Rational(1), Rational(1),
                                      Rational(1), Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(holonomy_relative(Integer(2), Rational(0), Rational(0),
                                      Rational(0), Rational(1, 3)),
                    std::invalid_argument);
}

TEST_CASE("holonomy shifts") {
    HolonomyValue H{Rational(1, 2), true};
    CHECK(trivialization_shift(H, Integer(2)).value == Rational(5, 2));
    CHECK(trivialization_shift(H, Integer(-1)).value == Rational(-1, 2));
    // deforming the symplectic form shifts by lambda * area
    CHECK(deformation_shift(H, Rational(3, 2), Rational(2)).value == Rational(7, 2));
    CHECK(deformation_shift(H, Rational(0), Rational(5)).value == H.value);
}

TEST_CASE("canonical class pullback over a declared basis") {
    std::vector<std::string> basis = {"E", "H_cls"};
    HomologyClass KY = HomologyClass::of("H_cls", Rational(-3));
    HomologyClass R = HomologyClass::of("H_cls", Rational(9)) +
                      HomologyClass::of("E", Rational(1));
    HomologyClass KX = canonical_pullback(KY, R, basis);
    CHECK(KX.coefficient("H_cls") == 6);
    CHECK(KX.coefficient("E") == 1);
    CHECK_THROWS_AS(canonical_pullback(HomologyClass::of("Q", Rational(1)), R, basis),
                    std::invalid_argument);
}

TEST_CASE("ramification class of plane branch curves") {
    HomologyClass r = ramification_class_cp2(Rational(3));
    CHECK(r.coefficient("H_cls") == 6);
    CHECK(ramification_class_cp2(Rational(3, 2)).coefficient("H_cls") == Rational(9, 2));
    CHECK(ramification_class_cp2(Rational(-3)).is_zero());
}

TEST_CASE("mapping torus monodromy after surgery") {
    MappingClassWord phi;
    phi.twists = {{"tau_gamma", -1}};
    // a single surgery cancels the inverse twist
    CHECK(mapping_torus_surgery(phi, "tau_gamma", 1).twists.empty());

    MappingClassWord psi;
    psi.twists = {{"tau_delta", 1}};
    MappingClassWord w = mapping_torus_surgery(psi, "tau_gamma", 3);
    REQUIRE(w.twists.size() == 2);
    CHECK(w.twists[0] == std::pair<std::string, int>("tau_gamma", 3));
    CHECK(w.twists[1] == std::pair<std::string, int>("tau_delta", 1));
    // k = 0 leaves the word alone
    CHECK(mapping_torus_surgery(psi, "tau_gamma", 0) == psi);
    // adjacent equal twists merge
    MappingClassWord chi;
    chi.twists = {{"tau_gamma", 2}};
    CHECK(mapping_torus_surgery(chi, "tau_gamma", 1).twists ==
          std::vector<std::pair<std::string, int>>{{"tau_gamma", 3}});
}

TEST_CASE("coorientation reversal is an involution negating k") {
    SurgerySpec s = spec_k(5);
    SurgerySpec r = reverse_coorientation(s);
    CHECK(r.k == -5);
    CHECK(r.coorientation == -1);
    CHECK(r.gamma == s.gamma);
    SurgerySpec rr = reverse_coorientation(r);
    CHECK(rr.k == s.k);
    CHECK(rr.coorientation == s.coorientation);
    // reversing a negative-k surgery yields the positive-k meridian class
    AbelianPresentation amb = mu_gamma_ambient(3);
    HomologyClass direct = meridian_after_surgery(spec_k(2), amb);
    HomologyClass reversed = meridian_after_surgery(reverse_coorientation(spec_k(-2)), amb);
    CHECK(direct == reversed);
}

TEST_CASE("ambient presentation validation") {
    AbelianPresentation amb = mu_gamma_ambient(2);
    CHECK(amb.index_of("mu") == 0);
    CHECK(amb.index_of("gamma") == 1);
    CHECK_THROWS_AS(amb.index_of("nu"), std::invalid_argument);
    CHECK_THROWS_AS(reduce_mod_relations(amb, {Integer(1)}), std::invalid_argument);
}
