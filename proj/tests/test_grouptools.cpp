#include <doctest.h>

#include "twistcover/factorization.hpp"
#include "twistcover/grouptools.hpp"
#include "twistcover/vankampen.hpp"

using namespace twistcover;

namespace {

GroupPresentation pres(int gens, const std::vector<std::vector<int>>& rels) {
    GroupPresentation P;
    P.generators = gens;
    for (const auto& r : rels) P.relators.push_back(FreeWord(gens, r));
    return P;
}

}  // namespace

TEST_CASE("abelian structure formatting") {
    CHECK(AbelianGroupStructure{}.format() == "trivial");
    CHECK(AbelianGroupStructure{1, {}}.format() == "Z");
    CHECK(AbelianGroupStructure{2, {}}.format() == "Z^2");
    CHECK(AbelianGroupStructure{0, {Integer(3)}}.format() == "Z/3");
    CHECK(AbelianGroupStructure{2, {Integer(2), Integer(6)}}.format() == "Z^2 x Z/2 x Z/6");
    CHECK(AbelianGroupStructure{}.is_trivial());
    CHECK_FALSE(AbelianGroupStructure{0, {Integer(2)}}.is_trivial());
}

TEST_CASE("relation matrix rows are exponent vectors") {
    GroupPresentation P = pres(3, {{1, 2, -1, -2}, {3, 3}});
    IntegerMatrix m = relation_matrix(P);
    CHECK(m.rows == 2);
    CHECK(m.cols == 3);
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(0, 2) == 0);
    CHECK(m.at(1, 2) == 2);
}

TEST_CASE("abelianization of standard presentations") {
    // free group
    AbelianGroupStructure f2 = abelianization(pres(2, {}));
    CHECK(f2.free_rank == 2);
    CHECK(f2.torsion.empty());
    // trivial group on no generators
    CHECK(abelianization(pres(0, {})).is_trivial());
    // Z/2 x Z/4 presented messily
    AbelianGroupStructure h = abelianization(pres(2, {{1, 1, 2, 2}, {1, 1, -2, -2}}));
    CHECK(h.free_rank == 0);
    REQUIRE(h.torsion.size() == 2);
    CHECK(h.torsion[0] == 2);
    CHECK(h.torsion[1] == 4);
    // trefoil knot group abelianizes to Z
    AbelianGroupStructure t = abelianization(pres(2, {{1, 2, 1, -2, -1, -2}}));
    CHECK(t.free_rank == 1);
    CHECK(t.torsion.empty());
    // redundant relators do not change the result
    AbelianGroupStructure r =
        abelianization(pres(2, {{1, -2}, {1, -2}, {1, -2}, {1, 2}}));
    CHECK(r.free_rank == 0);
    REQUIRE(r.torsion.size() == 1);
    CHECK(r.torsion[0] == 2);
}

TEST_CASE("tietze simplification eliminates defined generators") {
    // x2 defined to equal x1; the quotient is Z/2
    GroupPresentation P = pres(2, {{1, -2}, {1, 1}});
    GroupPresentation Q = tietze_simplify(P);
    CHECK(Q.generators == 1);
    REQUIRE(Q.relators.size() == 1);
    CHECK(Q.relators[0].letters == std::vector<int>{1, 1});
    CHECK(abelianization(Q) == abelianization(P));
}

TEST_CASE("tietze simplification drops trivial and duplicate relators") {
    GroupPresentation P = pres(2, {{1, -1}, {1, 2}, {1, 2}, {-2, -1}, {}});
    GroupPresentation Q = tietze_simplify(P);
    CHECK(Q.generators == 1);  // x2 = x1^{-1} got eliminated
    CHECK(Q.relators.empty());
    CHECK(abelianization(Q).free_rank == 1);
}

TEST_CASE("tietze simplification of the cubic complement presentation") {
    GroupPresentation P = presentation(smooth_curve_factorization(3), true);
    GroupPresentation Q = tietze_simplify(P);
    CHECK(Q.generators <= 2);
    CHECK(abelianization(Q) == abelianization(P));
    AbelianGroupStructure h = abelianization(Q);
    CHECK(h.free_rank == 0);
    REQUIRE(h.torsion.size() == 1);
    CHECK(h.torsion[0] == 3);
}

TEST_CASE("tietze respects its limits") {
    GroupPresentation P = pres(2, {{1, -2}, {1, 1}});
    TietzeLimits tight;
    tight.max_passes = 0;
    CHECK(tietze_simplify(P, tight) == P);
    TietzeLimits no_elim;
    no_elim.max_elim_relator_len = 1;
    GroupPresentation Q = tietze_simplify(P, no_elim);
    CHECK(Q.generators == 2);  // the defining relator is too long to use
}

TEST_CASE("tietze keeps cyclically reduced relators") {
    GroupPresentation P = pres(3, {{3, 1, 2, -3}});
    GroupPresentation Q = tietze_simplify(P);
    for (const auto& r : Q.relators) {
        if (r.letters.size() >= 2)
            CHECK(r.letters.front() != -r.letters.back());
    }
    CHECK(abelianization(Q) == abelianization(P));
}
