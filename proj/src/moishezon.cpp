#include "twistcover/moishezon.hpp"

#include <stdexcept>

namespace twistcover {

namespace {

void check_params(int p, int k) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
}

Rational lambda_of(int p) { return Rational(6 * p - 9, p); }
Rational holonomy_of(int p) { return Rational(2 * p - 3, p); }

}  // namespace

FamilyInvariants invariants(const FamilyParams& params) {
    const int p = params.p, k = params.k;
    check_params(p, k);

    FamilyInvariants inv;
    inv.d = 3LL * p * (p - 1);
    inv.m = 3 * inv.d;
    inv.cusps = 27LL * (p - 1) * (4 * p - 5);
    long long nodes_num = 27LL * (p - 1) * (p - 2) * (3LL * p * p + 3 * p - 8);
    if (nodes_num % 2 != 0) throw std::logic_error("node count is not an integer");
    inv.nodes = nodes_num / 2;
    inv.lambda_p = lambda_of(p);
    inv.H = holonomy_of(p);
    inv.alpha_coefficient = Rational(k) * inv.H;
    if (p % 3 == 0 && k % 3 == 0)
        inv.h1.torsion.push_back(3);
    inv.torus_primitive = torus_primitivity(p, k);
    return inv;
}

DistinguishResult distinguish(int p, int k1, int k2) {
    check_params(p, k1);
    check_params(p, k2);

    DistinguishResult res;
    bool applicable = (p % 3 != 0) || (k1 % 3 == 0 && k2 % 3 == 0);
    if (!applicable) {
        res.outcome = DistinguishOutcome::not_decided;
        res.note = "outside the primitivity regime: the torus class is imprimitive for at "
                   "least one twisting parameter, so the period comparison does not apply";
        return res;
    }

    const Rational h = holonomy_of(p);
    res.period1 = Rational(k1) * h;
    res.period2 = Rational(k2) * h;
    if (k1 == k2) {
        res.outcome = DistinguishOutcome::identical;
        res.note = "equal twisting parameters give equal period sets";
        return res;
    }
    res.outcome = DistinguishOutcome::distinct;
    // period sets are k_i * h * Z; with k1 != k2 (both >= 0) the smaller
    // positive generator is a period of one side only
    int lo = std::min(k1, k2), hi = std::max(k1, k2);
    if (lo == 0) {
        res.witness = Rational(hi) * h;
        res.note = "witness period " + rat_str(res.witness) +
                   " lies in one period set; the other is {0}";
    } else {
        res.witness = Rational(lo) * h;
        res.note = "witness period " + rat_str(res.witness) +
                   " is not an integer multiple of " + rat_str(Rational(hi) * h);
    }
    return res;
}

Integer plucker_genus(const Integer& m, const Integer& nodes, const Integer& cusps) {
    Integer g = (m - 1) * (m - 2) / 2 - nodes - cusps;
    if (g < 0)
        throw std::invalid_argument("degree-genus count went negative: not a nodal-cuspidal curve");
    return g;
}

bool lemma41_consistency(int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    Rational lam = lambda_of(p);
    bool chain = Rational(p) * (lam + 3) == Rational(9 * p - 9);
    bool value = lam == Rational(6 * p - 9, p);
    return chain && value;
}

std::pair<Rational, Rational> h_two_ways(int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    // p copies of gamma bound a punctured line: both pairings vanish and
    // the boundary half-weights contribute p - (3p-3) intersections
    HolonomyValue first = holonomy_relative(Integer(p), lambda_of(p), Rational(0), Rational(0),
                                            Rational(3 - 2 * p));
    // the cover route: a section of multiplicity 3 with <omega>=1,
    // <c1(K)>=-3 and three positive intersections with the branch torus
    HolonomyValue second = holonomy_relative(Integer(3), lambda_of(p), Rational(1), Rational(-3),
                                             Rational(3));
    return {first.value, second.value};
}

}  // namespace twistcover
