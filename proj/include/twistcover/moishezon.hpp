// Closed-form invariants of the family X_{p,k}: branched covers of CP^2
// along Moishezon's cuspidal branch curves, modified by k-fold Luttinger
// surgery along a fixed Lagrangian torus.
#pragma once

#include <string>

#include "twistcover/grouptools.hpp"
#include "twistcover/rational.hpp"
#include "twistcover/surgery.hpp"

namespace twistcover {

struct FamilyParams {
    int p = 2;  // p >= 2
    int k = 0;  // k >= 0
};

struct FamilyInvariants {
    long long d = 0;       // branch curve degree downstairs: 3p(p-1)
    long long m = 0;       // braid index upstairs: 9p(p-1)
    long long cusps = 0;   // 27(p-1)(4p-5)
    long long nodes = 0;   // 27(p-1)(p-2)(3p^2+3p-8)/2
    Rational lambda_p;     // (6p-9)/p
    Rational H;            // (2p-3)/p
    Rational alpha_coefficient;  // k(2p-3)/p
    AbelianGroupStructure h1;
    bool torus_primitive = false;
};

FamilyInvariants invariants(const FamilyParams& params);

enum class DistinguishOutcome {
    distinct,
    identical,
    not_decided,
};

struct DistinguishResult {
    DistinguishOutcome outcome = DistinguishOutcome::not_decided;
    // period lattice generators of the defect classes: k_i (2p-3)/p
    Rational period1;
    Rational period2;
    // a period of one side that the other side does not have (when distinct)
    Rational witness;
    std::string note;
};

// The defect-period argument separating X_{p,k1} from X_{p,k2}. Applicable
// when p is not divisible by 3, or when both k's are; outside that regime
// the pi_1 hypothesis fails and the outcome is not_decided.
DistinguishResult distinguish(int p, int k1, int k2);

// g = (m-1)(m-2)/2 - nodes - cusps; throws if negative.
Integer plucker_genus(const Integer& m, const Integer& nodes, const Integer& cusps);

// p(lambda_p + 3) = 9p - 9 and lambda_p = (6p-9)/p, checked exactly.
bool lemma41_consistency(int p);

// H(gamma, tau_T) computed along both proof routes:
//   first:  m = p, both pairings 0, half-weighted intersection 3-2p
//   second: m = 3, lambda = lambda_p, <omega>=1, <c1(K)>=-3, intersection 3
// Both must give (2p-3)/p.
std::pair<Rational, Rational> h_two_ways(int p);

}  // namespace twistcover
