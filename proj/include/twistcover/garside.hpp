// Garside left-greedy normal form over permutation braids. Two braid
// words are equal in B_n exactly when their normal forms coincide.
#pragma once

#include "twistcover/braid.hpp"

namespace twistcover {

// Delta^inf followed by left-weighted canonical factors, none of which is
// the identity or Delta.
struct NormalForm {
    int strands = 1;
    long long inf = 0;
    std::vector<Permutation> factors;

    long long sup() const { return inf + static_cast<long long>(factors.size()); }
    bool is_trivial() const { return inf == 0 && factors.empty(); }

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const BraidWord& w);

// Word equality in the braid group. Throws if strand counts differ.
bool equal(const BraidWord& u, const BraidWord& v);

// Canonical reduced positive word of the permutation braid of pi
// (smallest descent first).
BraidWord permutation_braid_word(const Permutation& pi);

// Canonical word spelling a normal form back out.
BraidWord word_of(const NormalForm& nf);

// The permutation of the positive half twist Delta: i -> n-1-i.
Permutation delta_perm(int n);

}  // namespace twistcover
