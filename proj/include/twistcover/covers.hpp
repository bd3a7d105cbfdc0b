// Enumeration of degree-n branched covers: transitive homomorphisms of a
// finitely presented group into S_n sending marked meridian generators to
// transpositions, listed up to simultaneous conjugation.
#pragma once

#include <stdexcept>
#include <vector>

#include "twistcover/braid.hpp"
#include "twistcover/vankampen.hpp"

namespace twistcover {

struct CoverSolution {
    std::vector<Permutation> images;  // one per generator

    friend bool operator==(const CoverSolution&, const CoverSolution&) = default;
    friend auto operator<=>(const CoverSolution& x, const CoverSolution& y) {
        return x.images <=> y.images;
    }
};

struct CoverOptions {
    // search nodes before the enumeration aborts with cap_exceeded
    long long node_cap = 20'000'000;
    // strict: meridians map to genuine 2-cycles (n = 1 therefore has no
    // covers). Relaxed additionally admits the identity image, so n = 1
    // yields the single trivial cover.
    bool strict_meridians = true;
    // 0 = library default thread count; 1 = force the serial path
    int workers = 0;
};

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// meridians are 1-based generator indices; must be nonempty.
// Every returned solution is the lexicographically smallest tuple in its
// conjugation orbit; the list is sorted, complete and duplicate-free.
std::vector<CoverSolution> enumerate_covers(const GroupPresentation& P, int n,
                                            const std::vector<int>& meridians,
                                            const CoverOptions& opts = {});

// Single-threaded reference enumerator; same contract, same output.
std::vector<CoverSolution> enumerate_covers_serial(const GroupPresentation& P, int n,
                                                   const std::vector<int>& meridians,
                                                   const CoverOptions& opts = {});

}  // namespace twistcover
