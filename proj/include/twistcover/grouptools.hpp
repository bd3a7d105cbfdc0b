// Abelianization and Tietze simplification of finite presentations.
#pragma once

#include <string>
#include <vector>

#include "twistcover/intmatrix.hpp"
#include "twistcover/vankampen.hpp"

namespace twistcover {

// Z^free_rank x Z/d_1 x ... x Z/d_t with 1 < d_1 | d_2 | ... | d_t.
struct AbelianGroupStructure {
    int free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    // "trivial", "Z", "Z/3", "Z^2 x Z/2 x Z/6", ...
    std::string format() const;

    friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

// Exponent-sum matrix of the relators (one row per relator).
IntegerMatrix relation_matrix(const GroupPresentation& P);

AbelianGroupStructure abelianization(const GroupPresentation& P);

struct TietzeLimits {
    int max_passes = 30;
    // a generator is only eliminated from a relator of at most this length
    int max_elim_relator_len = 8;
    // substitutions that would push the total relator length past this are skipped
    size_t max_total_length = 65536;
};

// Deterministic sequence of Tietze moves: free and cyclic reduction,
// dropping trivial and duplicate relators, and eliminating generators
// defined by short relators in which they appear exactly once. The result
// presents an isomorphic group.
GroupPresentation tietze_simplify(const GroupPresentation& P, TietzeLimits limits = {});

}  // namespace twistcover
