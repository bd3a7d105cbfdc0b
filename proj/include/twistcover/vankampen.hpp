// Zariski-van Kampen presentations of plane-curve complements from braid
// monodromy factorizations: one meridian generator per sheet, relations
// read off the factors through the Artin action.
#pragma once

#include <string>
#include <vector>

#include "twistcover/braid.hpp"
#include "twistcover/factorization.hpp"

namespace twistcover {

struct GroupPresentation {
    int generators = 0;
    std::vector<FreeWord> relators;  // each freely reduced

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// For each factor with conjugator Q, core i and power r, with
// A = artin_action(Q, x_i) and B = artin_action(Q, x_{i+1}):
//   r = 1 adds A B^{-1}; r = 2 adds the commutator [A,B];
//   r = 3 adds ABA(BAB)^{-1}.
// projective adds the boundary product x_1 x_2 ... x_m, the word fixed by
// the Artin action of every braid. Requires validate(F).
GroupPresentation presentation(const Factorization& F, bool projective);

// Text format:
//   gens <g>
//   rel <letters...>
// '#' starts a comment; blank lines are ignored.
GroupPresentation parse_presentation(const std::string& text);
std::string serialize_presentation(const GroupPresentation& P);

}  // namespace twistcover
