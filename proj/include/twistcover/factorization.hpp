// Braid monodromy factorizations: ordered products of conjugated powers of
// Artin generators multiplying out to the full twist Delta^2. Powers 1, 2,
// 3 record branch points, nodes and cusps of the branch curve.
#pragma once

#include <iosfwd>
#include <string>

#include "twistcover/braid.hpp"

namespace twistcover {

// conjugator * sigma_core^power * conjugator^{-1}
struct Factor {
    int power = 1;
    int core = 1;
    BraidWord conjugator;
};

struct Factorization {
    int strands = 1;
    std::vector<Factor> factors;
};

struct SingularityCensus {
    long long branch_points = 0;
    long long nodes = 0;
    long long cusps = 0;

    long long total() const { return branch_points + nodes + cusps; }
    friend bool operator==(const SingularityCensus&, const SingularityCensus&) = default;
};

enum class ValidationFailure {
    none,
    illegal_power,
    wrong_product,
};

struct ValidationResult {
    bool ok = false;
    ValidationFailure reason = ValidationFailure::none;
    std::string detail;

    explicit operator bool() const { return ok; }
};

BraidWord expand(const Factor& f, int strands);
BraidWord product(const Factorization& F);

// Valid iff every power lies in {1,2,3} (unless allow_higher_powers) and the
// product equals the full twist.
ValidationResult validate(const Factorization& F, bool allow_higher_powers = false);

// Counts factors by power. Throws on a power outside {1,2,3}.
SingularityCensus census(const Factorization& F);

// Elementary transformation of the pair (f_i, f_{i+1}), 1 <= i < count.
// direction +1: (f_i f_{i+1} f_i^{-1}, f_i), the conjugator prepended.
// direction -1: the inverse move (f_{i+1}, f_{i+1}^{-1} f_i f_{i+1}).
Factorization hurwitz_move(const Factorization& F, int i, int direction);

// Conjugates factors from..to (1-based, inclusive) by b^k. Requires the
// sub-product of the range to commute with b, checked by normal form.
// k = 0 returns F unchanged.
Factorization partial_conjugate(const Factorization& F, int from, int to,
                                const BraidWord& b, int k);

// The full twist of B_m split into its m(m-1) letters, each a power-1
// factor: the monodromy of a smooth degree-m curve. m >= 2.
Factorization smooth_curve_factorization(int m);

// Rewrites every conjugator as the canonical word of its normal form.
// Each factor stays equal() to what it was; word lengths stay bounded
// under long Hurwitz walks.
Factorization canonicalize_conjugators(const Factorization& F);

// Text format:
//   bmf 1
//   strands <m>
//   factor <power> <core> ; <conjugator letters...>
// '#' starts a comment; blank lines are ignored. Parse errors carry line
// numbers. serialize/parse round-trips are bit exact.
Factorization parse_bmf(const std::string& text, bool allow_higher_powers = false);
std::string serialize_bmf(const Factorization& F);

}  // namespace twistcover
