// Exact homology bookkeeping for Luttinger surgery along a Lagrangian
// torus: the surgered meridian class, canonical-symplectic defect,
// holonomy values in a fixed trivialization, and mapping-torus twist words.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistcover/intmatrix.hpp"
#include "twistcover/rational.hpp"

namespace twistcover {

// Formal rational combination of named basis classes. Zero coefficients
// are pruned, so the zero class has empty support.
class HomologyClass {
  public:
    HomologyClass() = default;
    static HomologyClass of(const std::string& symbol, const Rational& coefficient);

    const Rational& coefficient(const std::string& symbol) const;
    void set(const std::string& symbol, const Rational& coefficient);
    bool is_zero() const { return coeff_.empty(); }
    const std::map<std::string, Rational>& terms() const { return coeff_; }

    HomologyClass& operator+=(const HomologyClass& other);
    friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
    HomologyClass scaled(const Rational& s) const;

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

  private:
    std::map<std::string, Rational> coeff_;
};

// Finitely generated abelian group on named generators, relations given as
// integer coefficient rows.
struct AbelianPresentation {
    std::vector<std::string> generators;
    std::vector<std::vector<Integer>> relations;  // each of size generators.size()

    int index_of(const std::string& name) const;  // throws on unknown name
};

struct SurgerySpec {
    int k = 0;
    std::string gamma;
    std::string mu;
    int coorientation = +1;  // +1 or -1
};

// Holonomy of a loop in a fixed trivialization; well defined modulo
// integers once the trivialization is allowed to change.
struct HolonomyValue {
    Rational value;
    bool trivialization_shift_ambiguity = true;

    friend bool operator==(const HolonomyValue&, const HolonomyValue&) = default;
};

// Free word over named Dehn twists, adjacent equal names merged, zero
// exponents dropped.
struct MappingClassWord {
    std::vector<std::pair<std::string, int>> twists;

    friend bool operator==(const MappingClassWord&, const MappingClassWord&) = default;
};

// One "sym <name> <numerator>/<denominator>" line per term, sorted by
// name; the zero class serializes to the empty string. Round trips are
// bit exact.
std::string serialize_class(const HomologyClass& c);
HomologyClass parse_class(const std::string& text);

// Canonical representative of v modulo the relation lattice of the ambient
// group (computed through Smith normal form of the relation matrix).
std::vector<Integer> reduce_mod_relations(const AbelianPresentation& ambient,
                                          const std::vector<Integer>& v);

// Order of the class of v in the quotient; 0 means infinite order.
Integer class_order(const AbelianPresentation& ambient, const std::vector<Integer>& v);

// [mu] + k[gamma] reduced modulo the ambient relations.
HomologyClass meridian_after_surgery(const SurgerySpec& spec,
                                     const AbelianPresentation& ambient);

// Whether the image of the torus fiber class survives as a primitive
// (here: whether the surgered meridian class [mu] + k[gamma] dies in the
// ambient quotient {[mu]=0, 3[gamma]=0, p[gamma]=0}). p >= 2, k >= 0.
bool torus_primitivity(int p, int k);

// c1(K~) - lambda[omega~] = k H(gamma,tau_T) PD[T]; defined for the fixed
// trivialization tau_T.
HomologyClass canonical_defect(int k, const HolonomyValue& H);

// m H = lambda <omega, .> - <c1(K), .> - I_half, solved for H. m != 0; the
// half-weighted intersection value must have denominator 1 or 2.
HolonomyValue holonomy_relative(const Integer& m, const Rational& lambda,
                                const Rational& omega_pairing,
                                const Rational& canonical_pairing,
                                const Rational& intersection_halfweighted);

// Changing the trivialization shifts H by an integer.
HolonomyValue trivialization_shift(const HolonomyValue& H, const Integer& s);
// Deforming omega by a form of area `area` shifts H by lambda*area.
HolonomyValue deformation_shift(const HolonomyValue& H, const Rational& lambda,
                                const Rational& area);

// Pullback c1(K_X) = f^* c1(K_Y) + PD[R] for a cover branched over R; both
// inputs must be supported on the declared shared basis.
HomologyClass canonical_pullback(const HomologyClass& c1KY, const HomologyClass& R,
                                 const std::vector<std::string>& shared_basis);

// Branch curve of degree c in CP^2: c1(K) pairing coefficient c gives the
// ramification class (c + 3) [H_cls] upstairs.
HomologyClass ramification_class_cp2(const Rational& c);

// Monodromy of the surgered mapping torus: tau_gamma^k * phi,
// exponent-normalized.
MappingClassWord mapping_torus_surgery(const MappingClassWord& phi,
                                       const std::string& gamma, int k);

// Reversing the coorientation of the surgery torus negates k and flips the
// coorientation sign; an involution.
SurgerySpec reverse_coorientation(const SurgerySpec& spec);

}  // namespace twistcover
