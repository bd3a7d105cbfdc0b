#include "twistcover/surgery.hpp"

#include <sstream>
#include <stdexcept>

namespace twistcover {

HomologyClass HomologyClass::of(const std::string& symbol, const Rational& coefficient) {
    HomologyClass c;
    c.set(symbol, coefficient);
    return c;
}

const Rational& HomologyClass::coefficient(const std::string& symbol) const {
    static const Rational zero{};
    auto it = coeff_.find(symbol);
    return it == coeff_.end() ? zero : it->second;
}

void HomologyClass::set(const std::string& symbol, const Rational& coefficient) {
    if (coefficient == 0)
        coeff_.erase(symbol);
    else
        coeff_[symbol] = coefficient;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& other) {
    for (const auto& [sym, c] : other.coeff_) set(sym, coefficient(sym) + c);
    return *this;
}

HomologyClass HomologyClass::scaled(const Rational& s) const {
    HomologyClass r;
    for (const auto& [sym, c] : coeff_) r.set(sym, c * s);
    return r;
}

std::string serialize_class(const HomologyClass& c) {
    std::string out;
    for (const auto& [sym, q] : c.terms())
        out += "sym " + sym + " " + numerator(q).str() + "/" + denominator(q).str() + "\n";
    return out;
}

HomologyClass parse_class(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    HomologyClass c;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("class parse error at line " + std::to_string(lineno) + ": " +
                                    msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tok, name, value;
        if (!(ls >> tok)) continue;
        if (tok != "sym" || !(ls >> name >> value)) fail("expected 'sym <name> <num>/<den>'");
        if (ls >> tok) fail("trailing tokens");
        try {
            Rational q{value};
            c.set(name, c.coefficient(name) + q);
        } catch (const std::exception&) {
            fail("bad rational '" + value + "'");
        }
    }
    return c;
}

int AbelianPresentation::index_of(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator '" + name + "'");
}

namespace {

IntegerMatrix relation_matrix_of(const AbelianPresentation& ambient) {
    int g = static_cast<int>(ambient.generators.size());
    IntegerMatrix m(static_cast<int>(ambient.relations.size()), g);
    for (size_t r = 0; r < ambient.relations.size(); ++r) {
        if (static_cast<int>(ambient.relations[r].size()) != g)
            throw std::invalid_argument("relation row length mismatch");
        for (int c = 0; c < g; ++c) m.at(static_cast<int>(r), c) = ambient.relations[r][c];
    }
    return m;
}

// v as a row vector times a matrix
std::vector<Integer> row_times(const std::vector<Integer>& v, const IntegerMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows) throw std::invalid_argument("shape mismatch");
    std::vector<Integer> out(m.cols);
    for (int j = 0; j < m.cols; ++j) {
        Integer s = 0;
        for (int i = 0; i < m.rows; ++i) s += v[i] * m.at(i, j);
        out[j] = s;
    }
    return out;
}

Integer positive_mod(const Integer& a, const Integer& d) {
    Integer r = a % d;
    if (r < 0) r += abs(d);
    return r;
}

}  // namespace

std::vector<Integer> reduce_mod_relations(const AbelianPresentation& ambient,
                                          const std::vector<Integer>& v) {
    int g = static_cast<int>(ambient.generators.size());
    if (static_cast<int>(v.size()) != g)
        throw std::invalid_argument("vector length must match generator count");
    if (ambient.relations.empty()) return v;
    SnfResult snf = smith_normal_form(relation_matrix_of(ambient));
    // the lattice becomes diagonal in the V-coordinates w = v V
    std::vector<Integer> w = row_times(v, snf.V);
    int limit = std::min(snf.D.rows, snf.D.cols);
    for (int i = 0; i < limit; ++i) {
        const Integer& d = snf.D.at(i, i);
        if (d != 0) w[i] = positive_mod(w[i], d);
    }
    return row_times(w, snf.Vinv);
}

Integer class_order(const AbelianPresentation& ambient, const std::vector<Integer>& v) {
    int g = static_cast<int>(ambient.generators.size());
    if (static_cast<int>(v.size()) != g)
        throw std::invalid_argument("vector length must match generator count");
    if (ambient.relations.empty()) {
        for (const auto& c : v)
            if (c != 0) return 0;
        return 1;
    }
    SnfResult snf = smith_normal_form(relation_matrix_of(ambient));
    std::vector<Integer> w = row_times(v, snf.V);
    int limit = std::min(snf.D.rows, snf.D.cols);
    Integer order = 1;
    for (int j = 0; j < g; ++j) {
        Integer d = (j < limit) ? snf.D.at(j, j) : Integer(0);
        if (d == 0) {
            if (w[j] != 0) return 0;  // infinite order
            continue;
        }
        Integer r = positive_mod(w[j], d);
        if (r == 0) continue;
        Integer step = d / gcd(d, r);
        order = lcm(order, step);
    }
    return order;
}

HomologyClass meridian_after_surgery(const SurgerySpec& spec,
                                     const AbelianPresentation& ambient) {
    int g = static_cast<int>(ambient.generators.size());
    int mu = ambient.index_of(spec.mu);
    int gamma = ambient.index_of(spec.gamma);
    std::vector<Integer> v(g, 0);
    v[mu] += 1;
    v[gamma] += spec.k;
    std::vector<Integer> reduced = reduce_mod_relations(ambient, v);
    HomologyClass out;
    for (int i = 0; i < g; ++i) out.set(ambient.generators[i], Rational(reduced[i]));
    return out;
}

bool torus_primitivity(int p, int k) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    AbelianPresentation ambient;
    ambient.generators = {"mu", "gamma"};
    ambient.relations = {{Integer(1), Integer(0)},
                         {Integer(0), Integer(3)},
                         {Integer(0), Integer(p)}};
    SurgerySpec spec;
    spec.k = k;
    spec.gamma = "gamma";
    spec.mu = "mu";
    return meridian_after_surgery(spec, ambient).is_zero();
}

HomologyClass canonical_defect(int k, const HolonomyValue& H) {
    return HomologyClass::of("PD[T]", Rational(k) * H.value);
}

HolonomyValue holonomy_relative(const Integer& m, const Rational& lambda,
                                const Rational& omega_pairing,
                                const Rational& canonical_pairing,
                                const Rational& intersection_halfweighted) {
    if (m == 0) throw std::invalid_argument("multiplicity m must be nonzero");
    Integer den = denominator(intersection_halfweighted);
    if (den != 1 && den != 2)
        throw std::invalid_argument("half-weighted intersection value must be a half-integer");
    HolonomyValue H;
    H.value = (lambda * omega_pairing - canonical_pairing - intersection_halfweighted) / Rational(m);
    H.trivialization_shift_ambiguity = true;
    return H;
}

HolonomyValue trivialization_shift(const HolonomyValue& H, const Integer& s) {
    HolonomyValue r = H;
    r.value += Rational(s);
    return r;
}

HolonomyValue deformation_shift(const HolonomyValue& H, const Rational& lambda,
                                const Rational& area) {
    HolonomyValue r = H;
    r.value += lambda * area;
    return r;
}

HomologyClass canonical_pullback(const HomologyClass& c1KY, const HomologyClass& R,
                                 const std::vector<std::string>& shared_basis) {
    auto check = [&](const HomologyClass& c, const char* which) {
        for (const auto& [sym, coeff] : c.terms()) {
            (void)coeff;
            bool found = false;
            for (const auto& b : shared_basis)
                if (b == sym) {
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument(std::string("basis mismatch: ") + which +
                                            " uses '" + sym + "' outside the shared basis");
        }
    };
    check(c1KY, "canonical class");
    check(R, "ramification class");
    return c1KY + R;
}

HomologyClass ramification_class_cp2(const Rational& c) {
    return HomologyClass::of("H_cls", c + 3);
}

namespace {

MappingClassWord normalized(std::vector<std::pair<std::string, int>> twists) {
    MappingClassWord w;
    for (auto& [name, e] : twists) {
        if (e == 0) continue;
        if (!w.twists.empty() && w.twists.back().first == name) {
            w.twists.back().second += e;
            if (w.twists.back().second == 0) w.twists.pop_back();
        } else {
            w.twists.emplace_back(std::move(name), e);
        }
    }
    return w;
}

}  // namespace

MappingClassWord mapping_torus_surgery(const MappingClassWord& phi,
                                       const std::string& gamma, int k) {
    std::vector<std::pair<std::string, int>> twists;
    twists.emplace_back(gamma, k);
    twists.insert(twists.end(), phi.twists.begin(), phi.twists.end());
    return normalized(std::move(twists));
}

SurgerySpec reverse_coorientation(const SurgerySpec& spec) {
    SurgerySpec r = spec;
    r.k = -spec.k;
    r.coorientation = -spec.coorientation;
    return r;
}

}  // namespace twistcover
