#include "twistcover/factorization.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "twistcover/garside.hpp"

namespace twistcover {

namespace {

void check_factor(const Factor& f, int strands) {
    if (f.power < 1) throw std::invalid_argument("factor power must be >= 1");
    if (f.core < 1 || f.core > strands - 1)
        throw std::invalid_argument("factor core out of range");
    // an empty conjugator is the identity in every braid group, so a
    // default-constructed Factor drops into any factorization
    if (!f.conjugator.empty() && f.conjugator.strands != strands)
        throw std::invalid_argument("conjugator strand count mismatch");
}

void check_range(const Factorization& F, int from, int to) {
    if (from < 1 || to < from || to > static_cast<int>(F.factors.size()))
        throw std::invalid_argument("factor range out of bounds");
}

// the conjugator with its strand count pinned to the factorization's
BraidWord conjugator_in(const Factor& f, int strands) {
    BraidWord w;
    w.strands = strands;
    w.letters = f.conjugator.letters;
    return w;
}

}  // namespace

BraidWord expand(const Factor& f, int strands) {
    check_factor(f, strands);
    BraidWord w;
    w.strands = strands;
    w.letters = f.conjugator.letters;
    for (int r = 0; r < f.power; ++r) w.letters.push_back(f.core);
    BraidWord back = invert(f.conjugator);
    w.letters.insert(w.letters.end(), back.letters.begin(), back.letters.end());
    return w;
}

BraidWord product(const Factorization& F) {
    BraidWord w;
    w.strands = F.strands;
    for (const auto& f : F.factors) {
        BraidWord fw = expand(f, F.strands);
        w.letters.insert(w.letters.end(), fw.letters.begin(), fw.letters.end());
    }
    return w;
}

ValidationResult validate(const Factorization& F, bool allow_higher_powers) {
    ValidationResult res;
    for (size_t i = 0; i < F.factors.size(); ++i) {
        int p = F.factors[i].power;
        if (p < 1 || (p > 3 && !allow_higher_powers)) {
            res.ok = false;
            res.reason = ValidationFailure::illegal_power;
            res.detail = "factor " + std::to_string(i + 1) + " has power " + std::to_string(p);
            return res;
        }
    }
    BraidWord target;
    if (F.strands >= 2) {
        target = full_twist(F.strands);
    } else {
        target.strands = F.strands;  // Delta^2 of B_1 is trivial
    }
    if (!equal(product(F), target)) {
        res.ok = false;
        res.reason = ValidationFailure::wrong_product;
        res.detail = "product is not the full twist";
        return res;
    }
    res.ok = true;
    res.reason = ValidationFailure::none;
    return res;
}

SingularityCensus census(const Factorization& F) {
    SingularityCensus c;
    for (const auto& f : F.factors) {
        switch (f.power) {
            case 1: ++c.branch_points; break;
            case 2: ++c.nodes; break;
            case 3: ++c.cusps; break;
            default:
                throw std::invalid_argument("census: factor power " + std::to_string(f.power) +
                                            " outside {1,2,3}");
        }
    }
    return c;
}

Factorization hurwitz_move(const Factorization& F, int i, int direction) {
    if (i < 1 || i >= static_cast<int>(F.factors.size()))
        throw std::invalid_argument("hurwitz move index out of range");
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("hurwitz move direction must be +1 or -1");
    Factorization G = F;
    Factor& a = G.factors[i - 1];
    Factor& b = G.factors[i];
    if (direction == 1) {
        // (a, b) -> (a b a^{-1}, a)
        Factor moved = b;
        moved.conjugator = compose(expand(a, F.strands), conjugator_in(b, F.strands));
        b = a;
        a = std::move(moved);
    } else {
        // (a, b) -> (b, b^{-1} a b)
        Factor moved = a;
        moved.conjugator = compose(invert(expand(b, F.strands)), conjugator_in(a, F.strands));
        a = b;
        b = std::move(moved);
    }
    return G;
}

Factorization partial_conjugate(const Factorization& F, int from, int to,
                                const BraidWord& b, int k) {
    check_range(F, from, to);
    if (b.strands != F.strands)
        throw std::invalid_argument("twisting braid strand count mismatch");
    if (k == 0) return F;

    BraidWord range_product;
    range_product.strands = F.strands;
    for (int i = from; i <= to; ++i) {
        BraidWord fw = expand(F.factors[i - 1], F.strands);
        range_product.letters.insert(range_product.letters.end(), fw.letters.begin(),
                                     fw.letters.end());
    }
    BraidWord pb = compose(range_product, b);
    BraidWord bp = compose(b, range_product);
    if (!equal(pb, bp)) {
        throw std::invalid_argument(
            "partial conjugation requires the range product to commute with the braid: "
            "nf(P b) = [" + format_letters(word_of(normal_form(pb)).letters) +
            "], nf(b P) = [" + format_letters(word_of(normal_form(bp)).letters) + "]");
    }

    BraidWord twist;
    twist.strands = F.strands;
    const BraidWord unit = (k > 0) ? b : invert(b);
    for (int r = 0; r < std::abs(k); ++r)
        twist.letters.insert(twist.letters.end(), unit.letters.begin(), unit.letters.end());

    Factorization G = F;
    for (int i = from; i <= to; ++i)
        G.factors[i - 1].conjugator =
            compose(twist, conjugator_in(G.factors[i - 1], F.strands));
    return G;
}

Factorization smooth_curve_factorization(int m) {
    if (m < 2) throw std::invalid_argument("smooth curve factorization needs degree >= 2");
    Factorization F;
    F.strands = m;
    BraidWord tw = full_twist(m);
    F.factors.reserve(tw.letters.size());
    for (int l : tw.letters) {
        Factor f;
        f.power = 1;
        f.core = l;
        f.conjugator = BraidWord(m, {});
        F.factors.push_back(std::move(f));
    }
    return F;
}

Factorization canonicalize_conjugators(const Factorization& F) {
    Factorization G = F;
    for (auto& f : G.factors) f.conjugator = word_of(normal_form(f.conjugator));
    return G;
}

Factorization parse_bmf(const std::string& text, bool allow_higher_powers) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Factorization F;
    bool saw_header = false, saw_strands = false;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("bmf parse error at line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (!saw_header) {
            std::string ver;
            if (tok != "bmf" || !(ls >> ver) || ver != "1") fail("expected header 'bmf 1'");
            if (ls >> tok) fail("trailing tokens after header");
            saw_header = true;
            continue;
        }
        if (!saw_strands) {
            int m = 0;
            if (tok != "strands" || !(ls >> m)) fail("expected 'strands <m>'");
            if (m < 1) fail("strand count must be >= 1");
            if (ls >> tok) fail("trailing tokens after strand count");
            F.strands = m;
            saw_strands = true;
            continue;
        }
        if (tok != "factor") fail("expected 'factor <power> <core> ; <letters...>'");
        Factor f;
        std::string semi;
        if (!(ls >> f.power >> f.core >> semi) || semi != ";")
            fail("expected 'factor <power> <core> ; <letters...>'");
        if (f.power < 1 || (f.power > 3 && !allow_higher_powers))
            fail("illegal power " + std::to_string(f.power));
        if (f.core < 1 || f.core > F.strands - 1)
            fail("core " + std::to_string(f.core) + " out of range");
        std::vector<int> letters;
        int v;
        while (ls >> v) {
            if (v == 0 || std::abs(v) > F.strands - 1)
                fail("conjugator letter " + std::to_string(v) + " out of range");
            letters.push_back(v);
        }
        if (!ls.eof()) fail("bad conjugator letter");
        f.conjugator = BraidWord(F.strands, std::move(letters));
        F.factors.push_back(std::move(f));
    }
    ++lineno;
    if (!saw_header) fail("missing header 'bmf 1'");
    if (!saw_strands) fail("missing 'strands <m>'");
    return F;
}

std::string serialize_bmf(const Factorization& F) {
    std::string out = "bmf 1\nstrands " + std::to_string(F.strands) + "\n";
    for (const auto& f : F.factors) {
        out += "factor " + std::to_string(f.power) + " " + std::to_string(f.core) + " ;";
        for (int l : f.conjugator.letters) out += " " + std::to_string(l);
        out += "\n";
    }
    return out;
}

}  // namespace twistcover
