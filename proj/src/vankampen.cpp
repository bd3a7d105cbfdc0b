#include "twistcover/vankampen.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace twistcover {

GroupPresentation presentation(const Factorization& F, bool projective) {
    if (auto v = validate(F); !v)
        throw std::invalid_argument("presentation requires a valid factorization: " + v.detail);

    const int m = F.strands;
    GroupPresentation P;
    P.generators = m;
    for (const auto& f : F.factors) {
        BraidWord Q(m, f.conjugator.letters);
        FreeWord A = artin_action(Q, FreeWord::generator(m, f.core));
        FreeWord B = artin_action(Q, FreeWord::generator(m, f.core + 1));
        FreeWord rel;
        switch (f.power) {
            case 1:  // A = B
                rel = concat(A, B.inverse());
                break;
            case 2:  // AB = BA
                rel = concat(concat(A, B), concat(A.inverse(), B.inverse()));
                break;
            case 3:  // ABA = BAB
                rel = concat(concat(concat(A, B), A),
                             concat(concat(B, A), B).inverse());
                break;
            default:
                throw std::invalid_argument("presentation: factor power outside {1,2,3}");
        }
        P.relators.push_back(std::move(rel));
    }
    if (projective) {
        std::vector<int> ls(m);
        for (int i = 0; i < m; ++i) ls[i] = i + 1;
        P.relators.push_back(FreeWord(m, std::move(ls)));
    }
    return P;
}

GroupPresentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    GroupPresentation P;
    bool saw_gens = false;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("presentation parse error at line " + std::to_string(lineno) +
                                    ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!saw_gens) {
            int g = 0;
            if (tok != "gens" || !(ls >> g)) fail("expected 'gens <g>'");
            if (g < 0) fail("generator count must be >= 0");
            if (ls >> tok) fail("trailing tokens after generator count");
            P.generators = g;
            saw_gens = true;
            continue;
        }
        if (tok != "rel") fail("expected 'rel <letters...>'");
        std::vector<int> letters;
        int v;
        while (ls >> v) {
            if (v == 0 || std::abs(v) > P.generators)
                fail("relator letter " + std::to_string(v) + " out of range");
            letters.push_back(v);
        }
        if (!ls.eof()) fail("bad relator letter");
        P.relators.push_back(FreeWord(P.generators, std::move(letters)));
    }
    ++lineno;
    if (!saw_gens) fail("missing 'gens <g>'");
    return P;
}

std::string serialize_presentation(const GroupPresentation& P) {
    std::string out = "gens " + std::to_string(P.generators) + "\n";
    for (const auto& r : P.relators) {
        out += "rel";
        for (int l : r.letters) out += " " + std::to_string(l);
        out += "\n";
    }
    return out;
}

}  // namespace twistcover
