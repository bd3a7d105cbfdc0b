#include "twistcover/grouptools.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace twistcover {

std::string AbelianGroupStructure::format() const {
    if (is_trivial()) return "trivial";
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) {
        if (!s.empty()) s += " x ";
        s += "Z/" + d.str();
    }
    return s;
}

IntegerMatrix relation_matrix(const GroupPresentation& P) {
    IntegerMatrix m(static_cast<int>(P.relators.size()), P.generators);
    for (size_t r = 0; r < P.relators.size(); ++r) {
        auto e = P.relators[r].exponent_vector();
        for (int c = 0; c < P.generators; ++c) m.at(static_cast<int>(r), c) = e[c];
    }
    return m;
}

AbelianGroupStructure abelianization(const GroupPresentation& P) {
    AbelianGroupStructure s;
    if (P.generators == 0) return s;
    if (P.relators.empty()) {
        s.free_rank = P.generators;
        return s;
    }
    auto diag = smith_diagonal(relation_matrix(P));
    int nonzero = 0;
    for (const auto& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) s.torsion.push_back(d);
    }
    s.free_rank = P.generators - nonzero;
    return s;
}

namespace {

// conjugation cannot hide behind the ends of a relator
std::vector<int> cyclically_reduce(std::vector<int> w) {
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.pop_back();
        w.erase(w.begin());
    }
    return w;
}

std::vector<int> substitute(const std::vector<int>& rel, int gen,
                            const std::vector<int>& replacement, int rank) {
    std::vector<int> out;
    out.reserve(rel.size() * (replacement.size() + 1));
    for (int l : rel) {
        if (l == gen) {
            out.insert(out.end(), replacement.begin(), replacement.end());
        } else if (l == -gen) {
            for (auto it = replacement.rbegin(); it != replacement.rend(); ++it)
                out.push_back(-*it);
        } else {
            out.push_back(l);
        }
    }
    return FreeWord(rank, std::move(out)).letters;
}

size_t total_length(const std::vector<std::vector<int>>& rels) {
    size_t n = 0;
    for (const auto& r : rels) n += r.size();
    return n;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& P, TietzeLimits limits) {
    int gens = P.generators;
    std::vector<std::vector<int>> rels;
    rels.reserve(P.relators.size());
    for (const auto& r : P.relators) rels.push_back(r.letters);

    for (int pass = 0; pass < limits.max_passes; ++pass) {
        bool changed = false;

        for (auto& r : rels) {
            auto reduced = cyclically_reduce(FreeWord(gens, r).letters);
            if (reduced != r) {
                r = std::move(reduced);
                changed = true;
            }
        }

        // drop empty and duplicate relators (a relator equal to an earlier
        // one, or to its inverse, carries nothing new)
        {
            std::vector<std::vector<int>> kept;
            std::set<std::vector<int>> seen;
            for (auto& r : rels) {
                if (r.empty()) {
                    changed = true;
                    continue;
                }
                std::vector<int> inv(r.size());
                for (size_t i = 0; i < r.size(); ++i) inv[i] = -r[r.size() - 1 - i];
                if (seen.count(r) || seen.count(inv)) {
                    changed = true;
                    continue;
                }
                seen.insert(r);
                kept.push_back(std::move(r));
            }
            rels = std::move(kept);
        }

        // eliminate a generator that appears exactly once in a short relator
        int pick_rel = -1, pick_gen = 0;
        for (size_t ri = 0; ri < rels.size() && pick_rel < 0; ++ri) {
            const auto& r = rels[ri];
            if (static_cast<int>(r.size()) > limits.max_elim_relator_len) continue;
            for (int g = 1; g <= gens && pick_rel < 0; ++g) {
                int occurrences = 0;
                for (int l : r)
                    if (std::abs(l) == g) ++occurrences;
                if (occurrences == 1) {
                    pick_rel = static_cast<int>(ri);
                    pick_gen = g;
                }
            }
        }
        if (pick_rel >= 0) {
            // rotate the relator to u g^e v = 1, so g^e = (v u)^{-1}
            std::vector<int> r = rels[pick_rel];
            size_t at = 0;
            while (std::abs(r[at]) != pick_gen) ++at;
            std::vector<int> rest;  // v then u
            for (size_t i = at + 1; i < r.size(); ++i) rest.push_back(r[i]);
            for (size_t i = 0; i < at; ++i) rest.push_back(r[i]);
            std::vector<int> replacement;  // word standing for g
            if (r[at] > 0) {
                for (auto it = rest.rbegin(); it != rest.rend(); ++it) replacement.push_back(-*it);
            } else {
                replacement = rest;
            }

            std::vector<std::vector<int>> next;
            next.reserve(rels.size() - 1);
            bool too_big = false;
            for (size_t ri = 0; ri < rels.size(); ++ri) {
                if (static_cast<int>(ri) == pick_rel) continue;
                next.push_back(substitute(rels[ri], pick_gen, replacement, gens));
            }
            if (total_length(next) > limits.max_total_length) too_big = true;

            if (!too_big) {
                // renumber generators above the eliminated one
                for (auto& rr : next)
                    for (auto& l : rr) {
                        int a = std::abs(l);
                        if (a > pick_gen) l = (l > 0) ? l - 1 : l + 1;
                    }
                gens -= 1;
                rels = std::move(next);
                changed = true;
            }
        }

        if (!changed) break;
    }

    GroupPresentation Q;
    Q.generators = gens;
    for (auto& r : rels) Q.relators.push_back(FreeWord(gens, std::move(r)));
    return Q;
}

}  // namespace twistcover
