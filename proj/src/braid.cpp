#include "twistcover/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistcover {

Permutation::Permutation(int n) : img_(n) {
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("not a permutation image table");
        seen[v] = 1;
    }
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p(n);
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw std::invalid_argument("bad transposition");
    std::swap(p.img_[a], p.img_[b]);
    return p;
}

Permutation Permutation::then(const Permutation& next) const {
    if (degree() != next.degree()) throw std::invalid_argument("degree mismatch");
    Permutation r(degree());
    for (int i = 0; i < degree(); ++i) r.img_[i] = next.img_[img_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(degree());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            cyc.push_back(j);
            j = img_[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& cyc : cs) {
        s += "(";
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(cyc[i] + 1);
        }
        s += ")";
    }
    return s;
}

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    if (n < 1) throw std::invalid_argument("strand count must be >= 1");
    for (int l : letters) {
        int a = std::abs(l);
        if (l == 0 || a > n - 1)
            throw std::invalid_argument("braid letter " + std::to_string(l) +
                                        " out of range for " + std::to_string(n) + " strands");
    }
}

long long BraidWord::exponent_sum() const {
    long long s = 0;
    for (int l : letters) s += (l > 0) ? 1 : -1;
    return s;
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands) throw std::invalid_argument("strand count mismatch");
    BraidWord r = u;
    r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
    return r;
}

BraidWord invert(const BraidWord& w) {
    BraidWord r;
    r.strands = w.strands;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

Permutation perm(const BraidWord& w) {
    Permutation p(w.strands);
    for (int l : w.letters) {
        int i = std::abs(l) - 1;
        p = p.then(Permutation::transposition(w.strands, i, i + 1));
    }
    return p;
}

BraidWord full_twist(int n) {
    if (n < 2) throw std::invalid_argument("full twist needs at least 2 strands");
    BraidWord r;
    r.strands = n;
    r.letters.reserve(static_cast<size_t>(n) * (n - 1));
    for (int rep = 0; rep < n; ++rep)
        for (int i = 1; i < n; ++i) r.letters.push_back(i);
    return r;
}

BraidWord band_generator(int n, int s, int t) {
    if (s < 1 || t <= s || t > n) throw std::invalid_argument("band generator needs 1 <= s < t <= n");
    BraidWord r;
    r.strands = n;
    for (int j = t - 1; j > s; --j) r.letters.push_back(j);
    r.letters.push_back(s);
    for (int j = s + 1; j <= t - 1; ++j) r.letters.push_back(-j);
    return r;
}

namespace {

void push_reduced(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter)
        out.pop_back();
    else
        out.push_back(letter);
}

}  // namespace

FreeWord::FreeWord(int r, std::vector<int> ls) : rank(r) {
    if (r < 0) throw std::invalid_argument("free group rank must be >= 0");
    letters.reserve(ls.size());
    for (int l : ls) {
        int a = std::abs(l);
        if (l == 0 || a > r)
            throw std::invalid_argument("free letter " + std::to_string(l) +
                                        " out of range for rank " + std::to_string(r));
        push_reduced(letters, l);
    }
}

FreeWord FreeWord::generator(int r, int i) { return FreeWord(r, {i}); }

FreeWord FreeWord::inverse() const {
    FreeWord r;
    r.rank = rank;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

std::vector<long long> FreeWord::exponent_vector() const {
    std::vector<long long> e(rank, 0);
    for (int l : letters) e[std::abs(l) - 1] += (l > 0) ? 1 : -1;
    return e;
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
    if (u.rank != v.rank) throw std::invalid_argument("free group rank mismatch");
    FreeWord r;
    r.rank = u.rank;
    r.letters = u.letters;
    for (int l : v.letters) push_reduced(r.letters, l);
    return r;
}

FreeWord artin_action(const BraidWord& w, const FreeWord& x) {
    if (w.strands != x.rank)
        throw std::invalid_argument("braid strand count must equal free group rank");
    std::vector<int> cur = x.letters;
    std::vector<int> next;
    for (int bl : w.letters) {
        int i = std::abs(bl);
        next.clear();
        next.reserve(cur.size() * 3);
        for (int l : cur) {
            int a = std::abs(l);
            bool pos = l > 0;
            if (bl > 0) {
                // sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
                if (a == i) {
                    if (pos) {
                        push_reduced(next, i);
                        push_reduced(next, i + 1);
                        push_reduced(next, -i);
                    } else {
                        push_reduced(next, i);
                        push_reduced(next, -(i + 1));
                        push_reduced(next, -i);
                    }
                } else if (a == i + 1) {
                    push_reduced(next, pos ? i : -i);
                } else {
                    push_reduced(next, l);
                }
            } else {
                // sigma_i^{-1}: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
                if (a == i) {
                    push_reduced(next, pos ? i + 1 : -(i + 1));
                } else if (a == i + 1) {
                    if (pos) {
                        push_reduced(next, -(i + 1));
                        push_reduced(next, i);
                        push_reduced(next, i + 1);
                    } else {
                        push_reduced(next, -(i + 1));
                        push_reduced(next, -i);
                        push_reduced(next, i + 1);
                    }
                } else {
                    push_reduced(next, l);
                }
            }
        }
        cur.swap(next);
    }
    FreeWord r;
    r.rank = x.rank;
    r.letters = std::move(cur);
    return r;
}

std::vector<int> parse_letters(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad letter '" + tok + "'");
        }
        if (used != tok.size() || v == 0)
            throw std::invalid_argument("bad letter '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::string format_letters(const std::vector<int>& letters) {
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(letters[i]);
    }
    return s;
}

}  // namespace twistcover
