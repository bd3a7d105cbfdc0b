// Left-greedy normal form. A word is first rewritten as Delta^{-q} times a
// sequence of permutation braids (each negative letter contributes one
// Delta^{-1}, pushed to the front through a flip), then adjacent factors
// are repeatedly left-weighted by moving single crossings until every pair
// (a, b) satisfies S(b) contained in F(a). Identity factors are dropped and
// Delta factors absorbed into the infimum as they appear.

#include "twistcover/garside.hpp"

#include <cstdlib>
#include <stdexcept>

namespace twistcover {

namespace {

int max_inversions(int n) { return n * (n - 1) / 2; }

int inversions(const Permutation& p) {
    int n = p.degree(), c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p(i) > p(j)) ++c;
    return c;
}

// Delta x Delta^{-1}: conjugation by the order reversal.
Permutation flip(const Permutation& p) {
    int n = p.degree();
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = n - 1 - p(n - 1 - x);
    return Permutation(std::move(img));
}

// Moves crossings from the front of b to the back of a until (a, b) is
// left-weighted. A crossing sigma_i can move exactly when i is a descent
// of b (a starting letter) but not a descent of a^{-1} (not yet a
// finishing letter of a). Returns true if anything moved.
bool make_left_weighted(Permutation& a, Permutation& b) {
    int n = a.degree();
    bool moved = false;
    for (;;) {
        Permutation ainv = a.inverse();
        int pick = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (b(i) > b(i + 1) && ainv(i) < ainv(i + 1)) {
                pick = i;
                break;
            }
        }
        if (pick < 0) return moved;
        Permutation tau = Permutation::transposition(n, pick, pick + 1);
        a = a.then(tau);   // append sigma_{pick+1} to a
        b = tau.then(b);   // strip it from the front of b
        moved = true;
    }
}

}  // namespace

Permutation delta_perm(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
    return Permutation(std::move(img));
}

NormalForm normal_form(const BraidWord& w) {
    const int n = w.strands;
    NormalForm nf;
    nf.strands = n;
    if (n == 1) return nf;  // B_1 is trivial

    const Permutation delta = delta_perm(n);
    const int full = max_inversions(n);

    long long inf = 0;
    std::vector<Permutation> fs;
    fs.reserve(w.letters.size());
    for (int l : w.letters) {
        int i = std::abs(l) - 1;
        Permutation tau = Permutation::transposition(n, i, i + 1);
        if (l > 0) {
            fs.push_back(tau);
        } else {
            // sigma^{-1} = Delta^{-1} (Delta sigma^{-1}); moving Delta^{-1}
            // to the front flips everything already emitted
            for (auto& f : fs) f = flip(f);
            --inf;
            fs.push_back(delta.then(tau));
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Permutation> kept;
        kept.reserve(fs.size());
        for (auto& f : fs) {
            int iv = inversions(f);
            if (iv == 0) {
                changed = true;
                continue;
            }
            if (iv == full) {
                ++inf;
                for (auto& g : kept) g = flip(g);
                changed = true;
                continue;
            }
            kept.push_back(std::move(f));
        }
        fs.swap(kept);
        for (int i = static_cast<int>(fs.size()) - 2; i >= 0; --i)
            if (make_left_weighted(fs[i], fs[i + 1])) changed = true;
    }

    nf.inf = inf;
    nf.factors = std::move(fs);
    return nf;
}

bool equal(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands)
        throw std::invalid_argument("cannot compare braids with different strand counts");
    return normal_form(u) == normal_form(v);
}

BraidWord permutation_braid_word(const Permutation& pi) {
    int n = pi.degree();
    Permutation p = pi;
    BraidWord w;
    w.strands = n;
    for (;;) {
        int pick = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (p(i) > p(i + 1)) {
                pick = i;
                break;
            }
        }
        if (pick < 0) break;
        w.letters.push_back(pick + 1);
        p = Permutation::transposition(n, pick, pick + 1).then(p);
    }
    return w;
}

BraidWord word_of(const NormalForm& nf) {
    BraidWord w;
    w.strands = nf.strands;
    if (nf.strands == 1) return w;
    BraidWord delta_word = permutation_braid_word(delta_perm(nf.strands));
    if (nf.inf >= 0) {
        for (long long r = 0; r < nf.inf; ++r)
            w.letters.insert(w.letters.end(), delta_word.letters.begin(), delta_word.letters.end());
    } else {
        BraidWord delta_inv = invert(delta_word);
        for (long long r = 0; r < -nf.inf; ++r)
            w.letters.insert(w.letters.end(), delta_inv.letters.begin(), delta_inv.letters.end());
    }
    for (const auto& f : nf.factors) {
        BraidWord fw = permutation_braid_word(f);
        w.letters.insert(w.letters.end(), fw.letters.begin(), fw.letters.end());
    }
    return w;
}

}  // namespace twistcover
