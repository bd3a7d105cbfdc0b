// Braid words over the Artin generators, strand permutations, and the
// Artin action on free-group words.
#pragma once

#include <string>
#include <vector>

namespace twistcover {

// Permutation of {0, ..., n-1} stored as an image table.
// Composition is left to right: a.then(b) applies a first.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(int n);
    explicit Permutation(std::vector<int> image);
    static Permutation transposition(int n, int a, int b);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& image() const { return img_; }

    Permutation then(const Permutation& next) const;
    Permutation inverse() const;
    bool is_identity() const;

    // Nontrivial cycles, each rotated to start at its smallest element,
    // sorted by that element. 0-based.
    std::vector<std::vector<int>> cycles() const;
    // "(1 2)(3 5)" in 1-based labels; "()" for the identity.
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

  private:
    std::vector<int> img_;
};

// A word in B_n: letter i > 0 is sigma_i, letter -i is sigma_i^{-1},
// 1 <= i <= strands-1. The empty word is the identity braid.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls);

    bool empty() const { return letters.empty(); }
    long long exponent_sum() const;
};

BraidWord compose(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& w);
Permutation perm(const BraidWord& w);

// Delta^2 = (sigma_1 ... sigma_{n-1})^n, the central full twist. n >= 2.
BraidWord full_twist(int n);

// (sigma_{t-1} ... sigma_{s+1}) sigma_s (sigma_{s+1} ... sigma_{t-1})^{-1},
// the half twist swapping strands s and t. 1 <= s < t <= n.
BraidWord band_generator(int n, int s, int t);

// Freely reduced word in the free group on x_1..x_rank; letter i > 0 is
// x_i, letter -i is x_i^{-1}.
struct FreeWord {
    int rank = 0;
    std::vector<int> letters;

    FreeWord() = default;
    FreeWord(int r, std::vector<int> ls);  // freely reduces

    static FreeWord generator(int r, int i);
    bool empty() const { return letters.empty(); }
    FreeWord inverse() const;
    std::vector<long long> exponent_vector() const;

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

FreeWord concat(const FreeWord& u, const FreeWord& v);

// Artin action of a braid word on a free-group word, letters applied left
// to right. sigma_i sends x_i to x_i x_{i+1} x_i^{-1} and x_{i+1} to x_i.
FreeWord artin_action(const BraidWord& w, const FreeWord& x);

// Whitespace-separated signed letters, e.g. "1 2 -1". Throws on junk.
std::vector<int> parse_letters(const std::string& text);
std::string format_letters(const std::vector<int>& letters);

}  // namespace twistcover
