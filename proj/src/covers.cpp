// Backtracking over generator images with partial-relator pruning and
// first-orbit canonicalization: a partial assignment survives only if no
// simultaneous conjugation makes its image tuple lexicographically
// smaller, so every orbit is emitted exactly once, as its minimal
// representative. The parallel enumerator fans the candidate images of the
// first generator out to OpenMP workers and merges the per-branch results
// in branch order, which keeps the output deterministic.

#include "twistcover/covers.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twistcover {

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Permutation> all_transpositions(int n) {
    std::vector<Permutation> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) out.push_back(Permutation::transposition(n, a, b));
    std::sort(out.begin(), out.end());
    return out;
}

struct SearchContext {
    const GroupPresentation& P;
    int n;
    std::vector<char> is_meridian;            // per generator
    std::vector<std::vector<Permutation>> domains;  // per generator, sorted
    std::vector<std::vector<int>> relators_at;      // level -> relator indices
    std::vector<Permutation> group;           // all of S_n
    std::vector<Permutation> group_inv;       // inverses, aligned with group
    long long node_cap;

    SearchContext(const GroupPresentation& p, int nn, const std::vector<int>& meridians,
                  const CoverOptions& opts)
        : P(p), n(nn), node_cap(opts.node_cap) {
        if (n < 1) throw std::invalid_argument("cover degree must be >= 1");
        if (meridians.empty())
            throw std::invalid_argument("cover enumeration needs a nonempty meridian set");
        is_meridian.assign(P.generators, 0);
        for (int m : meridians) {
            if (m < 1 || m > P.generators)
                throw std::invalid_argument("meridian index out of range");
            is_meridian[m - 1] = 1;
        }

        std::vector<Permutation> transpositions = all_transpositions(n);
        std::vector<Permutation> everyone;
        for (int g = 0; g < P.generators; ++g) {
            if (is_meridian[g]) {
                std::vector<Permutation> d;
                if (!opts.strict_meridians) d.push_back(Permutation(n));
                d.insert(d.end(), transpositions.begin(), transpositions.end());
                domains.push_back(std::move(d));
            } else {
                if (everyone.empty()) everyone = all_permutations(n);
                domains.push_back(everyone);
            }
        }

        relators_at.assign(std::max(P.generators, 1), {});
        for (size_t r = 0; r < P.relators.size(); ++r) {
            int level = 0;
            for (int l : P.relators[r].letters) level = std::max(level, std::abs(l) - 1);
            relators_at[level].push_back(static_cast<int>(r));
        }

        group = all_permutations(n);
        group_inv.reserve(group.size());
        for (const auto& c : group) group_inv.push_back(c.inverse());
    }

    bool relator_holds(int r, const std::vector<Permutation>& images) const {
        Permutation acc(n);
        for (int l : P.relators[r].letters) {
            const Permutation& g = images[std::abs(l) - 1];
            acc = (l > 0) ? acc.then(g) : acc.then(g.inverse());
        }
        return acc.is_identity();
    }

    // some conjugation makes images[0..depth] strictly lex-smaller
    bool has_smaller_conjugate(const std::vector<Permutation>& images, int depth) const {
        for (size_t ci = 0; ci < group.size(); ++ci) {
            const Permutation& c = group[ci];
            const Permutation& cinv = group_inv[ci];
            for (int j = 0; j <= depth; ++j) {
                Permutation conj = cinv.then(images[j]).then(c);
                auto cmp = conj <=> images[j];
                if (cmp < 0) return true;
                if (cmp > 0) break;
            }
        }
        return false;
    }

    bool transitive(const std::vector<Permutation>& images) const {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& g : images)
            for (int i = 0; i < n; ++i) {
                int a = find(i), b = find(g(i));
                if (a != b) parent[a] = b;
            }
        int root = find(0);
        for (int i = 1; i < n; ++i)
            if (find(i) != root) return false;
        return true;
    }
};

// DFS below a fixed depth. nodes is shared across workers; over_cap stops
// everyone once the budget is spent.
void search(const SearchContext& ctx, std::vector<Permutation>& images, int depth,
            std::atomic<long long>& nodes, std::atomic<bool>& over_cap,
            std::vector<CoverSolution>& out) {
    if (over_cap.load(std::memory_order_relaxed)) return;
    if (depth == ctx.P.generators) {
        if (ctx.transitive(images)) out.push_back(CoverSolution{images});
        return;
    }
    for (const auto& cand : ctx.domains[depth]) {
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > ctx.node_cap) {
            over_cap.store(true, std::memory_order_relaxed);
            return;
        }
        images[depth] = cand;
        bool ok = true;
        for (int r : ctx.relators_at[depth])
            if (!ctx.relator_holds(r, images)) {
                ok = false;
                break;
            }
        if (ok && ctx.has_smaller_conjugate(images, depth)) ok = false;
        if (ok) search(ctx, images, depth + 1, nodes, over_cap, out);
        if (over_cap.load(std::memory_order_relaxed)) return;
    }
}

}  // namespace

std::vector<CoverSolution> enumerate_covers_serial(const GroupPresentation& P, int n,
                                                   const std::vector<int>& meridians,
                                                   const CoverOptions& opts) {
    SearchContext ctx(P, n, meridians, opts);
    std::atomic<long long> nodes{0};
    std::atomic<bool> over_cap{false};
    std::vector<CoverSolution> out;
    std::vector<Permutation> images(P.generators, Permutation(n));
    search(ctx, images, 0, nodes, over_cap, out);
    if (over_cap.load())
        throw cap_exceeded("cover enumeration exceeded the node cap of " +
                           std::to_string(ctx.node_cap));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CoverSolution> enumerate_covers(const GroupPresentation& P, int n,
                                            const std::vector<int>& meridians,
                                            const CoverOptions& opts) {
    if (opts.workers == 1) return enumerate_covers_serial(P, n, meridians, opts);
    SearchContext ctx(P, n, meridians, opts);

    std::atomic<long long> nodes{0};
    std::atomic<bool> over_cap{false};
    const auto& top = ctx.domains[0];
    std::vector<std::vector<CoverSolution>> branch_out(top.size());

#ifdef _OPENMP
    if (opts.workers > 1) omp_set_num_threads(opts.workers);
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t b = 0; b < top.size(); ++b) {
        if (over_cap.load(std::memory_order_relaxed)) continue;
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > ctx.node_cap) {
            over_cap.store(true, std::memory_order_relaxed);
            continue;
        }
        std::vector<Permutation> images(P.generators, Permutation(n));
        images[0] = top[b];
        bool ok = true;
        for (int r : ctx.relators_at[0])
            if (!ctx.relator_holds(r, images)) {
                ok = false;
                break;
            }
        if (ok && ctx.has_smaller_conjugate(images, 0)) ok = false;
        if (ok) {
            if (P.generators == 1) {
                if (ctx.transitive(images)) branch_out[b].push_back(CoverSolution{images});
            } else {
                search(ctx, images, 1, nodes, over_cap, branch_out[b]);
            }
        }
    }

    if (over_cap.load())
        throw cap_exceeded("cover enumeration exceeded the node cap of " +
                           std::to_string(ctx.node_cap));
    std::vector<CoverSolution> out;
    for (auto& bo : branch_out) out.insert(out.end(), bo.begin(), bo.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace twistcover
