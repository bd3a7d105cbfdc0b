// Timing comparison of the parallel cover enumeration against the serial
// reference on progressively heavier instances. Both must return the same
// list; the table reports wall time and speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "twistcover/covers.hpp"
#include "twistcover/factorization.hpp"
#include "twistcover/vankampen.hpp"

using namespace twistcover;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

struct Instance {
    std::string name;
    GroupPresentation P;
    int n;
    std::vector<int> meridians;  // non-meridian generators range over all of S_n
};

std::vector<int> all_of(const GroupPresentation& P) {
    std::vector<int> m(P.generators);
    std::iota(m.begin(), m.end(), 1);
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    int repeats = 3;
    if (argc > 1) repeats = std::max(1, std::atoi(argv[1]));

    GroupPresentation free2;
    free2.generators = 2;
    GroupPresentation free3;
    free3.generators = 3;
    GroupPresentation trefoil;
    trefoil.generators = 2;
    trefoil.relators.push_back(FreeWord(2, {1, 2, 1, -2, -1, -2}));
    GroupPresentation quintic = presentation(smooth_curve_factorization(5), true);

    std::vector<Instance> instances = {
        {"quintic complement, n=4, all simple", quintic, 4, all_of(quintic)},
        {"trefoil-type, n=6, x1 simple", trefoil, 6, {1}},
        {"free rank 2, n=6, x1 simple", free2, 6, {1}},
        {"free rank 3, n=5, x1 simple", free3, 5, {1}},
        {"free rank 3, n=6, x1 simple", free3, 6, {1}},
    };

    std::printf("%-38s %11s %12s %8s %8s\n", "instance", "serial[s]", "parallel[s]",
                "speedup", "covers");
    for (const auto& inst : instances) {
        CoverOptions opts;
        opts.node_cap = 2'000'000'000;

        double best_serial = 1e100, best_parallel = 1e100;
        size_t count = 0;
        std::vector<CoverSolution> serial_out, parallel_out;
        for (int r = 0; r < repeats; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            serial_out = enumerate_covers_serial(inst.P, inst.n, inst.meridians, opts);
            auto t1 = std::chrono::steady_clock::now();
            parallel_out = enumerate_covers(inst.P, inst.n, inst.meridians, opts);
            auto t2 = std::chrono::steady_clock::now();
            best_serial = std::min(best_serial, seconds(t0, t1));
            best_parallel = std::min(best_parallel, seconds(t1, t2));
            count = serial_out.size();
            if (serial_out != parallel_out) {
                std::fprintf(stderr, "MISMATCH on %s\n", inst.name.c_str());
                return 1;
            }
        }
        std::printf("%-38s %11.4f %12.4f %8.2f %8zu\n", inst.name.c_str(), best_serial,
                    best_parallel, best_serial / best_parallel, count);
    }
    return 0;
}
