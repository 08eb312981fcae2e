// Benchmark: serial reference kernel vs the OpenMP kernel, on dense
// series products and on end-to-end generating-function builds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qcong/products.hpp"
#include "qcong/series.hpp"

using namespace qcong;
using clock_type = std::chrono::steady_clock;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = clock_type::now();
        fn();
        double s = std::chrono::duration<double>(clock_type::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> orders = {1000, 2000, 4000};
    if (argc > 1) {
        orders.clear();
        for (int i = 1; i < argc; ++i) orders.push_back(std::stoul(argv[i]));
    }

    std::printf("%-8s %12s %12s %9s\n", "order", "serial [s]", "parallel [s]",
                "speedup");
    for (std::size_t N : orders) {
        // a dense series with realistically sized coefficients
        auto dense = eta_quotient({{{1, -2}, {2, 1}}}, N);
        TruncatedSeries out_s(0), out_p(0);
        double ts = best_of(3, [&] { out_s = detail::mul_serial(dense, dense); });
        double tp = best_of(3, [&] { out_p = detail::mul_parallel(dense, dense); });
        if (!(out_s == out_p)) {
            std::fprintf(stderr, "kernel mismatch at order %zu\n", N);
            return 1;
        }
        std::printf("%-8zu %12.3f %12.3f %8.2fx\n", N, ts, tp, ts / tp);
    }

    std::printf("\nend-to-end generating function (4,3):\n");
    std::printf("%-8s %12s %12s %9s\n", "order", "serial [s]", "parallel [s]",
                "speedup");
    for (std::size_t N : orders) {
        enable_parallel(false);
        double ts = best_of(2, [&] { biregular_gf(4, 3, N); });
        enable_parallel(true);
        double tp = best_of(2, [&] { biregular_gf(4, 3, N); });
        std::printf("%-8zu %12.3f %12.3f %8.2fx\n", N, ts, tp, ts / tp);
    }
    return 0;
}
