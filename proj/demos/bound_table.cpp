// Prints b_k for sqrt(1 + z + ... + z^d) next to the running bound
// sum_{j<=k} b_j^2 and its distance to the limit.
//
//   bound_table [d] [n]

#include <cstdio>
#include <cstdlib>

#include "segbounds/segbounds.hpp"

int main(int argc, char** argv) {
    const int d = argc > 1 ? std::atoi(argv[1]) : 2;
    const std::size_t n = argc > 2 ? static_cast<std::size_t>(std::atol(argv[2])) : 12;
    if (d < 1) {
        std::fprintf(stderr, "d must be >= 1\n");
        return 64;
    }
    const auto b = segbounds::sqrt_coeffs_recurrence(d, n);
    const auto sums = segbounds::squared_sums(d, n);
    const double limit = segbounds::segment_limit(d);
    std::printf("%4s  %-24s %-20s %s\n", "k", "b_k", "bound", "limit - bound");
    for (std::size_t k = 0; k <= n; ++k) {
        std::printf("%4zu  %-24s %-20.15f %.3e\n", k, segbounds::to_fraction_string(b.values[k]).c_str(), sums[k].get_d(),
                    limit - sums[k].get_d());
    }
    std::printf("limit (quadrature) = %.15f\n", limit);
}
