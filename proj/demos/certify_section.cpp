// Certifies one section T_n of sqrt(1 + z + ... + z^d): zero-free on the
// closed unit disk, and positivity of the matching cosine polynomial.
//
//   certify_section [d] [n]

#include <cstdio>
#include <cstdlib>

#include "segbounds/segbounds.hpp"

int main(int argc, char** argv) {
    const int d = argc > 1 ? std::atoi(argv[1]) : 2;
    const std::size_t n = argc > 2 ? static_cast<std::size_t>(std::atol(argv[2])) : 10;
    if (d < 1) {
        std::fprintf(stderr, "d must be >= 1\n");
        return 64;
    }
    const segbounds::PolyQ T = segbounds::sqrt_coeffs_recurrence(d, n).section(n);

    const auto disk = segbounds::certify_zero_free(T, "T");
    std::printf("disk:       %s (boundary zeros %d, winding %d)\n", segbounds::to_string(disk.verdict).c_str(),
                disk.boundary_zero_count, disk.winding_number.value_or(-1));

    const auto pos = segbounds::positivity_certificate(segbounds::trig_poly(d, n), d, n);
    std::printf("cosine sum: %s (roots in [-1,1]: %d, grid min %.6f)\n", segbounds::to_string(pos.verdict).c_str(),
                pos.roots_in_interval, pos.min_estimate);
    if (pos.witness_lo)
        std::printf("            witness x in [%s, %s]\n", segbounds::to_fraction_string(*pos.witness_lo).c_str(),
                    segbounds::to_fraction_string(*pos.witness_hi).c_str());
    return disk.zero_free() && pos.positive() ? 0 : 1;
}
