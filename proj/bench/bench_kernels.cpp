// Compares the OpenMP search kernels against their serial references on the
// largest desk-scale codes, checking equality and reporting speedups.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "schubert/code_analysis.hpp"
#include "schubert/formulas.hpp"
#include "schubert/geometry.hpp"

using namespace schubert;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int mismatches = 0;

void row(const std::string& name, const std::function<BigInt()>& serial,
         const std::function<BigInt()>& parallel) {
    BigInt rs, rp;
    const double ts = time_ms([&] { rs = serial(); });
    const double tp = time_ms([&] { rp = parallel(); });
    const bool same = rs == rp;
    if (!same) ++mismatches;
    std::printf("%-34s %10.1f ms %10.1f ms %7.2fx  %s\n", name.c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0, same ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "openmp", "speedup");

    const FieldSpec f2 = make_field(2);
    const FieldSpec f3 = make_field(3);

    const GeneratorMatrix c25_q2 = build_schubert_code(theta_tuple(2, 5), f2);
    const GeneratorMatrix c25_q3 = build_schubert_code(theta_tuple(2, 5), f3);
    const GeneratorMatrix eta25 = build_schubert_code(eta_tuple(2, 5), f2);

    row("min distance C(2,5) q=2",
        [&] { return min_distance_bruteforce_serial(c25_q2); },
        [&] { return min_distance_bruteforce(c25_q2); });
    row("min distance C(2,5) q=3",
        [&] { return min_distance_bruteforce_serial(c25_q3); },
        [&] { return min_distance_bruteforce(c25_q3); });
    row("d_3 of the divisor in G(2,5) q=2",
        [&] { return higher_weight_bruteforce_serial(eta25, 3); },
        [&] { return higher_weight_bruteforce(eta25, 3); });
    row("weight distribution C(2,5) q=3",
        [&] {
            auto d = weight_distribution_serial(c25_q3);
            return BigInt(static_cast<long>(d.size()));
        },
        [&] {
            auto d = weight_distribution(c25_q3);
            return BigInt(static_cast<long>(d.size()));
        });
    row("points of G(3,6) q=2",
        [&] {
            return BigInt(
                static_cast<long>(enumerate_schubert_points_serial(theta_tuple(3, 6), f2).size()));
        },
        [&] {
            return BigInt(
                static_cast<long>(enumerate_schubert_points(theta_tuple(3, 6), f2).size()));
        });

    if (mismatches != 0) {
        std::printf("%d kernel(s) disagree with the serial reference\n", mismatches);
        return 1;
    }
    return 0;
}
