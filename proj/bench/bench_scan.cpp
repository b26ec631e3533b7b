// Timing comparison between the serial reference kernels and the
// OpenMP-parallel ones, plus an equality check of their outputs.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "piped/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool same_entries(const std::vector<piped::CatalogEntry>& a,
                  const std::vector<piped::CatalogEntry>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].primitive == b[i].primitive) || a[i].source != b[i].source) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    long height = argc > 1 ? std::atol(argv[1]) : 120;
    long x_max = argc > 2 ? std::atol(argv[2]) : 400;
#ifdef _OPENMP
    std::cout << "omp max threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP\n";
#endif

    for (piped::FamilyId id : piped::kAllFamilies) {
        auto t0 = Clock::now();
        auto serial = piped::scan_family_serial(id, height);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto parallel = piped::scan_family(id, height);
        double tp = seconds_since(t0);
        std::cout << "scan " << piped::to_string(id) << " height " << height << ": serial "
                  << ts << "s, parallel " << tp << "s, speedup " << ts / tp << "x, entries "
                  << serial.size() << (same_entries(serial, parallel) ? "" : " MISMATCH")
                  << "\n";
    }

    auto t0 = Clock::now();
    auto serial = piped::brute_force_serial(x_max);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto parallel = piped::brute_force(x_max);
    double tp = seconds_since(t0);
    std::cout << "brute force x_max " << x_max << ": serial " << ts << "s, parallel " << tp
              << "s, speedup " << ts / tp << "x, entries " << serial.size()
              << (same_entries(serial, parallel) ? "" : " MISMATCH") << "\n";
    return 0;
}
