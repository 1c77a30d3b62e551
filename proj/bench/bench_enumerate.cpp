// Compares serial vs OpenMP enumeration over fixed boxes.
#include "binform/counting.hpp"

#include <chrono>
#include <cstdio>

using namespace binform;

namespace {

double time_ms(const BinaryForm& f, long long z, const BoxSpec& box, bool parallel, long long& pairs) {
    auto t0 = std::chrono::steady_clock::now();
    RepsIndex idx = parallel ? enumerate_parallel(f, z, box) : enumerate_serial(f, z, box);
    auto t1 = std::chrono::steady_clock::now();
    pairs = 0;
    for (const auto& [h, v] : idx.reps) pairs += static_cast<long long>(v.size());
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
    struct Case {
        const char* name;
        BinaryForm form;
        long long z;
        long long side; // box half-width
    };
    const Case cases[] = {
        {"x^4+y^4, box 1500", BinaryForm({1, 0, 0, 0, 1}), 100'000'000, 1500},
        {"x^4+16y^4, box 1500", BinaryForm({1, 0, 0, 0, 16}), 100'000'000, 1500},
        {"x^3+y^3, box 2000", BinaryForm({1, 0, 0, 1}), 10'000'000, 2000},
    };
    std::printf("%-22s %10s %12s %12s %8s\n", "case", "pairs", "serial(ms)", "openmp(ms)", "speedup");
    for (const auto& c : cases) {
        BoxSpec box{c.side, c.side, false};
        long long p1 = 0, p2 = 0;
        double ts = time_ms(c.form, c.z, box, false, p1);
        double tp = time_ms(c.form, c.z, box, true, p2);
        if (p1 != p2) {
            std::printf("%-22s MISMATCH serial=%lld parallel=%lld\n", c.name, p1, p2);
            return 1;
        }
        std::printf("%-22s %10lld %12.1f %12.1f %7.2fx\n", c.name, p1, ts, tp, ts / tp);
    }
    return 0;
}
