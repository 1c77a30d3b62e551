#include "binform/counting.hpp"

#include "binform/area.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace binform {

namespace {

constexpr long long kMaxBoxCells = 4'000'000'000LL;

int env_threads() {
    const char* s = std::getenv("BINFORM_THREADS");
    if (!s || !*s) return 0;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1) throw std::runtime_error("BINFORM_THREADS must be a positive integer");
    return static_cast<int>(v);
}

// True when Horner over the box provably fits in __int128.
bool fits_i128(const BinaryForm& f, const BoxSpec& box) {
    Int sum = 0;
    for (const auto& c : f.coeffs) sum += abs(c);
    Int side = std::max({box.x_max, box.y_max, 1LL});
    Int bound = sum;
    for (int i = 0; i < f.degree(); ++i) bound *= side;
    return bound < (Int(1) << 126);
}

inline __int128 eval_i128(const std::vector<long long>& c, long long x, long long y) {
    __int128 acc = 0, yp = 1;
    const size_t n = c.size();
    for (size_t k = 0; k < n; ++k) {
        acc = acc * x + static_cast<__int128>(c[k]) * yp;
        if (k + 1 < n) yp *= y;
    }
    return acc;
}

template <typename Sink>
void scan_rows(const BinaryForm& f, long long z, const BoxSpec& box, long long x_lo, long long x_hi,
               bool use_i128, Sink&& sink) {
    if (use_i128) {
        std::vector<long long> c;
        for (const auto& ci : f.coeffs) c.push_back(ci.convert_to<long long>());
        for (long long x = x_lo; x <= x_hi; ++x)
            for (long long y = -box.y_max; y <= box.y_max; ++y) {
                __int128 h = eval_i128(c, x, y);
                if (h != 0 && h <= z && -h <= z) sink(static_cast<long long>(h), x, y);
            }
    } else {
        for (long long x = x_lo; x <= x_hi; ++x)
            for (long long y = -box.y_max; y <= box.y_max; ++y) {
                Int h = evaluate(f, Int(x), Int(y));
                if (h != 0 && abs(h) <= z) sink(h.convert_to<long long>(), x, y);
            }
    }
}

void check_box(const BoxSpec& box) {
    if (box.x_max < 0 || box.y_max < 0) throw std::domain_error("enumerate: negative box");
    long long cells = (2 * box.x_max + 1) * (2 * box.y_max + 1);
    if (cells > kMaxBoxCells) throw std::runtime_error("enumerate: box exceeds the scan budget");
}

} // namespace

BoxSpec default_box(const BinaryForm& f, long long z) {
    if (z < 0) throw std::domain_error("default_box: Z must be nonnegative");
    const int d = f.degree();
    BoxSpec box;
    if (!splitting_type(f).has_real_linear_factor) {
        Real bound = pow(Real(z) / circle_min_abs(f), Real(1) / d);
        box.x_max = box.y_max = (floor(bound + Real("1e-12"))).convert_to<long long>();
        box.exact = true;
    } else {
        box.x_max = box.y_max = static_cast<long long>(std::ceil(std::pow(double(z), 2.0 / 3.0)));
        box.exact = false;
    }
    return box;
}

RepsIndex enumerate_serial(const BinaryForm& f, long long z, const BoxSpec& box) {
    check_box(box);
    if (discriminant(f) == 0) throw std::domain_error("enumerate: zero discriminant");
    RepsIndex idx;
    if (z <= 0) return idx;
    scan_rows(f, z, box, -box.x_max, box.x_max, fits_i128(f, box),
              [&](long long h, long long x, long long y) { idx.reps[h].emplace_back(x, y); });
    return idx;
}

RepsIndex enumerate_parallel(const BinaryForm& f, long long z, const BoxSpec& box) {
#ifndef _OPENMP
    return enumerate_serial(f, z, box);
#else
    check_box(box);
    if (discriminant(f) == 0) throw std::domain_error("enumerate: zero discriminant");
    RepsIndex idx;
    if (z <= 0) return idx;
    const bool use_i128 = fits_i128(f, box);
    const int nt = std::max(1, omp_get_max_threads());
    std::vector<RepsIndex> parts(nt);
    const long long width = 2 * box.x_max + 1;
    #pragma omp parallel num_threads(nt)
    {
        RepsIndex& mine = parts[omp_get_thread_num()];
        #pragma omp for schedule(dynamic, 16)
        for (long long i = 0; i < width; ++i) {
            long long x = i - box.x_max;
            scan_rows(f, z, box, x, x, use_i128,
                      [&](long long h, long long xx, long long yy) { mine.reps[h].emplace_back(xx, yy); });
        }
    }
    for (auto& part : parts)
        for (auto& [h, v] : part.reps) {
            auto& dst = idx.reps[h];
            dst.insert(dst.end(), v.begin(), v.end());
        }
    for (auto& [h, v] : idx.reps) std::sort(v.begin(), v.end());
    return idx;
#endif
}

RepsIndex enumerate_reps(const BinaryForm& f, long long z, const BoxSpec& box) {
#ifdef _OPENMP
    int t = env_threads();
    if (t > 0) omp_set_num_threads(t);
    return enumerate_parallel(f, z, box);
#else
    return enumerate_serial(f, z, box);
#endif
}

int orbit_count(const AutGroup& aut, const std::vector<std::pair<long long, long long>>& reps) {
    const int n = static_cast<int>(reps.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i) {
        Rat x(reps[i].first), y(reps[i].second);
        for (const auto& a : aut.elements) {
            auto img = a.apply(x, y);
            if (den(img[0]) != 1 || den(img[1]) != 1) continue;
            std::pair<long long, long long> p{num(img[0]).convert_to<long long>(),
                                              num(img[1]).convert_to<long long>()};
            auto it = std::lower_bound(reps.begin(), reps.end(), p);
            if (it != reps.end() && *it == p) {
                int ri = find(i), rj = find(static_cast<int>(it - reps.begin()));
                if (ri != rj) parent[ri] = rj;
            }
        }
    }
    int orbits = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++orbits;
    return orbits;
}

CountsReport counts(const RepsIndex& idx, const AutGroup& aut, long long z, const BoxSpec& box) {
    CountsReport r;
    r.z = z;
    r.box = box;
    r.truncated = !box.exact;
    for (const auto& [h, reps] : idx.reps) {
        const long long pairs = static_cast<long long>(reps.size());
        r.n_f += pairs;
        if (orbit_count(aut, reps) == 1) {
            r.n1 += pairs;
            ++r.r_f;
        } else {
            r.n2 += pairs;
        }
    }
    return r;
}

int tau_of(long long n) {
    if (n < 1) throw std::domain_error("tau_of: positive argument required");
    int t = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        t *= e + 1;
    }
    if (n > 1) t *= 2;
    return t;
}

int omega_of(long long n) {
    if (n < 1) throw std::domain_error("omega_of: positive argument required");
    int w = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ++w;
        while (n % p == 0) n /= p;
    }
    if (n > 1) ++w;
    return w;
}

std::vector<long long> thue_audit(const RepsIndex& idx, int d) {
    std::vector<long long> bad;
    for (const auto& [h, reps] : idx.reps) {
        double bound = 2800.0 * tau_of(std::llabs(h)) * std::pow(double(d), 1 + omega_of(std::llabs(h)));
        if (static_cast<double>(reps.size()) > bound) bad.push_back(h);
    }
    return bad;
}

} // namespace binform
