#pragma once

#include "binform/autgroup.hpp"
#include "binform/form.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace binform {

// Box of integer pairs (x, y): |x| <= x_max, |y| <= y_max.
struct BoxSpec {
    long long x_max = 0;
    long long y_max = 0;
    bool exact = false; // true when the box provably covers every pair with 0 < |F| <= Z
};

// For a value bound Z, all h with 0 < |h| <= Z mapped to the (x, y) in the box
// representing them, sorted lexicographically.
struct RepsIndex {
    std::map<long long, std::vector<std::pair<long long, long long>>> reps;
};

// n_f counts pairs; n1/n2 split them by whether the value they represent is
// essentially represented (all its reps in one Aut-orbit). r_f counts the
// essentially represented values themselves.
struct CountsReport {
    long long z = 0;
    long long n_f = 0;
    long long n1 = 0;
    long long n2 = 0;
    long long r_f = 0;
    BoxSpec box;
    bool truncated = false;
};

// Smallest box guaranteed to contain every (x, y) with 0 < |F(x, y)| <= Z,
// when F has no real linear factor (exact = true). Otherwise a heuristic
// truncation box of side ~Z^{2/3} (exact = false).
BoxSpec default_box(const BinaryForm& f, long long z);

RepsIndex enumerate_serial(const BinaryForm& f, long long z, const BoxSpec& box);
RepsIndex enumerate_parallel(const BinaryForm& f, long long z, const BoxSpec& box);

// Respects BINFORM_THREADS; falls back to serial when OpenMP is unavailable.
RepsIndex enumerate_reps(const BinaryForm& f, long long z, const BoxSpec& box);

CountsReport counts(const RepsIndex& idx, const AutGroup& aut, long long z, const BoxSpec& box);

// Number of Aut-orbits among the given representations of one value.
int orbit_count(const AutGroup& aut, const std::vector<std::pair<long long, long long>>& reps);

// Checks the bound 2800 * tau(|h|) * d^{1 + omega(|h|)} on the number of
// representations of each h; returns the values violating it (empty = pass).
std::vector<long long> thue_audit(const RepsIndex& idx, int d);

int tau_of(long long n);
int omega_of(long long n);

} // namespace binform
