#pragma once

#include "binform/area.hpp"
#include "binform/autgroup.hpp"
#include "binform/counting.hpp"
#include "binform/form.hpp"
#include "binform/lattice.hpp"
#include "binform/weights.hpp"

#include <optional>
#include <vector>

namespace binform {

struct Prediction {
    BinaryForm form;
    AutGroup aut;
    Int m = 1;                 // fixed-lattice determinant
    std::vector<Int> m123;     // dihedral invariants, empty otherwise
    std::optional<Int> m4;
    Rat weight;
    AreaEstimate area;
    Real c_f;                  // weight * area
    BetaValue beta;
};

struct LadderRow {
    long long z = 0;
    long long r_f = 0;
    Real ratio;     // r_f / (c_f * Z^{2/d})
    Real residual;  // r_f - c_f * Z^{2/d}
    bool truncated = false;
};

struct LadderReport {
    Prediction prediction;
    std::vector<LadderRow> rows;
    std::optional<Real> residual_slope; // least-squares on log-log; absent for < 2 usable rows
    bool partial = false;               // a ladder entry exceeded the enumeration budget
};

// Full pipeline: automorphisms -> lattices -> weight -> area -> c_f.
Prediction predict(const BinaryForm& f, const AutOptions& opt = {}, const Real& area_tol = Real("1e-10"));

LadderReport ladder(const BinaryForm& f, const std::vector<long long>& zs,
                    const AutOptions& opt = {});

} // namespace binform
