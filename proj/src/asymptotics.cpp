#include "binform/asymptotics.hpp"

#include <stdexcept>

namespace binform {

Prediction predict(const BinaryForm& f, const AutOptions& opt, const Real& area_tol) {
    if (f.degree() < 3) throw std::domain_error("predict: degree >= 3 required");
    if (discriminant(f) == 0) throw std::domain_error("predict: zero discriminant");

    Prediction p{f, compute_aut(f, opt)};
    p.m = fixed_lattice(p.aut).m;
    if (p.aut.label == GroupLabel::D3 || p.aut.label == GroupLabel::D4 || p.aut.label == GroupLabel::D6) {
        auto inv = dihedral_invariants(p.aut);
        p.m123 = inv.m123;
        p.m4 = inv.m4;
        if (!check_lcm_relations(p.aut))
            throw std::runtime_error("predict: lattice lcm/intersection consistency check failed");
    }
    p.weight = w_f(WeightInput{p.aut.label, p.m, p.m123, p.m4});
    p.area = a_f_quadrature(f, area_tol);
    p.c_f = to_real(p.weight) * p.area.value;
    p.beta = beta_exponent(f);
    return p;
}

LadderReport ladder(const BinaryForm& f, const std::vector<long long>& zs, const AutOptions& opt) {
    for (size_t i = 0; i < zs.size(); ++i) {
        if (zs[i] < 1 || (i > 0 && zs[i] <= zs[i - 1]))
            throw std::domain_error("ladder: Z values must be positive and strictly increasing");
    }
    LadderReport rep{predict(f, opt)};
    const int d = f.degree();
    const Real exp_main = Real(2) / d;
    for (long long z : zs) {
        BoxSpec box = default_box(f, z);
        RepsIndex idx;
        try {
            idx = enumerate_reps(f, z, box);
        } catch (const std::runtime_error&) {
            rep.partial = true; // budget exceeded: keep the completed prefix
            break;
        }
        CountsReport c = counts(idx, rep.prediction.aut, z, box);
        LadderRow row;
        row.z = z;
        row.r_f = c.r_f;
        Real main = rep.prediction.c_f * pow(Real(z), exp_main);
        row.ratio = Real(c.r_f) / main;
        row.residual = Real(c.r_f) - main;
        row.truncated = c.truncated;
        rep.rows.push_back(row);
    }
    // least-squares slope of log|residual| against log Z
    std::vector<std::pair<Real, Real>> pts;
    for (const auto& r : rep.rows)
        if (r.residual != 0) pts.emplace_back(log(Real(r.z)), log(abs(r.residual)));
    if (pts.size() >= 2) {
        Real sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        Real n(static_cast<long long>(pts.size()));
        Real denom = n * sxx - sx * sx;
        if (denom != 0) rep.residual_slope = (n * sxy - sx * sy) / denom;
    }
    return rep;
}

} // namespace binform
