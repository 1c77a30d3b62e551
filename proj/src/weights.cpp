#include "binform/weights.hpp"

#include <stdexcept>

namespace binform {

namespace {

void validate(const WeightInput& in) {
    if (in.m <= 0) throw std::invalid_argument("w_f: m must be positive");
    const bool dihedral = in.label == GroupLabel::D3 || in.label == GroupLabel::D4 || in.label == GroupLabel::D6;
    if (!dihedral) {
        if (!in.m123.empty() || in.m4) throw std::invalid_argument("w_f: m_i only apply to D3/D4/D6");
        return;
    }
    if (in.m123.size() != 3) throw std::invalid_argument("w_f: three order-2 determinants required");
    const bool needs_m4 = in.label != GroupLabel::D4;
    if (needs_m4 != in.m4.has_value()) throw std::invalid_argument("w_f: m4 required exactly for D3/D6");
    Int l = 1;
    for (const auto& mi : in.m123) {
        if (mi <= 0) throw std::invalid_argument("w_f: m_i must be positive");
        l = boost::multiprecision::lcm(l, mi);
    }
    if (in.m4) l = boost::multiprecision::lcm(l, *in.m4);
    if (l != in.m) throw std::invalid_argument("w_f: m is not the lcm of the m_i");
}

} // namespace

Rat w_f(const WeightInput& in) {
    validate(in);
    const Rat m(in.m);
    Rat w;
    switch (in.label) {
        case GroupLabel::C1: w = 1; break;
        case GroupLabel::C2: w = Rat(1, 2); break;
        case GroupLabel::C3: w = 1 - 2 / (3 * m); break;
        case GroupLabel::C4: w = (1 - 1 / (2 * m)) / 2; break;
        case GroupLabel::C6: w = (1 - 2 / (3 * m)) / 2; break;
        case GroupLabel::D1: w = 1 - 1 / (2 * m); break;
        case GroupLabel::D2: w = (1 - 1 / (2 * m)) / 2; break;
        case GroupLabel::D4: {
            Rat s = 1;
            for (const auto& mi : in.m123) s -= Rat(1, 2 * mi);
            w = (s + 3 / (4 * m)) / 2;
            break;
        }
        case GroupLabel::D3:
        case GroupLabel::D6: {
            Rat s = 1;
            for (const auto& mi : in.m123) s -= Rat(1, 2 * mi);
            s -= Rat(2, 3 * *in.m4);
            s += 4 / (3 * m);
            w = in.label == GroupLabel::D3 ? s : s / 2;
            break;
        }
    }
    if (w <= 0 || w > 1) throw std::logic_error("w_f: weight outside (0,1]");
    return w;
}

} // namespace binform
