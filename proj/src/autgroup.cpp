#include "binform/autgroup.hpp"

#include "binform/roots.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace binform {

namespace {

struct Mat2Less {
    bool operator()(const Mat2& a, const Mat2& b) const { return (a <=> b) == std::strong_ordering::less; }
};
using MatSet = std::set<Mat2, Mat2Less>;

// 2x2 complex matrix helpers for the Moebius construction
template <class C>
struct CMat {
    C a, b, c, d;
    CMat<C> mul(const CMat<C>& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    CMat<C> adjugate() const { return {d, -b, -c, a}; }
};

// matrix sending e1, e2, e1+e2 to the three projective points
template <class C>
CMat<C> frame(const ProjRoot<C>& p0, const ProjRoot<C>& p1, const ProjRoot<C>& p2) {
    // solve lambda*p0 + mu*p1 = p2
    C det = p0.x * p1.y - p0.y * p1.x;
    C lambda = (p2.x * p1.y - p2.y * p1.x) / det;
    C mu = (p0.x * p2.y - p0.y * p2.x) / det;
    return {lambda * p0.x, mu * p1.x, lambda * p0.y, mu * p1.y};
}

template <class C>
std::vector<Mat2> candidate_matrices(const BinaryForm& f, const Int& H) {
    using R = typename C::value_type;
    auto roots = projective_roots<C>(f);
    // deterministic ordering: finite roots by (re, im), infinity last
    std::sort(roots.begin(), roots.end(), [](const ProjRoot<C>& a, const ProjRoot<C>& b) {
        if (a.at_infinity() != b.at_infinity()) return b.at_infinity();
        if (a.x.real() != b.x.real()) return a.x.real() < b.x.real();
        return a.x.imag() < b.x.imag();
    });
    const int n = static_cast<int>(roots.size());
    if (n < 3) throw std::logic_error("compute_aut: fewer than three roots");
    const CMat<C> ref = frame(roots[0], roots[1], roots[2]);
    const CMat<C> ref_adj = ref.adjugate();

    const R im_tol = pow(R(10), -static_cast<int>(std::numeric_limits<R>::digits10 * 2 / 5));
    // distinct fractions with den <= H are >= 1/H^2 apart; true entries match
    // the roots to far better than this, so acceptance at 1e-40 is unambiguous
    const Real rec_tol("1e-40");

    std::vector<Mat2> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                CMat<C> img = frame(roots[i], roots[j], roots[k]);
                CMat<C> cand = img.mul(ref_adj);
                std::array<C, 4> e{cand.a, cand.b, cand.c, cand.d};
                // fix the projective scalar: divide by the largest entry
                int big = 0;
                for (int t = 1; t < 4; ++t)
                    if (abs(e[t]) > abs(e[big])) big = t;
                if (abs(e[big]) == 0) continue;
                C scale = e[big];
                bool real_ok = true;
                std::array<Rat, 4> q;
                for (int t = 0; t < 4 && real_ok; ++t) {
                    C v = e[t] / scale;
                    if (abs(v.imag()) > im_tol) {
                        real_ok = false;
                        break;
                    }
                    Real x(v.real().str());
                    auto rec = rational_reconstruct(x, H, rec_tol);
                    if (!rec) {
                        real_ok = false;
                        break;
                    }
                    q[t] = *rec;
                }
                if (!real_ok) continue;
                Mat2 r(q[0], q[1], q[2], q[3]);
                Rat dr = abs(r.det());
                if (dr == 0) continue;
                // rescale to |det| = 1; needs 1/|det| to be a rational square
                auto s = exact_sqrt(Rat(1) / dr);
                if (!s) continue;
                Mat2 a(q[0] * *s, q[1] * *s, q[2] * *s, q[3] * *s);
                out.push_back(a);
                out.push_back(-a);
            }
    return out;
}

bool fixes(const BinaryForm& f, const Mat2& a) { return act(f, a) == f.rational(); }

std::vector<Mat2> verify_and_close(const BinaryForm& f, const std::vector<Mat2>& candidates) {
    MatSet g;
    g.insert(Mat2::identity());
    for (const auto& c : candidates)
        if (fixes(f, c)) g.insert(c);
    // close under multiplication (verified automorphisms form a group, so
    // products need no re-verification, but cap growth against bugs)
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mat2> cur(g.begin(), g.end());
        for (const auto& a : cur)
            for (const auto& b : cur) {
                Mat2 p = a * b;
                if (g.insert(p).second) grew = true;
            }
        if (g.size() > 12) throw std::logic_error("compute_aut: closure exceeded maximal group order");
    }
    return {g.begin(), g.end()};
}

bool group_consistent(const BinaryForm& f, const std::vector<Mat2>& els) {
    const int n = static_cast<int>(els.size());
    static const int valid[] = {1, 2, 3, 4, 6, 8, 12};
    if (std::find(std::begin(valid), std::end(valid), n) == std::end(valid)) return false;
    bool has_minus = std::find(els.begin(), els.end(), -Mat2::identity()) != els.end();
    return has_minus == (f.degree() % 2 == 0);
}

} // namespace

std::string label_name(GroupLabel l) {
    switch (l) {
        case GroupLabel::C1: return "C1";
        case GroupLabel::C2: return "C2";
        case GroupLabel::C3: return "C3";
        case GroupLabel::C4: return "C4";
        case GroupLabel::C6: return "C6";
        case GroupLabel::D1: return "D1";
        case GroupLabel::D2: return "D2";
        case GroupLabel::D3: return "D3";
        case GroupLabel::D4: return "D4";
        case GroupLabel::D6: return "D6";
    }
    return "?";
}

bool AutGroup::contains(const Mat2& m) const {
    return std::find(elements.begin(), elements.end(), m) != elements.end();
}

bool AutGroup::has_minus_identity() const { return contains(-Mat2::identity()); }

GroupLabel classify(const std::vector<Mat2>& els) {
    const int n = static_cast<int>(els.size());
    for (const auto& a : els)
        for (const auto& b : els)
            if (std::find(els.begin(), els.end(), a * b) == els.end())
                throw std::logic_error("classify: element set is not closed under multiplication");
    const Mat2 minus_id = -Mat2::identity();
    bool has_minus = std::find(els.begin(), els.end(), minus_id) != els.end();
    auto has_element_of_order = [&](int k) {
        return std::any_of(els.begin(), els.end(), [&](const Mat2& m) { return matrix_order(m) == k; });
    };
    switch (n) {
        case 1: return GroupLabel::C1;
        case 2: return has_minus ? GroupLabel::C2 : GroupLabel::D1;
        case 3: return GroupLabel::C3;
        case 4: return has_element_of_order(4) ? GroupLabel::C4 : GroupLabel::D2;
        case 6: return has_minus ? GroupLabel::C6 : GroupLabel::D3;
        case 8: return GroupLabel::D4;
        case 12: return GroupLabel::D6;
        default: throw std::logic_error("classify: group order " + std::to_string(n) + " is impossible");
    }
}

AutGroup group_from_elements(std::vector<Mat2> elements) {
    MatSet g(elements.begin(), elements.end());
    g.insert(Mat2::identity());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mat2> cur(g.begin(), g.end());
        for (const auto& a : cur)
            for (const auto& b : cur)
                if (g.insert(a * b).second) grew = true;
        if (g.size() > 12) throw std::logic_error("group_from_elements: not a Table-1 group");
    }
    AutGroup out;
    out.elements.assign(g.begin(), g.end());
    out.label = classify(out.elements);
    return out;
}

AutGroup compute_aut(const BinaryForm& f, const AutOptions& opt) {
    if (f.degree() < 3) throw std::domain_error("compute_aut: degree >= 3 required");
    if (discriminant(f) == 0) throw std::domain_error("compute_aut: zero discriminant");

    using C72 = boost::multiprecision::cpp_complex<72>;
    using C240 = boost::multiprecision::cpp_complex<240>;
    using C1000 = boost::multiprecision::cpp_complex<1000>;

    unsigned bits = opt.precision_bits;
    std::exception_ptr last_error;
    while (bits <= opt.max_precision_bits * 2) {
        try {
            std::vector<Mat2> cands;
            if (bits <= 230)
                cands = candidate_matrices<C72>(f, opt.denominator_bound);
            else if (bits <= 780)
                cands = candidate_matrices<C240>(f, opt.denominator_bound);
            else
                cands = candidate_matrices<C1000>(f, opt.denominator_bound);
            auto els = verify_and_close(f, cands);
            if (group_consistent(f, els)) {
                AutGroup out;
                out.elements = std::move(els);
                out.label = classify(out.elements);
                return out;
            }
        } catch (const std::logic_error&) {
            last_error = std::current_exception();
        }
        bits *= 2; // reconstruction ambiguous or inconsistent: retry sharper
    }
    if (last_error) std::rethrow_exception(last_error);
    throw std::runtime_error("compute_aut: no consistent group up to the precision cap");
}

AutGroup binomial_aut(const Int& a, const Int& b, int d) {
    if (a == 0 || b == 0 || d < 3) throw std::domain_error("binomial_aut: need a,b != 0 and d >= 3");
    const bool even = d % 2 == 0;
    // a/b = (A/B)^d with gcd(A,B) = 1, if such a rational exists
    std::optional<Rat> root;
    Rat q = Rat(a) / Rat(b); // cpp_rational(p,q) rejects q < 0
    if (!(even && q < 0)) {
        auto rn = exact_root(abs(num(q)), d);
        auto rd = exact_root(abs(den(q)), d);
        if (rn && rd) {
            Rat r(*rn, *rd);
            if (!even && q < 0) r = -r;
            root = r;
        }
    }
    std::vector<Mat2> els;
    els.push_back(Mat2::identity());
    if (even) {
        els.emplace_back(-1, 0, 0, 1);
        els.emplace_back(1, 0, 0, -1);
        els.emplace_back(-1, 0, 0, -1);
    }
    if (root) {
        // F(u2 y, u3 x) = F(x,y) forces u2^d = b/a, u3^d = a/b
        Rat u2 = Rat(1) / *root, u3 = *root;
        if (even) {
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) els.emplace_back(0, s2 * u2, s3 * u3, 0);
        } else {
            els.emplace_back(0, u2, u3, 0);
        }
    }
    std::sort(els.begin(), els.end(), Mat2Less{});
    AutGroup out;
    out.elements = std::move(els);
    out.label = classify(out.elements);
    return out;
}

SubgroupDecomposition subgroup_decomposition(const AutGroup& g) {
    if (g.label != GroupLabel::D3 && g.label != GroupLabel::D4 && g.label != GroupLabel::D6)
        throw std::domain_error("subgroup_decomposition: label must be D3, D4 or D6");
    SubgroupDecomposition out;
    if (g.label == GroupLabel::D3) {
        for (const auto& m : g.elements) {
            int ord = matrix_order(m);
            if (ord == 2) out.order2_reps.push_back(m);
            if (ord == 3 && !out.order3_rep) out.order3_rep = m;
        }
    } else {
        // classes {A, -A} of Aut F / {+-I}; class order = least k with A^k = +-I
        const Mat2 id = Mat2::identity();
        MatSet seen;
        for (const auto& m : g.elements) {
            if (m == id || m == -id) continue;
            if (seen.count(m)) continue;
            seen.insert(m);
            seen.insert(-m);
            Mat2 rep = Mat2Less{}(m, -m) ? m : -m;
            Mat2 sq = m * m;
            if (sq == id || sq == -id) {
                out.order2_reps.push_back(rep);
            } else if (g.label == GroupLabel::D6 && !out.order3_rep) {
                Mat2 cube = sq * m;
                if (cube == id || cube == -id) out.order3_rep = rep;
            }
        }
    }
    std::sort(out.order2_reps.begin(), out.order2_reps.end(), Mat2Less{});
    if (out.order2_reps.size() != 3)
        throw std::logic_error("subgroup_decomposition: expected three order-2 subgroups");
    if ((g.label != GroupLabel::D4) && !out.order3_rep)
        throw std::logic_error("subgroup_decomposition: missing order-3 subgroup");
    return out;
}

} // namespace binform
