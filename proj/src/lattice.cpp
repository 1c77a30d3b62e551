#include "binform/lattice.hpp"

#include "binform/form.hpp"

#include <stdexcept>

namespace binform {

namespace {

Int floordiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// extended gcd: g = s*a + t*b, g >= 0
Int egcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int old_r = a, r = b, old_s = 1, s_ = 0, old_t = 0, t_ = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s_; old_s = s_; s_ = tmp;
        tmp = old_t - q * t_; old_t = t_; t_ = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    s = old_s;
    t = old_t;
    return old_r;
}

// basis of the integer kernel of a (rows x cols) matrix, by column
// elimination with a tracked unimodular transform
std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> m) {
    const size_t rows = m.size(), cols = m[0].size();
    // u: cols x cols identity, columns track the applied transform
    std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, 0));
    for (size_t i = 0; i < cols; ++i) u[i][i] = 1;
    auto col_combine = [&](size_t i, size_t j, const Int& s, const Int& t, const Int& x, const Int& y) {
        // (col_i, col_j) <- (s*col_i + t*col_j, x*col_i + y*col_j), det +-1
        for (size_t r = 0; r < rows; ++r) {
            Int ci = m[r][i], cj = m[r][j];
            m[r][i] = s * ci + t * cj;
            m[r][j] = x * ci + y * cj;
        }
        for (size_t r = 0; r < cols; ++r) {
            Int ci = u[r][i], cj = u[r][j];
            u[r][i] = s * ci + t * cj;
            u[r][j] = x * ci + y * cj;
        }
    };
    size_t pivot_col = 0;
    for (size_t row = 0; row < rows && pivot_col < cols; ++row) {
        for (size_t j = pivot_col + 1; j < cols; ++j) {
            if (m[row][j] == 0) continue;
            Int s, t;
            Int g = egcd(m[row][pivot_col], m[row][j], s, t);
            Int ai = m[row][pivot_col] / g, aj = m[row][j] / g;
            col_combine(pivot_col, j, s, t, -aj, ai);
        }
        if (m[row][pivot_col] != 0) ++pivot_col;
    }
    std::vector<std::vector<Int>> kernel;
    for (size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (size_t r = 0; r < rows; ++r)
            if (m[r][j] != 0) { zero = false; break; }
        if (zero) {
            std::vector<Int> v(cols);
            for (size_t r = 0; r < cols; ++r) v[r] = u[r][j];
            kernel.push_back(std::move(v));
        }
    }
    return kernel;
}

} // namespace

Lattice2 Lattice2::from_generators(const std::vector<std::array<Int, 2>>& gens) {
    // first basis vector: first coordinate = gcd of all first coordinates
    Int vx = 0, vy = 0;
    for (const auto& g : gens) {
        if (g[0] == 0) continue;
        if (vx == 0) {
            vx = g[0];
            vy = g[1];
        } else {
            Int s, t;
            Int d = egcd(vx, g[0], s, t);
            Int ny = s * vy + t * g[1];
            vx = d;
            vy = ny;
        }
    }
    if (vx < 0) {
        vx = -vx;
        vy = -vy;
    }
    // kernel of the first-coordinate projection
    Int c = 0;
    for (const auto& g : gens) {
        Int reduced_y = (vx == 0) ? g[1] : g[1] - (g[0] / vx) * vy;
        if (vx != 0 && g[0] % vx != 0) throw std::logic_error("hnf: projection not divisible by gcd");
        c = boost::multiprecision::gcd(c, reduced_y);
    }
    if (vx == 0 || c == 0) throw std::domain_error("Lattice2: generators do not span rank 2");
    Lattice2 l;
    l.a = vx;
    l.c = abs(c);
    l.b = vy - floordiv(vy, l.c) * l.c; // reduce 0 <= b < c
    return l;
}

bool Lattice2::contains(const Int& u, const Int& v) const {
    if (u % a != 0) return false;
    Int k = u / a;
    Int rest = v - k * b;
    return rest % c == 0;
}

Lattice2 lattice_of(const Mat2& m) {
    if (abs(m.det()) != 1) throw std::domain_error("lattice_of: |det| = 1 required");
    auto pd = primitive_decomposition(m);
    if (pd.a == 1) return Lattice2::full();
    // kernel of (u,v,s,t) -> (a1 u + a2 v - a s, a3 u + a4 v - a t)
    std::vector<std::vector<Int>> mat(2, std::vector<Int>(4, 0));
    mat[0] = {pd.entries[0], pd.entries[1], -pd.a, Int(0)};
    mat[1] = {pd.entries[2], pd.entries[3], Int(0), -pd.a};
    auto ker = integer_kernel(std::move(mat));
    std::vector<std::array<Int, 2>> gens;
    for (const auto& v : ker) gens.push_back({v[0], v[1]});
    return Lattice2::from_generators(gens);
}

Lattice2 intersect(const Lattice2& l1, const Lattice2& l2) {
    // x = alpha v1 + beta v2 = gamma w1 + delta w2
    std::vector<std::vector<Int>> mat(2, std::vector<Int>(4));
    mat[0] = {l1.a, Int(0), -l2.a, Int(0)};
    mat[1] = {l1.b, l1.c, -l2.b, -l2.c};
    auto ker = integer_kernel(std::move(mat));
    std::vector<std::array<Int, 2>> gens;
    for (const auto& k : ker)
        gens.push_back({k[0] * l1.a, k[0] * l1.b + k[1] * l1.c});
    return Lattice2::from_generators(gens);
}

FixedLattice fixed_lattice(const AutGroup& g) {
    Lattice2 l = Lattice2::full();
    for (const auto& m : g.elements) l = intersect(l, lattice_of(m));
    return {l, l.det()};
}

DihedralInvariants dihedral_invariants(const AutGroup& g) {
    auto dec = subgroup_decomposition(g); // validates the label
    DihedralInvariants out;
    for (const auto& rep : dec.order2_reps) out.order2_lattices.push_back(lattice_of(rep));
    std::sort(out.order2_lattices.begin(), out.order2_lattices.end(),
              [](const Lattice2& x, const Lattice2& y) {
                  return std::array{x.det(), x.a, x.b} < std::array{y.det(), y.a, y.b};
              });
    for (const auto& l : out.order2_lattices) out.m123.push_back(l.det());
    if (dec.order3_rep) {
        out.order3_lattice = lattice_of(*dec.order3_rep);
        out.m4 = out.order3_lattice->det();
    }
    return out;
}

bool check_order3_identity(const Mat2& a) {
    if (matrix_order(a) != 3) throw std::domain_error("check_order3_identity: order-3 matrix required");
    return lattice_of(a) == lattice_of(a * a);
}

bool check_lcm_relations(const AutGroup& g) {
    auto inv = dihedral_invariants(g);
    auto fx = fixed_lattice(g);
    Int l = 1;
    for (const auto& mi : inv.m123) l = boost::multiprecision::lcm(l, mi);
    if (inv.m4) l = boost::multiprecision::lcm(l, *inv.m4);
    if (l != fx.m) return false;
    std::vector<Lattice2> all = inv.order2_lattices;
    if (inv.order3_lattice) all.push_back(*inv.order3_lattice);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (!(intersect(all[i], all[j]) == fx.lattice)) return false;
    return true;
}

Rat hooley_m(const BinaryForm& f) {
    if (f.degree() != 3) throw std::domain_error("hooley_m: cubic forms only");
    Int disc = discriminant(f);
    if (disc <= 0) throw std::domain_error("hooley_m: positive discriminant required");
    auto r = exact_sqrt(disc);
    if (!r) throw std::domain_error("hooley_m: discriminant is not a perfect square");
    auto h = hessian(f);
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(h.a, h.b), h.c);
    return Rat(*r, g);
}

} // namespace binform
