#ifndef BINFORM_LATTICE_HPP
#define BINFORM_LATTICE_HPP

#include "binform/autgroup.hpp"
#include "binform/mat2.hpp"
#include "binform/numeric.hpp"

#include <array>
#include <vector>

namespace binform {

// Rank-2 sublattice of Z^2 in canonical Hermite normal form: row basis
// (a, b), (0, c) with a > 0, c > 0, 0 <= b < c. Equality of lattices is
// equality of the three integers.
struct Lattice2 {
    Int a = 1, b = 0, c = 1;

    static Lattice2 full() { return {}; }
    // canonical form of the lattice generated by the given vectors
    static Lattice2 from_generators(const std::vector<std::array<Int, 2>>& gens);

    Int det() const { return a * c; }
    bool contains(const Int& u, const Int& v) const;
    bool operator==(const Lattice2& o) const = default;
};

// Lambda(A): pairs (u,v) with A (u,v)^T integral. Requires |det A| = 1;
// its determinant then equals the primitive denominator of A.
Lattice2 lattice_of(const Mat2& a);

Lattice2 intersect(const Lattice2& l1, const Lattice2& l2);

struct FixedLattice {
    Lattice2 lattice;
    Int m;
};
// Lambda = intersection of Lambda(A) over the group; m = d(Lambda).
FixedLattice fixed_lattice(const AutGroup& g);

struct DihedralInvariants {
    std::vector<Lattice2> order2_lattices; // three, sorted by determinant
    std::vector<Int> m123;
    std::optional<Lattice2> order3_lattice; // D3/D6
    std::optional<Int> m4;
};
DihedralInvariants dihedral_invariants(const AutGroup& g); // D3/D4/D6 only

// Lambda(A) == Lambda(A^2) for A of multiplicative order 3.
bool check_order3_identity(const Mat2& a);

// m = lcm(m_i) and Lambda_i cap Lambda_j = Lambda for i != j.
bool check_lcm_relations(const AutGroup& g); // D3/D4/D6 only

// sqrt(disc) / gcd(Hessian coefficients) for a cubic with positive square
// discriminant; equals the fixed-lattice determinant on C3 forms.
Rat hooley_m(const BinaryForm& f);

} // namespace binform

#endif
