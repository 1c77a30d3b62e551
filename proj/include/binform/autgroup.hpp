#ifndef BINFORM_AUTGROUP_HPP
#define BINFORM_AUTGROUP_HPP

#include "binform/form.hpp"
#include "binform/mat2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace binform {

enum class GroupLabel { C1, C2, C3, C4, C6, D1, D2, D3, D4, D6 };

std::string label_name(GroupLabel l);

struct AutGroup {
    std::vector<Mat2> elements; // sorted lexicographically, |det| = 1 each
    GroupLabel label = GroupLabel::C1;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(const Mat2& m) const;
    bool has_minus_identity() const;
};

struct AutOptions {
    unsigned precision_bits = 192;      // root precision; doubled on retry
    unsigned max_precision_bits = 3072;
    Int denominator_bound = 1000000;    // completeness parameter H
};

// Aut F as a finite subgroup of GL2(Q): candidate matrices from all
// root-triple correspondences, rationalized by continued-fraction
// reconstruction, then verified exactly by F_A = F.
AutGroup compute_aut(const BinaryForm& f, const AutOptions& opt = {});

// Closed-form automorphism group of a*x^d + b*y^d (oracle for compute_aut).
AutGroup binomial_aut(const Int& a, const Int& b, int d);

// Table-1 class from order and structure. Throws on an order outside
// {1,2,3,4,6,8,12} (signals a compute_aut bug).
GroupLabel classify(const std::vector<Mat2>& elements);

// Closes the given verified elements under multiplication, sorts, and
// classifies. Used by tests to build conjugated groups directly.
AutGroup group_from_elements(std::vector<Mat2> elements);

// Coset representatives of the order-2 subgroups (and the order-3 subgroup
// for D3/D6) of Aut F, resp. Aut F / {+-I} when -I is present.
struct SubgroupDecomposition {
    std::vector<Mat2> order2_reps; // always three
    std::optional<Mat2> order3_rep;
};
SubgroupDecomposition subgroup_decomposition(const AutGroup& g); // D3/D4/D6 only

} // namespace binform

#endif
