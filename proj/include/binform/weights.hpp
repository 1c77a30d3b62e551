#ifndef BINFORM_WEIGHTS_HPP
#define BINFORM_WEIGHTS_HPP

#include "binform/autgroup.hpp"
#include "binform/numeric.hpp"

#include <optional>
#include <vector>

namespace binform {

struct WeightInput {
    GroupLabel label;
    Int m = 1;
    std::vector<Int> m123;    // required for D3, D4, D6
    std::optional<Int> m4;    // required for D3, D6
};

// Exact rational weight W_F from the classification label and lattice
// determinants; validates the lcm consistency the table assumes.
Rat w_f(const WeightInput& in);

} // namespace binform

#endif
