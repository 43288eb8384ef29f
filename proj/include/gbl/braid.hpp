#pragma once

#include <utility>
#include <vector>

#include "gbl/wilson.hpp"

namespace gbl {

// Full monodromy of holes i and j (1-based, i < j): the squared-exchange
// generator of the spherical pure braid group on the hole strands.
struct BraidGenerator {
    int i = 0;
    int j = 0;
};

// Matrix of the (i,j) pure braid generator. Evaluated through the
// F-conjugated double R-move: per basis labeling the eigenvalue is
// F * R^{dual(a_i), a_j} * R^{a_j, dual(a_i)} * F^{-1}, which for trivial
// associators is the monodromy of dual(a_i) with a_j. Diagonal in the
// canonical basis; the dual on the first strand accounts for the labeling
// convention that hole i carries the charge flowing *into* the tree.
OperatorMatrix braid_squared(const GroundSpace& gs, const BraidGenerator& g);

// Product of generator matrices for a word applied in time order (the first
// list entry acts first). Exponents are +1 or -1.
OperatorMatrix pure_braid_image(const GroundSpace& gs,
                                const std::vector<std::pair<BraidGenerator, int>>& word);

// Order of the matrix group generated by all braid generators, counted
// projectively (global cyclotomic phases quotiented out). Throws
// exceeds-bound when the closure grows past `bound` elements.
long group_order_generated(const GroundSpace& gs, long bound = 1000000);

}  // namespace gbl
