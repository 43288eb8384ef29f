#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gbl/theory.hpp"

namespace gbl {

// A gapped boundary type: a maximal isotropic subgroup of Z_N x Z_N whose
// elements all have trivial twist and trivial mutual braiding.
struct LagrangianAlgebra {
    int n = 0;
    std::vector<AnyonLabel> elements;  // sorted lex, starts with the vacuum
    std::string name;                  // short handle: "e", "m", or "L<k>"
    std::string display;               // e.g. "1+e+e2"

    bool contains(const AnyonLabel& a) const;
    // Lex position of a within `elements` (the register digit); -1 if absent.
    int element_index(const AnyonLabel& a) const;
    bool operator==(const LagrangianAlgebra& o) const {
        return n == o.n && elements == o.elements;
    }
};

// True iff the given element set is closed, unit-containing, of size N,
// with theta = 1 and mutual S = 1 throughout (exact checks).
bool is_lagrangian(const TheoryData& th, const std::vector<AnyonLabel>& elems);

// All gapped boundary types of D(Z_N), deterministically ordered and named:
// the pure-charge algebra (alias "e") first when present, then pure-flux
// (alias "m"), then the rest sorted by element list.
std::vector<LagrangianAlgebra> enumerate_lagrangians(const TheoryData& th);

// Resolves "e", "m", "L<k>", or a display name; throws unknown-boundary.
const LagrangianAlgebra& boundary_by_name(const std::vector<LagrangianAlgebra>& algebras,
                                          const std::string& name);

// Protected space of n boundary holes with total bulk charge vacuum.
// Basis = all labelings (a_1..a_n), a_i condensing on boundary i, product
// vacuum; ordered lexicographically in (a_1,...,a_{n-1}) with each label
// ordered by (a1-component, a2-component). The last label is determined.
struct GroundSpace {
    TheoryData theory;
    std::vector<LagrangianAlgebra> boundaries;
    std::vector<std::vector<AnyonLabel>> basis;

    int holes() const { return static_cast<int>(boundaries.size()); }
    int dim() const { return static_cast<int>(basis.size()); }
    // Basis position of a labeling; -1 when it is not in the space.
    int index_of(const std::vector<AnyonLabel>& labeling) const;
    std::string labeling_str(int index) const;  // "e,e2" style
};

GroundSpace build_ground_space(const TheoryData& th,
                               const std::vector<LagrangianAlgebra>& boundaries);

// Addressing of the protected space as a product of qudit registers, one per
// hole pair. The digit of pair (i,j) on a basis labeling is the rank of the
// label sitting on hole j among the labels that hole j takes across the
// basis (rank by lex position in its boundary algebra). The map basis
// labeling <-> digit tuple must be a bijection.
struct RegisterMap {
    std::vector<std::pair<int, int>> pairing;  // 1-based hole pairs
    std::vector<int> dims;                     // digits per register
    std::vector<std::vector<int>> digits;      // basis index -> digit tuple
    std::vector<int> to_basis;                 // mixed-radix digit index -> basis index

    int register_count() const { return static_cast<int>(dims.size()); }
    // Mixed-radix linear index of a digit tuple (first register most significant).
    int linear_index(const std::vector<int>& digit_tuple) const;
    int basis_of(const std::vector<int>& digit_tuple) const;
};

RegisterMap qudit_registers(const GroundSpace& gs,
                            const std::vector<std::pair<int, int>>& pairing);

// Conjugates a space-basis operator into the register digit basis (rows and
// columns reordered by the RegisterMap bijection).
CycMatrix to_register_basis(const CycMatrix& space_mat, const RegisterMap& reg);

}  // namespace gbl
