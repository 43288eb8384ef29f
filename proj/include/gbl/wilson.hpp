#pragma once

#include <array>
#include <map>
#include <string>

#include "gbl/boundary.hpp"

namespace gbl {

// Associativity data for condensing bulk anyons on one boundary. The default
// table is identically 1; individual entries may be overridden to model a
// nontrivially associative boundary.
struct MSymbolTable {
    std::map<std::array<int, 3>, Cyclotomic> overrides;  // (a,b,c) anyon indices -> value

    Cyclotomic value(const AnyonLabel& a, const AnyonLabel& b, const AnyonLabel& c,
                     int order) const {
        auto it = overrides.find({a.index(), b.index(), c.index()});
        return it == overrides.end() ? Cyclotomic::one(order) : it->second;
    }
};

// A concrete operator on a GroundSpace basis, tagged with how it was built.
struct OperatorMatrix {
    CycMatrix mat;
    std::string provenance;  // "tunnel e 1->2", "loop m 2", "braid (2,3)", "tcm ...", gate name
    std::string basis;       // "space-lex" or "register"
};

// Moves anyon a from boundary `from` to boundary `to` (1-based holes) along
// the canonical arc. Requires a to condense on `to` and its dual on `from`;
// then each basis labeling (.., a_from, .., a_to, ..) maps to
// (.., a_from x dual(a), .., a_to x a, ..).
OperatorMatrix tunnel(const GroundSpace& gs, const AnyonLabel& a, int from, int to);

// Counter-clockwise loop of anyon a around hole `hole` (1-based): diagonal
// with eigenvalue S_{a,b}/d_b on each labeling, b the charge at that hole.
OperatorMatrix loop_op(const GroundSpace& gs, const AnyonLabel& a, int hole);

// Fusing two tunnels along the same arc: coefficients
// M^{ab}_c(first) * conj(M^{ab}_c(second)) * sqrt(d_a d_b / d_c) per fusion
// channel c. Abelian data has the single channel c = a x b.
std::map<AnyonLabel, Cyclotomic> compose_tunnels(const GroundSpace& gs, const AnyonLabel& a,
                                                 const AnyonLabel& b, const MSymbolTable& m_from,
                                                 const MSymbolTable& m_to);

bool is_unitary(const OperatorMatrix& op);

}  // namespace gbl
