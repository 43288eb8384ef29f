#include "gbl/wilson.hpp"

#include "gbl/error.hpp"

namespace gbl {

namespace {

void check_hole(const GroundSpace& gs, int hole, const char* what) {
    require(hole >= 1 && hole <= gs.holes(), "invalid-input",
            std::string(what) + " hole index out of range");
}

}  // namespace

OperatorMatrix tunnel(const GroundSpace& gs, const AnyonLabel& a, int from, int to) {
    check_hole(gs, from, "tunnel source");
    check_hole(gs, to, "tunnel target");
    require(from != to, "invalid-input", "tunnel endpoints must differ");
    require(a.n == gs.theory.n, "theory-mismatch", "anyon from a different theory");

    const auto& alg_from = gs.boundaries[static_cast<std::size_t>(from - 1)];
    const auto& alg_to = gs.boundaries[static_cast<std::size_t>(to - 1)];
    require(alg_to.contains(a) && alg_from.contains(a.dual()), "not-condensable",
            "anyon " + a.str() + " does not condense on boundary " + std::to_string(to) +
                " with its dual on boundary " + std::to_string(from) +
                "; the arc operator would leave the protected space");

    int d = gs.dim();
    CycMatrix mat(d, d, gs.theory.n);
    for (int c = 0; c < d; ++c) {
        auto lab = gs.basis[static_cast<std::size_t>(c)];
        lab[static_cast<std::size_t>(from - 1)] =
            fuse(lab[static_cast<std::size_t>(from - 1)], a.dual());
        lab[static_cast<std::size_t>(to - 1)] = fuse(lab[static_cast<std::size_t>(to - 1)], a);
        int r = gs.index_of(lab);
        require(r >= 0, "not-condensable", "tunnel image left the basis");
        mat.at(r, c) = Cyclotomic::one(gs.theory.n);
    }

    OperatorMatrix op;
    op.mat = std::move(mat);
    op.provenance =
        "tunnel " + a.str() + " " + std::to_string(from) + "->" + std::to_string(to);
    op.basis = "space-lex";
    return op;
}

OperatorMatrix loop_op(const GroundSpace& gs, const AnyonLabel& a, int hole) {
    check_hole(gs, hole, "loop");
    require(a.n == gs.theory.n, "theory-mismatch", "anyon from a different theory");

    int d = gs.dim();
    CycMatrix mat(d, d, gs.theory.n);
    for (int k = 0; k < d; ++k) {
        const AnyonLabel& b = gs.basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(hole - 1)];
        // Eigenvalue S_{ab}/d_b with d_b = 1 throughout the abelian theory.
        mat.at(k, k) = gs.theory.s_entry(a, b);
    }

    OperatorMatrix op;
    op.mat = std::move(mat);
    op.provenance = "loop " + a.str() + " " + std::to_string(hole);
    op.basis = "space-lex";
    return op;
}

std::map<AnyonLabel, Cyclotomic> compose_tunnels(const GroundSpace& gs, const AnyonLabel& a,
                                                 const AnyonLabel& b, const MSymbolTable& m_from,
                                                 const MSymbolTable& m_to) {
    require(a.n == gs.theory.n && b.n == gs.theory.n, "theory-mismatch",
            "anyon from a different theory");
    // Single fusion channel c = a x b; quantum dimensions are all 1 so the
    // sqrt(d_a d_b / d_c) factor is exactly 1 (kept explicit for shape).
    AnyonLabel c = fuse(a, b);
    Cyclotomic dim_factor = Cyclotomic::one(gs.theory.n);
    Cyclotomic coeff =
        m_from.value(a, b, c, gs.theory.n) * m_to.value(a, b, c, gs.theory.n).conj() * dim_factor;
    return {{c, coeff}};
}

bool is_unitary(const OperatorMatrix& op) {
    return op.mat.is_square() && op.mat.is_unitary();
}

}  // namespace gbl
