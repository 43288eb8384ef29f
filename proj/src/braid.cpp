#include "gbl/braid.hpp"

#include <set>
#include <string>

#include "gbl/error.hpp"

namespace gbl {

namespace {

void check_generator(const GroundSpace& gs, const BraidGenerator& g) {
    require(g.i >= 1 && g.j <= gs.holes() && g.i < g.j, "invalid-input",
            "braid generator needs 1 <= i < j <= holes");
}

Cyclotomic labeling_eigenvalue(const TheoryData& th, const AnyonLabel& ai, const AnyonLabel& aj) {
    // Reassociate so the (i,j) pair is adjacent, apply both R-moves, and
    // reassociate back. x fuses with y into e; z closes the tree to vacuum.
    AnyonLabel x = ai.dual();
    AnyonLabel e = fuse(x, aj);
    AnyonLabel z = e.dual();
    AnyonLabel total(0, 0, th.n);
    AnyonLabel f = fuse(aj, z);
    Cyclotomic f_in = th.f_symbol(x, aj, z, total, e, f);
    Cyclotomic f_out = th.f_symbol(x, aj, z, total, e, f);
    return f_in * th.r_symbol(x, aj) * th.r_symbol(aj, x) * f_out.inverse();
}

// Scale so the first nonzero entry becomes 1: a projective canonical form.
std::string projective_key(const CycMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero())
                return m.scaled(m.at(r, c).inverse()).canonical_key();
    return m.canonical_key();
}

}  // namespace

OperatorMatrix braid_squared(const GroundSpace& gs, const BraidGenerator& g) {
    check_generator(gs, g);
    int d = gs.dim();
    CycMatrix mat(d, d, gs.theory.n);
    for (int k = 0; k < d; ++k) {
        const auto& lab = gs.basis[static_cast<std::size_t>(k)];
        mat.at(k, k) = labeling_eigenvalue(gs.theory, lab[static_cast<std::size_t>(g.i - 1)],
                                           lab[static_cast<std::size_t>(g.j - 1)]);
    }
    OperatorMatrix op;
    op.mat = std::move(mat);
    op.provenance = "braid (" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
    op.basis = "space-lex";
    return op;
}

OperatorMatrix pure_braid_image(const GroundSpace& gs,
                                const std::vector<std::pair<BraidGenerator, int>>& word) {
    CycMatrix acc = CycMatrix::identity(gs.dim(), gs.theory.n);
    std::string prov = "braid word";
    for (const auto& [g, exp] : word) {
        require(exp == 1 || exp == -1, "invalid-input", "braid exponents must be +1 or -1");
        auto m = braid_squared(gs, g).mat;
        if (exp < 0) m = m.dagger();
        acc = m * acc;  // time order: later letters act on the left
        prov += " (" + std::to_string(g.i) + "," + std::to_string(g.j) + ")^" +
                std::to_string(exp * 2);
    }
    OperatorMatrix op;
    op.mat = std::move(acc);
    op.provenance = prov;
    op.basis = "space-lex";
    return op;
}

long group_order_generated(const GroundSpace& gs, long bound) {
    int n = gs.holes();
    std::vector<CycMatrix> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.push_back(braid_squared(gs, {i, j}).mat);

    std::set<std::string> seen;
    std::vector<CycMatrix> frontier{CycMatrix::identity(gs.dim(), gs.theory.n)};
    seen.insert(projective_key(frontier.front()));
    while (!frontier.empty()) {
        std::vector<CycMatrix> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = g * x;
                if (seen.insert(projective_key(y)).second) {
                    require(static_cast<long>(seen.size()) <= bound, "exceeds-bound",
                            "braid closure exceeded " + std::to_string(bound) + " elements");
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    return static_cast<long>(seen.size());
}

}  // namespace gbl
