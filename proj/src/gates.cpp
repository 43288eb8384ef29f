#include "gbl/gates.hpp"

#include <map>

#include "gbl/braid.hpp"
#include "gbl/error.hpp"

namespace gbl {

namespace {

struct QutritSpace {
    GroundSpace gs;
    RegisterMap reg;
};

// Two charge-type boundaries: the canonical single-qutrit register.
const QutritSpace& qutrit() {
    static const QutritSpace ctx = [] {
        auto th = build_theory(3);
        auto algs = enumerate_lagrangians(th);
        const auto& e = boundary_by_name(algs, "e");
        QutritSpace c{build_ground_space(th, {e, e}), {}};
        c.reg = qudit_registers(c.gs, {{1, 2}});
        return c;
    }();
    return ctx;
}

// Charge pair + flux pair: the two-qutrit space for entangling gates.
const QutritSpace& two_qutrits() {
    static const QutritSpace ctx = [] {
        auto th = build_theory(3);
        auto algs = enumerate_lagrangians(th);
        const auto& e = boundary_by_name(algs, "e");
        const auto& m = boundary_by_name(algs, "m");
        QutritSpace c{build_ground_space(th, {e, e, m, m}), {}};
        c.reg = qudit_registers(c.gs, {{1, 2}, {3, 4}});
        return c;
    }();
    return ctx;
}

CycMatrix fourier3() {
    CycMatrix h(3, 3, 3);
    auto s = Cyclotomic::inv_sqrt_order(3, 1);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
            h.at(k, j) = Cyclotomic::root_power(3, static_cast<long>(k) * j) * s;
    return h;
}

CycMatrix recipe_product(const std::vector<RecipeStep>& recipe, int dim) {
    CycMatrix acc = CycMatrix::identity(dim, 3);
    for (const auto& step : recipe) acc = step.matrix * acc;
    return acc;
}

void seal(CompiledGate& g) {
    g.global_phase = Cyclotomic::one(3);
    if (!g.is_measurement) {
        require(g.matrix == recipe_product(g.recipe, g.matrix.rows()).scaled(g.global_phase),
                "internal", "gate " + g.name + " does not match its recipe product");
    }
}

CompiledGate make_X3() {
    const auto& ctx = qutrit();
    auto op = tunnel(ctx.gs, AnyonLabel(1, 0, 3), 1, 2);
    CompiledGate g;
    g.name = "X3";
    g.arity = 1;
    g.matrix = to_register_basis(op.mat, ctx.reg);
    g.recipe.push_back({"tunnel", op.provenance, g.matrix});
    seal(g);
    return g;
}

CompiledGate make_Z3() {
    const auto& ctx = qutrit();
    auto op = loop_op(ctx.gs, AnyonLabel(0, 1, 3), 1);
    CompiledGate g;
    g.name = "Z3";
    g.arity = 1;
    g.matrix = to_register_basis(op.mat, ctx.reg);
    g.recipe.push_back({"loop", op.provenance, g.matrix});
    seal(g);
    return g;
}

CompiledGate make_H3() {
    CompiledGate g;
    g.name = "H3";
    g.arity = 1;
    g.matrix = fourier3();
    g.recipe.push_back({"primitive", "qutrit Fourier gate", g.matrix});
    seal(g);
    return g;
}

CompiledGate make_CZ3() {
    const auto& ctx = two_qutrits();
    auto op = braid_squared(ctx.gs, {2, 3});
    CompiledGate g;
    g.name = "CZ3";
    g.arity = 2;
    g.matrix = to_register_basis(op.mat, ctx.reg);
    g.recipe.push_back({"braid", op.provenance, g.matrix});
    seal(g);
    return g;
}

CompiledGate make_SUM3() {
    auto cz = make_CZ3();
    auto h = fourier3();
    auto id3 = CycMatrix::identity(3, 3);
    auto h_on_target = id3.tensor(h);
    CompiledGate g;
    g.name = "SUM3";
    g.arity = 2;
    // |i,j> -> |i,i+j>: the braid phase diag(w^{ij}) Fourier-conjugated on
    // the target slot, with the adjoint on the outgoing side.
    g.matrix = h_on_target.dagger() * cz.matrix * h_on_target;
    g.recipe.push_back({"primitive", "H3 on target", h_on_target});
    g.recipe.push_back({"braid", "braid (2,3)", cz.matrix});
    g.recipe.push_back({"primitive", "H3 dagger on target", h_on_target.dagger()});
    seal(g);
    return g;
}

CompiledGate make_Q3() {
    const auto& ctx = qutrit();
    auto layer = split_double_layer(ctx.gs.theory);
    std::vector<Cyclotomic> mirror_twists;
    for (const auto& t : layer.twists) mirror_twists.push_back(t.conj());
    auto twist = CycMatrix::diagonal(mirror_twists);
    auto z = to_register_basis(loop_op(ctx.gs, AnyonLabel(0, 1, 3), 1).mat, ctx.reg);
    CompiledGate g;
    g.name = "Q3";
    g.arity = 1;
    g.matrix = z * twist;
    g.recipe.push_back({"twist", "mirror-layer Dehn twist diag(1,w^-1,w^-1)", twist});
    g.recipe.push_back({"loop", "loop m 1", z});
    seal(g);
    return g;
}

CompiledGate make_M() {
    const auto& ctx = qutrit();
    auto tcm = charge_projector(ctx.gs, 0, CurveLabel::arc(1, 2));
    auto h = fourier3();
    auto p = to_register_basis(tcm.projector.mat, ctx.reg);
    auto q = to_register_basis(tcm.complement.mat, ctx.reg);
    CompiledGate g;
    g.name = "M";
    g.arity = 1;
    g.is_measurement = true;
    g.proj0 = h.dagger() * p * h;
    g.proj1 = h.dagger() * q * h;
    g.matrix = g.proj0;  // representative; both projectors are first-class
    g.recipe.push_back({"primitive", "H3", h});
    g.recipe.push_back({"tcm", tcm.projector.provenance + " (and complement)", p});
    g.recipe.push_back({"primitive", "H3 dagger", h.dagger()});
    g.global_phase = Cyclotomic::one(3);
    require((g.proj0 + g.proj1).is_identity(), "internal", "M projectors do not sum to identity");
    return g;
}

}  // namespace

CompiledGate gate_X3() { return make_X3(); }
CompiledGate gate_Z3() { return make_Z3(); }
CompiledGate gate_H3() { return make_H3(); }
CompiledGate gate_CZ3() { return make_CZ3(); }
CompiledGate gate_SUM3() { return make_SUM3(); }
CompiledGate gate_Q3() { return make_Q3(); }
CompiledGate gate_M() { return make_M(); }

const std::vector<std::string>& gate_names() {
    static const std::vector<std::string> names = {"X3", "Z3", "H3", "CZ3", "SUM3", "Q3", "M"};
    return names;
}

const CompiledGate& gate_by_name(const std::string& name) {
    static const std::map<std::string, CompiledGate> registry = [] {
        std::map<std::string, CompiledGate> r;
        r.emplace("X3", make_X3());
        r.emplace("Z3", make_Z3());
        r.emplace("H3", make_H3());
        r.emplace("CZ3", make_CZ3());
        r.emplace("SUM3", make_SUM3());
        r.emplace("Q3", make_Q3());
        r.emplace("M", make_M());
        return r;
    }();
    auto it = registry.find(name);
    if (it == registry.end()) {
        std::string known;
        for (const auto& n : gate_names()) {
            if (!known.empty()) known += ", ";
            known += n;
        }
        fail("unknown-gate", "no gate named '" + name + "' (known: " + known + ")");
    }
    return it->second;
}

}  // namespace gbl
