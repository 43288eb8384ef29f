#include <string>
#include <vector>

#include "doctest.h"

#include "gbl/error.hpp"
#include "gbl/wilson.hpp"

using gbl::AnyonLabel;
using gbl::Cyclotomic;
using gbl::CycMatrix;

namespace {

template <typename Fn>
std::string error_code(Fn&& fn) {
    try {
        fn();
    } catch (const gbl::Error& e) {
        return e.code();
    }
    return "(no error)";
}

gbl::GroundSpace qutrit_pair() {
    auto th = gbl::build_theory(3);
    auto algs = gbl::enumerate_lagrangians(th);
    auto e = gbl::boundary_by_name(algs, "e");
    return gbl::build_ground_space(th, {e, e});
}

gbl::GroundSpace mixed_pair() {
    auto th = gbl::build_theory(3);
    auto algs = gbl::enumerate_lagrangians(th);
    return gbl::build_ground_space(
        th, {gbl::boundary_by_name(algs, "e"), gbl::boundary_by_name(algs, "m")});
}

}  // namespace

TEST_CASE("charge tunneling is the cyclic qutrit shift") {
    auto gs = qutrit_pair();
    auto op = gbl::tunnel(gs, AnyonLabel(1, 0, 3), 1, 2);
    CHECK(op.provenance == "tunnel e 1->2");
    CHECK(op.basis == "space-lex");
    CHECK(op.mat.is_permutation());
    CHECK(gbl::is_unitary(op));

    // digit basis: |d> -> |d+1>
    auto reg = gbl::qudit_registers(gs, {{1, 2}});
    auto x = gbl::to_register_basis(op.mat, reg);
    CycMatrix shift(3, 3, 3);
    for (int d = 0; d < 3; ++d) shift.at((d + 1) % 3, d) = Cyclotomic::one(3);
    CHECK(x == shift);
    CHECK(x.pow(3).is_identity());
}

TEST_CASE("tunnel group law and inverses") {
    auto gs = qutrit_pair();
    auto e1 = AnyonLabel(1, 0, 3);
    auto e2 = AnyonLabel(2, 0, 3);
    auto t1 = gbl::tunnel(gs, e1, 1, 2).mat;
    auto t2 = gbl::tunnel(gs, e2, 1, 2).mat;
    CHECK(t1 * t1 == t2);
    CHECK(t1 * t2 == CycMatrix::identity(3, 3));
    CHECK(t2 == gbl::tunnel(gs, e1.dual(), 1, 2).mat);
    // reversing the arc direction inverts the operator
    CHECK(gbl::tunnel(gs, e1, 2, 1).mat == t2);
}

TEST_CASE("flux loop is diagonal with the braiding eigenvalues") {
    auto gs = qutrit_pair();
    auto m = AnyonLabel(0, 1, 3);
    auto op = gbl::loop_op(gs, m, 1);
    CHECK(op.provenance == "loop m 1");
    CHECK(op.mat.is_diagonal());

    // space-lex basis rows carry charges 1, e, e2 at hole 1:
    // S(m, e^k)/1 = w^{-k}
    CHECK(op.mat.at(0, 0).is_one());
    CHECK(op.mat.at(1, 1) == Cyclotomic::root_power(3, 2));
    CHECK(op.mat.at(2, 2) == Cyclotomic::root_power(3, 1));

    // digit basis: diag(1, w, w^2) after the rank relabeling
    auto reg = gbl::qudit_registers(gs, {{1, 2}});
    auto z = gbl::to_register_basis(op.mat, reg);
    std::vector<Cyclotomic> want{Cyclotomic::one(3), Cyclotomic::root_power(3, 1),
                                 Cyclotomic::root_power(3, 2)};
    CHECK(z == CycMatrix::diagonal(want));
}

TEST_CASE("loop group law, hole symmetry, and charge transparency") {
    auto gs = qutrit_pair();
    auto th = gs.theory;
    for (const auto& a : th.labels)
        for (const auto& b : th.labels)
            for (int hole = 1; hole <= 2; ++hole)
                CHECK(gbl::loop_op(gs, a, hole).mat * gbl::loop_op(gs, b, hole).mat ==
                      gbl::loop_op(gs, gbl::fuse(a, b), hole).mat);
    // on the two-hole space the labels are dual, so a-loop at hole 1 equals
    // the dual loop at hole 2
    for (const auto& a : th.labels)
        CHECK(gbl::loop_op(gs, a, 1).mat == gbl::loop_op(gs, a.dual(), 2).mat);
    // charges see charges trivially: loop(e) = 1 on the charge-condensing pair
    CHECK(gbl::loop_op(gs, AnyonLabel(1, 0, 3), 2).mat.is_identity());
}

TEST_CASE("tunnel and loop obey the Weyl commutation with the monodromy phase") {
    auto gs = qutrit_pair();
    auto th = gs.theory;
    auto x = gbl::tunnel(gs, AnyonLabel(1, 0, 3), 1, 2).mat;
    for (const auto& a : th.labels) {
        auto z = gbl::loop_op(gs, a, 1).mat;
        // moving charge e through an a-loop picks up the mutual statistics
        auto phase = th.monodromy(a, AnyonLabel(1, 0, 3));
        CHECK(z * x == (x * z).scaled(phase));
    }
}

TEST_CASE("non-condensable tunneling is rejected") {
    auto gs = qutrit_pair();
    CHECK(error_code([&] { gbl::tunnel(gs, AnyonLabel(0, 1, 3), 1, 2); }) == "not-condensable");
    CHECK(error_code([&] { gbl::tunnel(gs, AnyonLabel(1, 1, 3), 1, 2); }) == "not-condensable");
    auto em = mixed_pair();
    CHECK(error_code([&] { gbl::tunnel(em, AnyonLabel(1, 0, 3), 1, 2); }) == "not-condensable");
    // only the vacuum connects charge and flux boundaries
    CHECK(gbl::tunnel(em, AnyonLabel(0, 0, 3), 1, 2).mat.is_identity());
    // bad hole indices
    CHECK(error_code([&] { gbl::tunnel(gs, AnyonLabel(1, 0, 3), 1, 1); }) == "invalid-input");
    CHECK(error_code([&] { gbl::tunnel(gs, AnyonLabel(1, 0, 3), 0, 2); }) == "invalid-input");
    CHECK(error_code([&] { gbl::loop_op(gs, AnyonLabel(1, 0, 3), 3); }) == "invalid-input");
}

TEST_CASE("tunnel composition coefficients with trivial and twisted tables") {
    auto gs = qutrit_pair();
    auto a = AnyonLabel(1, 0, 3);
    auto b = AnyonLabel(2, 0, 3);
    gbl::MSymbolTable trivial;
    auto channels = gbl::compose_tunnels(gs, a, b, trivial, trivial);
    REQUIRE(channels.size() == 1);  // abelian fusion: single channel a x b
    CHECK(channels.begin()->first == gbl::fuse(a, b));
    CHECK(channels.begin()->second.is_one());

    // overriding one endpoint's table scales the channel by that entry
    gbl::MSymbolTable twisted;
    twisted.overrides[{a.index(), b.index(), gbl::fuse(a, b).index()}] =
        Cyclotomic::root_power(3, 1);
    auto forward = gbl::compose_tunnels(gs, a, b, twisted, trivial);
    CHECK(forward.begin()->second == Cyclotomic::root_power(3, 1));
    // ...and the far endpoint enters conjugated
    auto backward = gbl::compose_tunnels(gs, a, b, trivial, twisted);
    CHECK(backward.begin()->second == Cyclotomic::root_power(3, 2));
}

TEST_CASE("wilson operators across N=2..4 stay consistent with fusion") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        auto th = gbl::build_theory(n);
        auto algs = gbl::enumerate_lagrangians(th);
        auto e = gbl::boundary_by_name(algs, "e");
        auto gs = gbl::build_ground_space(th, {e, e});
        for (const auto& a : e.elements)
            for (const auto& b : e.elements) {
                auto ta = gbl::tunnel(gs, a, 1, 2).mat;
                auto tb = gbl::tunnel(gs, b, 1, 2).mat;
                CHECK(ta * tb == gbl::tunnel(gs, gbl::fuse(a, b), 1, 2).mat);
                CHECK((ta * gbl::tunnel(gs, a.dual(), 1, 2).mat).is_identity());
            }
    }
}
