#include <set>
#include <vector>

#include "doctest.h"

#include "gbl/boundary.hpp"
#include "gbl/error.hpp"

using gbl::AnyonLabel;
using gbl::LagrangianAlgebra;

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

// Oracle, written against plain integers: a boundary type is a size-n subset
// of {0..n^2-1} (index a1*n+a2) that contains 0, is closed under addition,
// has a1*a2 = 0 mod n on every element, and a2*b1 + a1*b2 = 0 mod n on every
// pair.
bool oracle_admissible(int n, const std::set<int>& subset) {
    if (!subset.count(0) || static_cast<int>(subset.size()) != n) return false;
    for (int x : subset) {
        int x1 = x / n, x2 = x % n;
        if ((x1 * x2) % n != 0) return false;
        for (int y : subset) {
            int y1 = y / n, y2 = y % n;
            if ((x2 * y1 + x1 * y2) % n != 0) return false;
            if (!subset.count(((x1 + y1) % n) * n + (x2 + y2) % n)) return false;
        }
    }
    return true;
}

void scan_subsets(int n, int next, std::set<int>& current, std::set<std::set<int>>& out) {
    if (static_cast<int>(current.size()) == n) {
        if (oracle_admissible(n, current)) out.insert(current);
        return;
    }
    for (int v = next; v < n * n; ++v) {
        current.insert(v);
        scan_subsets(n, v + 1, current, out);
        current.erase(v);
    }
}

std::set<std::set<int>> oracle_boundaries(int n) {
    std::set<std::set<int>> out;
    std::set<int> current{0};
    scan_subsets(n, 1, current, out);
    return out;
}

std::set<int> as_index_set(const LagrangianAlgebra& alg) {
    std::set<int> s;
    for (const auto& a : alg.elements) s.insert(a.a1 * alg.n + a.a2);
    return s;
}

long count_vacuum_labelings(int n, const std::vector<LagrangianAlgebra>& bs) {
    long count = 0;
    std::vector<std::size_t> idx(bs.size(), 0);
    bool done = bs.empty();
    while (!done) {
        int t1 = 0, t2 = 0;
        for (std::size_t h = 0; h < bs.size(); ++h) {
            t1 = (t1 + bs[h].elements[idx[h]].a1) % n;
            t2 = (t2 + bs[h].elements[idx[h]].a2) % n;
        }
        if (t1 == 0 && t2 == 0) ++count;
        std::size_t pos = bs.size();
        done = true;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < bs[pos].elements.size()) {
                done = false;
                break;
            }
            idx[pos] = 0;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("boundary enumeration matches the subset-scan oracle") {
    const std::vector<std::size_t> expected_counts{2, 2, 3, 2};  // N = 2,3,4,5
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        auto algs = gbl::enumerate_lagrangians(gbl::build_theory(n));
        CHECK(algs.size() == expected_counts[static_cast<std::size_t>(n - 2)]);
        std::set<std::set<int>> got;
        for (const auto& alg : algs) got.insert(as_index_set(alg));
        CHECK(got == oracle_boundaries(n));
    }
}

TEST_CASE("qutrit boundary fixtures") {
    auto algs = gbl::enumerate_lagrangians(gbl::build_theory(3));
    REQUIRE(algs.size() == 2);
    CHECK(algs[0].name == "e");
    CHECK(algs[0].display == "1+e+e2");
    CHECK(algs[1].name == "m");
    CHECK(algs[1].display == "1+m+m2");
    CHECK(algs[0].elements ==
          std::vector<AnyonLabel>{AnyonLabel(0, 0, 3), AnyonLabel(1, 0, 3), AnyonLabel(2, 0, 3)});
    CHECK(algs[0].contains(AnyonLabel(2, 0, 3)));
    CHECK_FALSE(algs[0].contains(AnyonLabel(0, 1, 3)));
    CHECK(algs[0].element_index(AnyonLabel(1, 0, 3)) == 1);
    CHECK(algs[0].element_index(AnyonLabel(1, 1, 3)) == -1);
}

TEST_CASE("N=4 includes the diagonal Klein-type boundary") {
    auto algs = gbl::enumerate_lagrangians(gbl::build_theory(4));
    REQUIRE(algs.size() == 3);
    CHECK(algs[2].name == "L2");
    std::set<int> klein = as_index_set(algs[2]);
    CHECK(klein == std::set<int>{0, 2, 8, 10});  // 1, m2, e2, e2m2
}

TEST_CASE("boundary lookup resolves aliases and display names") {
    auto algs = gbl::enumerate_lagrangians(gbl::build_theory(3));
    CHECK(gbl::boundary_by_name(algs, "e").display == "1+e+e2");
    CHECK(gbl::boundary_by_name(algs, "1+m+m2").name == "m");
    CHECK(error_code([&] { gbl::boundary_by_name(algs, "q"); }) == "unknown-boundary");
}

TEST_CASE("is_lagrangian detects twists, braiding, and non-closure") {
    auto th = gbl::build_theory(3);
    auto algs = gbl::enumerate_lagrangians(th);
    CHECK(gbl::is_lagrangian(th, algs[0].elements));
    CHECK(gbl::is_lagrangian(th, algs[1].elements));
    // closed under fusion but twisted: theta(em) = w
    CHECK_FALSE(gbl::is_lagrangian(
        th, {AnyonLabel(0, 0, 3), AnyonLabel(1, 1, 3), AnyonLabel(2, 2, 3)}));
    // not closed
    CHECK_FALSE(gbl::is_lagrangian(
        th, {AnyonLabel(0, 0, 3), AnyonLabel(1, 0, 3), AnyonLabel(0, 1, 3)}));
    // wrong size
    CHECK_FALSE(gbl::is_lagrangian(th, {AnyonLabel(0, 0, 3)}));
}

TEST_CASE("ground space fixtures on the qutrit theory") {
    auto th = gbl::build_theory(3);
    auto algs = gbl::enumerate_lagrangians(th);
    auto e = gbl::boundary_by_name(algs, "e");
    auto m = gbl::boundary_by_name(algs, "m");

    auto ee = gbl::build_ground_space(th, {e, e});
    REQUIRE(ee.dim() == 3);
    CHECK(ee.labeling_str(0) == "1,1");
    CHECK(ee.labeling_str(1) == "e,e2");
    CHECK(ee.labeling_str(2) == "e2,e");
    CHECK(ee.index_of({AnyonLabel(2, 0, 3), AnyonLabel(1, 0, 3)}) == 2);
    CHECK(ee.index_of({AnyonLabel(1, 0, 3), AnyonLabel(1, 0, 3)}) == -1);

    CHECK(gbl::build_ground_space(th, {e, m}).dim() == 1);
    CHECK(gbl::build_ground_space(th, {e, e, m, m}).dim() == 9);
    CHECK(gbl::build_ground_space(th, {e}).dim() == 1);
    CHECK(gbl::build_ground_space(th, {e, e, e, e}).dim() == 27);
}

TEST_CASE("ground space dimension equals the vacuum-labeling count") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        auto th = gbl::build_theory(n);
        auto algs = gbl::enumerate_lagrangians(th);
        // every boundary configuration with up to 4 holes
        std::vector<std::vector<LagrangianAlgebra>> configs{{}};
        for (int holes = 1; holes <= 4; ++holes) {
            std::vector<std::vector<LagrangianAlgebra>> next;
            for (const auto& c : configs)
                if (static_cast<int>(c.size()) == holes - 1)
                    for (const auto& alg : algs) {
                        auto grown = c;
                        grown.push_back(alg);
                        next.push_back(grown);
                    }
            for (const auto& c : next) {
                auto gs = gbl::build_ground_space(th, c);
                CHECK(gs.dim() == count_vacuum_labelings(n, c));
            }
            configs = std::move(next);
        }
    }
}

TEST_CASE("ground space rejects bad input") {
    auto th = gbl::build_theory(3);
    auto algs = gbl::enumerate_lagrangians(th);
    CHECK(error_code([&] { gbl::build_ground_space(th, {}); }) == "invalid-input");
    auto algs4 = gbl::enumerate_lagrangians(gbl::build_theory(4));
    CHECK(error_code([&] {
              gbl::build_ground_space(th, {algs[0], algs4[0]});
          }) == "theory-mismatch");
}

TEST_CASE("register map addresses the qutrit pair space") {
    auto th = gbl::build_theory(3);
    auto algs = gbl::enumerate_lagrangians(th);
    auto e = gbl::boundary_by_name(algs, "e");
    auto gs = gbl::build_ground_space(th, {e, e});
    auto reg = gbl::qudit_registers(gs, {{1, 2}});
    REQUIRE(reg.register_count() == 1);
    CHECK(reg.dims == std::vector<int>{3});
    // hole 2 carries 1, e2, e on basis rows 0,1,2: digits (0, 2, 1)
    CHECK(reg.digits[0] == std::vector<int>{0});
    CHECK(reg.digits[1] == std::vector<int>{2});
    CHECK(reg.digits[2] == std::vector<int>{1});
    CHECK(reg.basis_of({2}) == 1);
    CHECK(reg.linear_index({2}) == 2);
}

TEST_CASE("register map addresses the two-qutrit space as two digits") {
    auto th = gbl::build_theory(3);
    auto algs = gbl::enumerate_lagrangians(th);
    auto e = gbl::boundary_by_name(algs, "e");
    auto m = gbl::boundary_by_name(algs, "m");
    auto gs = gbl::build_ground_space(th, {e, e, m, m});
    auto reg = gbl::qudit_registers(gs, {{1, 2}, {3, 4}});
    CHECK(reg.dims == std::vector<int>{3, 3});
    // bijection: every digit tuple maps back to its own basis element
    for (int i = 0; i < gs.dim(); ++i) {
        CHECK(reg.basis_of(reg.digits[static_cast<std::size_t>(i)]) == i);
        CHECK(reg.to_basis[static_cast<std::size_t>(
                  reg.linear_index(reg.digits[static_cast<std::size_t>(i)]))] == i);
    }
    // conjugating the identity is the identity; conjugation preserves products
    auto id = gbl::CycMatrix::identity(9, 3);
    CHECK(gbl::to_register_basis(id, reg).is_identity());
}

TEST_CASE("register map on the [e,m] space is a single trivial digit") {
    auto th = gbl::build_theory(3);
    auto algs = gbl::enumerate_lagrangians(th);
    auto gs = gbl::build_ground_space(
        th, {gbl::boundary_by_name(algs, "e"), gbl::boundary_by_name(algs, "m")});
    auto reg = gbl::qudit_registers(gs, {{1, 2}});
    CHECK(reg.dims == std::vector<int>{1});
    CHECK(reg.basis_of({0}) == 0);
}

TEST_CASE("register map failure modes") {
    auto th = gbl::build_theory(3);
    auto algs = gbl::enumerate_lagrangians(th);
    auto e = gbl::boundary_by_name(algs, "e");
    auto gs4 = gbl::build_ground_space(th, {e, e, e, e});
    // 27-dimensional space cannot be addressed by two 3-digit registers
    CHECK(error_code([&] { gbl::qudit_registers(gs4, {{1, 2}, {3, 4}}); }) ==
          "ambiguous-register");

    auto gs2 = gbl::build_ground_space(th, {e, e});
    CHECK(error_code([&] { gbl::qudit_registers(gs2, {{1, 3}}); }) == "invalid-input");
    CHECK(error_code([&] { gbl::qudit_registers(gs2, {{2, 2}}); }) == "invalid-input");
    CHECK(error_code([&] { gbl::qudit_registers(gs2, {}); }) == "invalid-input");
}
