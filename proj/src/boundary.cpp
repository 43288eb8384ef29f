#include "gbl/boundary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gbl/error.hpp"

namespace gbl {

bool LagrangianAlgebra::contains(const AnyonLabel& a) const {
    return element_index(a) >= 0;
}

int LagrangianAlgebra::element_index(const AnyonLabel& a) const {
    for (std::size_t k = 0; k < elements.size(); ++k)
        if (elements[k] == a) return static_cast<int>(k);
    return -1;
}

bool is_lagrangian(const TheoryData& th, const std::vector<AnyonLabel>& elems) {
    if (static_cast<int>(elems.size()) != th.n) return false;
    std::set<int> indices;
    for (const auto& a : elems) indices.insert(a.index());
    if (static_cast<int>(indices.size()) != th.n) return false;
    if (!indices.count(0)) return false;  // vacuum
    for (const auto& a : elems) {
        if (!th.theta(a).is_one()) return false;
        if (!indices.count(a.dual().index())) return false;
        for (const auto& b : elems) {
            if (!indices.count(fuse(a, b).index())) return false;
            if (!th.s_entry(a, b).is_one()) return false;
        }
    }
    return true;
}

namespace {

std::vector<AnyonLabel> subgroup_closure(const TheoryData& th, const AnyonLabel& g1,
                                         const AnyonLabel& g2) {
    std::set<int> seen{0};
    std::vector<AnyonLabel> frontier{AnyonLabel(0, 0, th.n)};
    std::vector<AnyonLabel> out = frontier;
    while (!frontier.empty()) {
        std::vector<AnyonLabel> next;
        for (const auto& x : frontier)
            for (const auto& g : {g1, g2}) {
                auto y = fuse(x, g);
                if (seen.insert(y.index()).second) {
                    next.push_back(y);
                    out.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_pure_charge(const std::vector<AnyonLabel>& elems) {
    return std::all_of(elems.begin(), elems.end(), [](const AnyonLabel& a) { return a.a2 == 0; });
}

bool is_pure_flux(const std::vector<AnyonLabel>& elems) {
    return std::all_of(elems.begin(), elems.end(), [](const AnyonLabel& a) { return a.a1 == 0; });
}

std::string display_name(const std::vector<AnyonLabel>& elems) {
    std::string out;
    for (const auto& a : elems) {
        if (!out.empty()) out += "+";
        out += a.str();
    }
    return out;
}

}  // namespace

std::vector<LagrangianAlgebra> enumerate_lagrangians(const TheoryData& th) {
    // Every subgroup of Z_N x Z_N is generated by at most two elements, so
    // closing over all generator pairs reaches every candidate.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<AnyonLabel>> found;
    for (const auto& g1 : th.labels)
        for (const auto& g2 : th.labels) {
            auto sub = subgroup_closure(th, g1, g2);
            if (static_cast<int>(sub.size()) != th.n) continue;
            std::vector<int> key;
            key.reserve(sub.size());
            for (const auto& a : sub) key.push_back(a.index());
            if (!seen.insert(key).second) continue;
            if (is_lagrangian(th, sub)) found.push_back(sub);
        }

    // Deterministic order: pure-charge first, pure-flux second, rest lex.
    std::sort(found.begin(), found.end(),
              [](const std::vector<AnyonLabel>& x, const std::vector<AnyonLabel>& y) {
                  auto rank = [](const std::vector<AnyonLabel>& v) {
                      return is_pure_charge(v) ? 0 : is_pure_flux(v) ? 1 : 2;
                  };
                  int rx = rank(x), ry = rank(y);
                  if (rx != ry) return rx < ry;
                  return x < y;
              });

    std::vector<LagrangianAlgebra> out;
    for (std::size_t k = 0; k < found.size(); ++k) {
        LagrangianAlgebra alg;
        alg.n = th.n;
        alg.elements = found[k];
        alg.display = display_name(found[k]);
        if (is_pure_charge(found[k]))
            alg.name = "e";
        else if (is_pure_flux(found[k]))
            alg.name = "m";
        else
            alg.name = "L" + std::to_string(k);
        out.push_back(std::move(alg));
    }
    return out;
}

const LagrangianAlgebra& boundary_by_name(const std::vector<LagrangianAlgebra>& algebras,
                                          const std::string& name) {
    for (const auto& alg : algebras)
        if (alg.name == name || alg.display == name) return alg;
    std::string known;
    for (const auto& alg : algebras) {
        if (!known.empty()) known += ", ";
        known += alg.name;
    }
    fail("unknown-boundary", "no boundary named '" + name + "' (known: " + known + ")");
}

int GroundSpace::index_of(const std::vector<AnyonLabel>& labeling) const {
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k] == labeling) return static_cast<int>(k);
    return -1;
}

std::string GroundSpace::labeling_str(int index) const {
    const auto& lab = basis[static_cast<std::size_t>(index)];
    std::string out;
    for (const auto& a : lab) {
        if (!out.empty()) out += ",";
        out += a.str();
    }
    return out;
}

GroundSpace build_ground_space(const TheoryData& th,
                               const std::vector<LagrangianAlgebra>& boundaries) {
    require(!boundaries.empty(), "invalid-input", "boundary list is empty");
    for (const auto& b : boundaries)
        require(b.n == th.n, "theory-mismatch", "boundary algebra from a different theory");

    GroundSpace gs;
    gs.theory = th;
    gs.boundaries = boundaries;

    int n = static_cast<int>(boundaries.size());
    // Enumerate labelings lexicographically over the first n-1 labels (each
    // algebra's elements are already lex-sorted); the last label is fixed by
    // the vacuum constraint and must itself condense on the last boundary.
    std::vector<int> pick(static_cast<std::size_t>(n > 1 ? n - 1 : 0), 0);
    while (true) {
        std::vector<AnyonLabel> lab;
        lab.reserve(static_cast<std::size_t>(n));
        AnyonLabel total(0, 0, th.n);
        for (int i = 0; i + 1 < n; ++i) {
            const auto& a =
                boundaries[static_cast<std::size_t>(i)].elements[static_cast<std::size_t>(
                    pick[static_cast<std::size_t>(i)])];
            lab.push_back(a);
            total = fuse(total, a);
        }
        AnyonLabel last = total.dual();
        if (boundaries.back().contains(last)) {
            lab.push_back(last);
            gs.basis.push_back(std::move(lab));
        }
        // Odometer increment over the first n-1 choices.
        int pos = n - 2;
        while (pos >= 0) {
            auto& digit = pick[static_cast<std::size_t>(pos)];
            if (++digit <
                static_cast<int>(boundaries[static_cast<std::size_t>(pos)].elements.size()))
                break;
            digit = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return gs;
}

RegisterMap qudit_registers(const GroundSpace& gs,
                            const std::vector<std::pair<int, int>>& pairing) {
    int n = gs.holes();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& [i, j] : pairing) {
        require(i >= 1 && j >= 1 && i <= n && j <= n && i < j, "invalid-input",
                "pair indices must satisfy 1 <= i < j <= holes");
        require(!used[static_cast<std::size_t>(i - 1)] && !used[static_cast<std::size_t>(j - 1)],
                "invalid-input", "pairing reuses a hole");
        used[static_cast<std::size_t>(i - 1)] = used[static_cast<std::size_t>(j - 1)] = true;
    }
    require(std::all_of(used.begin(), used.end(), [](bool b) { return b; }), "invalid-input",
            "pairing must cover every hole");

    RegisterMap reg;
    reg.pairing = pairing;

    // Digits of register (i,j): rank of hole j's label among the labels hole
    // j actually takes across the basis (ordered by algebra lex position).
    std::vector<std::vector<int>> ranks;  // per register: sorted element indices seen
    for (const auto& [i, j] : pairing) {
        (void)i;
        const auto& alg = gs.boundaries[static_cast<std::size_t>(j - 1)];
        std::set<int> seen;
        for (const auto& lab : gs.basis)
            seen.insert(alg.element_index(lab[static_cast<std::size_t>(j - 1)]));
        ranks.emplace_back(seen.begin(), seen.end());
        reg.dims.push_back(static_cast<int>(seen.size()));
    }

    long total = 1;
    for (int d : reg.dims) total *= d;
    require(total == gs.dim(), "ambiguous-register",
            "pairwise charges span " + std::to_string(total) + " tuples but the space has dim " +
                std::to_string(gs.dim()));

    reg.digits.assign(static_cast<std::size_t>(gs.dim()), {});
    reg.to_basis.assign(static_cast<std::size_t>(gs.dim()), -1);
    for (int b = 0; b < gs.dim(); ++b) {
        std::vector<int> tuple;
        for (std::size_t r = 0; r < pairing.size(); ++r) {
            int j = pairing[r].second;
            const auto& alg = gs.boundaries[static_cast<std::size_t>(j - 1)];
            int idx = alg.element_index(gs.basis[static_cast<std::size_t>(b)]
                                                [static_cast<std::size_t>(j - 1)]);
            const auto& rk = ranks[r];
            int digit = static_cast<int>(std::lower_bound(rk.begin(), rk.end(), idx) - rk.begin());
            tuple.push_back(digit);
        }
        int lin = reg.linear_index(tuple);
        require(reg.to_basis[static_cast<std::size_t>(lin)] < 0, "ambiguous-register",
                "two basis labelings share the pairwise charge tuple");
        reg.to_basis[static_cast<std::size_t>(lin)] = b;
        reg.digits[static_cast<std::size_t>(b)] = std::move(tuple);
    }
    return reg;
}

int RegisterMap::linear_index(const std::vector<int>& digit_tuple) const {
    require(digit_tuple.size() == dims.size(), "invalid-input", "digit tuple arity mismatch");
    int lin = 0;
    for (std::size_t r = 0; r < dims.size(); ++r) {
        require(digit_tuple[r] >= 0 && digit_tuple[r] < dims[r], "invalid-input",
                "digit out of range");
        lin = lin * dims[r] + digit_tuple[r];
    }
    return lin;
}

int RegisterMap::basis_of(const std::vector<int>& digit_tuple) const {
    return to_basis[static_cast<std::size_t>(linear_index(digit_tuple))];
}

CycMatrix to_register_basis(const CycMatrix& space_mat, const RegisterMap& reg) {
    int d = space_mat.rows();
    require(space_mat.is_square() && d == static_cast<int>(reg.to_basis.size()), "invalid-input",
            "operator dimension does not match the register map");
    CycMatrix out(d, d, 1);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            out.at(r, c) = space_mat.at(reg.to_basis[static_cast<std::size_t>(r)],
                                        reg.to_basis[static_cast<std::size_t>(c)]);
    return out;
}

}  // namespace gbl
