#include "gbl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gbl/boundary.hpp"
#include "gbl/braid.hpp"
#include "gbl/charge.hpp"
#include "gbl/circuit.hpp"
#include "gbl/error.hpp"
#include "gbl/gates.hpp"
#include "gbl/json_io.hpp"
#include "gbl/wilson.hpp"

namespace gbl {

namespace {

std::string diag_str(const CycMatrix& m) {
    if (!m.is_diagonal()) return "(not diagonal)";
    std::string out = "diag(";
    for (int i = 0; i < m.rows(); ++i) out += m.at(i, i).pretty() + (i + 1 < m.rows() ? "," : ")");
    return out;
}

GroundSpace qutrit_space() {
    auto th = build_theory(3);
    auto algs = enumerate_lagrangians(th);
    auto e = boundary_by_name(algs, "e");
    return build_ground_space(th, std::vector<LagrangianAlgebra>{e, e});
}

GroundSpace two_qutrit_space() {
    auto th = build_theory(3);
    auto algs = enumerate_lagrangians(th);
    auto e = boundary_by_name(algs, "e");
    auto m = boundary_by_name(algs, "m");
    return build_ground_space(th, std::vector<LagrangianAlgebra>{e, e, m, m});
}

// ---- independent integer-arithmetic oracles ----------------------------

// Size-N subsets of Z_N x Z_N containing 0 that are closed under addition,
// have x1*x2 = 0 mod N elementwise, and pair trivially: x2*y1 + x1*y2 = 0.
std::set<std::set<int>> oracle_condensable_sets(int n) {
    std::set<std::set<int>> found;
    int total = n * n;
    std::vector<int> pick(static_cast<std::size_t>(n - 1));
    // Odometer over strictly increasing (n-1)-tuples drawn from {1..n*n-1}.
    for (int i = 0; i < n - 1; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        std::set<int> subset{0};
        for (int v : pick) subset.insert(v);
        bool ok = true;
        for (int x : subset) {
            int x1 = x / n, x2 = x % n;
            if ((x1 * x2) % n != 0) { ok = false; break; }
            for (int y : subset) {
                int y1 = y / n, y2 = y % n;
                if ((x2 * y1 + x1 * y2) % n != 0) { ok = false; break; }
                int z = ((x1 + y1) % n) * n + (x2 + y2) % n;
                if (!subset.count(z)) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) found.insert(subset);
        // advance the odometer
        int pos = n - 2;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == total - (n - 1 - pos)) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < n - 1; ++i)
            pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
    }
    return found;
}

// Count labelings (x_1..x_k), x_i drawn from boundary i, with total zero.
long oracle_vacuum_labelings(int n, const std::vector<LagrangianAlgebra>& bs) {
    long count = 0;
    std::vector<std::size_t> idx(bs.size(), 0);
    while (true) {
        int t1 = 0, t2 = 0;
        for (std::size_t h = 0; h < bs.size(); ++h) {
            const auto& a = bs[h].elements[idx[h]];
            t1 = (t1 + a.a1) % n;
            t2 = (t2 + a.a2) % n;
        }
        if (t1 == 0 && t2 == 0) ++count;
        std::size_t pos = bs.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < bs[pos].elements.size()) break;
            idx[pos] = 0;
            if (pos == 0) return count;
        }
    }
}

// Discriminant of a monic cubic x^3 + b x^2 + c x + d; zero iff a root repeats.
Cyclotomic cubic_discriminant(const std::vector<Cyclotomic>& poly) {
    require(poly.size() == 4 && poly[3].is_one(), "internal", "expected a monic cubic");
    const Cyclotomic& d = poly[0];
    const Cyclotomic& c = poly[1];
    const Cyclotomic& b = poly[2];
    auto k = [](long v) { return Cyclotomic::from_int(v); };
    return k(18) * b * c * d - k(4) * b * b * b * d + b * b * c * c - k(4) * c * c * c -
           k(27) * d * d;
}

// ---- the checks ---------------------------------------------------------

VerifyCheck check_sigma22() {
    VerifyCheck c;
    c.id = "sigma22";
    c.anchor = "sigma_(2,3)^2 on the N=3 [e,e,m,m] space = diag(1,1,1,1,w,w^2,1,w^2,w)";
    auto gs = two_qutrit_space();
    auto reg = qudit_registers(gs, {{1, 2}, {3, 4}});
    auto got = to_register_basis(braid_squared(gs, BraidGenerator{2, 3}).mat, reg);
    std::vector<Cyclotomic> want_diag;
    for (long p : {0L, 0L, 0L, 0L, 1L, 2L, 0L, 2L, 1L})
        want_diag.push_back(Cyclotomic::root_power(3, p));
    auto want = CycMatrix::diagonal(want_diag);
    c.expected = diag_str(want);
    c.actual = diag_str(got);
    c.passed = (got == want);
    return c;
}

VerifyCheck check_tcm_projector() {
    VerifyCheck c;
    c.id = "tcm-projector";
    c.anchor =
        "P(0) along arc(1,2) = (1/3)*all-ones; P(1,1,1)=(1,1,1); P(1,w,w^2)=P(1,w^2,w)=0";
    auto gs = qutrit_space();
    auto p = charge_projector(gs, 0, CurveLabel::arc(1, 2)).projector.mat;
    CycMatrix want(3, 3, 3);
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col)
            want.at(r, col) = Cyclotomic::from_rational(Rational(1, 3), 3);
    bool matrix_ok = (p == want);
    auto w = [](long k) { return Cyclotomic::root_power(3, k); };
    std::vector<Cyclotomic> v1{w(0), w(0), w(0)};
    std::vector<Cyclotomic> v2{w(0), w(1), w(2)};
    std::vector<Cyclotomic> v3{w(0), w(2), w(1)};
    bool fixed = (p.apply(v1) == v1);
    auto killed = [&](const std::vector<Cyclotomic>& v) {
        for (const auto& amp : p.apply(v))
            if (!amp.is_zero()) return false;
        return true;
    };
    c.expected = "P = (1/3)*J with eigenvector (1,1,1) at 1 and (1,w,w^2),(1,w^2,w) at 0";
    std::ostringstream act;
    act << "matrix " << (matrix_ok ? "=" : "!=") << " (1/3)*J; (1,1,1) "
        << (fixed ? "fixed" : "not fixed") << "; kernel vectors "
        << (killed(v2) && killed(v3) ? "annihilated" : "not annihilated");
    c.actual = act.str();
    c.passed = matrix_ok && fixed && killed(v2) && killed(v3);
    return c;
}

VerifyCheck check_pauli_x() {
    VerifyCheck c;
    c.id = "pauli-x";
    c.anchor = "tunnel(e,1->2) = sum_d |d+1><d| on the qutrit and cubes to the identity";
    auto gs = qutrit_space();
    auto reg = qudit_registers(gs, {{1, 2}});
    auto x = to_register_basis(tunnel(gs, AnyonLabel(1, 0, 3), 1, 2).mat, reg);
    CycMatrix want(3, 3, 3);
    for (int d = 0; d < 3; ++d) want.at((d + 1) % 3, d) = Cyclotomic::one(3);
    bool cyclic = (x == want);
    bool cube = x.pow(3).is_identity();
    c.expected = "cyclic shift |d> -> |d+1> with X^3 = 1";
    c.actual = std::string(cyclic ? "cyclic shift" : "not the cyclic shift") + "; X^3 " +
               (cube ? "=" : "!=") + " 1";
    c.passed = cyclic && cube;
    return c;
}

VerifyCheck check_sum_protocol() {
    VerifyCheck c;
    c.id = "sum-protocol";
    c.anchor =
        "measured SUM circuit = SUM3 in all 27 outcome branches; uncorrected branches are "
        "X3^(2j)-shifted copies";
    auto corrected = channel_matrix(sum_protocol_circuit(true));
    const auto& sum3 = gate_by_name("SUM3");
    bool equal = corrected.unitary && corrected.matrix == sum3.matrix;

    auto uncorrected = channel_matrix(sum_protocol_circuit(false));
    bool flagged = !uncorrected.unitary && !uncorrected.witness.empty();
    bool shifted = uncorrected.branches.size() == 3;
    if (shifted) {
        const auto& x3 = gate_by_name("X3");
        const auto& k0 = uncorrected.branches[0].second;
        for (int j = 1; j < 3; ++j) {
            auto shift = CycMatrix::identity(3, 3).tensor(x3.matrix.pow(2 * j));
            if (!(uncorrected.branches[static_cast<std::size_t>(j)].second == shift * k0))
                shifted = false;
        }
    }
    c.expected = "channel = SUM3 exactly; omitting the fix-up yields a non-unitary witness";
    std::ostringstream act;
    act << "channel " << (equal ? "=" : "!=") << " SUM3; uncorrected "
        << (flagged ? "flagged non-unitary" : "not flagged") << "; branch shifts "
        << (shifted ? "match X3^(2j)" : "unexpected");
    c.actual = act.str();
    c.passed = equal && flagged && shifted;
    return c;
}

VerifyCheck check_projector_algebra() {
    VerifyCheck c;
    c.id = "projector-algebra";
    c.anchor = "P(a)^2 = P(a), P(a)^dag = P(a), sum_a P(a) = 1, P(a)P(b) = 0 for a != b";
    auto gs = qutrit_space();
    std::vector<CurveLabel> curves{CurveLabel::arc(1, 2), CurveLabel::loop(1),
                                   CurveLabel::loop(2)};
    bool ok = true;
    int checked = 0;
    for (const auto& curve : curves) {
        std::vector<CycMatrix> ps;
        for (int a = 0; a < 3; ++a)
            ps.push_back(charge_projector(gs, a, curve).projector.mat);
        CycMatrix total(3, 3, 3);
        for (const auto& p : ps) {
            ok = ok && (p * p == p) && (p.dagger() == p);
            total = total + p;
            ++checked;
        }
        ok = ok && total.is_identity();
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = 0; b < ps.size(); ++b)
                if (a != b) ok = ok && (ps[a] * ps[b]).is_zero();
    }
    c.expected = "all identities exact for a in {0,1,2} on arc(1,2), loop(1), loop(2)";
    c.actual = ok ? "all identities hold (" + std::to_string(checked) + " projectors)"
                  : "an identity failed";
    c.passed = ok;
    return c;
}

VerifyCheck check_lagrangians() {
    VerifyCheck c;
    c.id = "lagrangians";
    c.anchor =
        "N=3 condensable sets are exactly 1+e+e2 and 1+m+m2; subset-scan oracle agrees for "
        "N in {2,3,4,5}";
    auto algs3 = enumerate_lagrangians(build_theory(3));
    bool fixture = algs3.size() == 2 && algs3[0].display == "1+e+e2" &&
                   algs3[1].display == "1+m+m2";
    bool oracle_ok = true;
    std::string counts;
    for (int n = 2; n <= 5; ++n) {
        auto algs = enumerate_lagrangians(build_theory(n));
        std::set<std::set<int>> got;
        for (const auto& alg : algs) {
            std::set<int> s;
            for (const auto& a : alg.elements) s.insert(a.a1 * n + a.a2);
            got.insert(s);
        }
        auto want = oracle_condensable_sets(n);
        oracle_ok = oracle_ok && (got == want);
        counts += (counts.empty() ? "" : ",") + std::to_string(algs.size());
    }
    c.expected = "N=3: {1+e+e2, 1+m+m2}; oracle match for N=2..5";
    c.actual = std::string(fixture ? "N=3 fixture ok" : "N=3 fixture wrong") + "; counts N=2..5: " +
               counts + "; oracle " + (oracle_ok ? "agrees" : "disagrees");
    c.passed = fixture && oracle_ok;
    return c;
}

VerifyCheck check_gsd() {
    VerifyCheck c;
    c.id = "gsd";
    c.anchor = "dim[e,e] = 3, dim[e,e,m,m] = 9, dim[e,m] = 1, each equal to the count of "
               "vacuum-total labelings";
    auto th = build_theory(3);
    auto algs = enumerate_lagrangians(th);
    auto e = boundary_by_name(algs, "e");
    auto m = boundary_by_name(algs, "m");
    struct Case {
        std::vector<LagrangianAlgebra> bs;
        int want;
    };
    std::vector<Case> cases{{{e, e}, 3}, {{e, e, m, m}, 9}, {{e, m}, 1}};
    bool ok = true;
    std::string dims;
    for (const auto& cs : cases) {
        int dim = build_ground_space(th, cs.bs).dim();
        long oracle = oracle_vacuum_labelings(3, cs.bs);
        ok = ok && dim == cs.want && oracle == cs.want;
        dims += (dims.empty() ? "" : ",") + std::to_string(dim);
    }
    c.expected = "3,9,1";
    c.actual = dims + (ok ? " (oracle agrees)" : " (mismatch)");
    c.passed = ok;
    return c;
}

VerifyCheck check_spectrum() {
    VerifyCheck c;
    c.id = "spectrum";
    c.anchor = "spectrum of -tW - conj(t)W^dag for the e-arc: t=1 gives {-2,1,1} with exact "
               "multiplicity 2; t=w must give three distinct eigenvalues";
    auto gs = qutrit_space();
    AnyonLabel e(1, 0, 3);
    auto curve = CurveLabel::arc(1, 2);

    auto h1 = effective_hamiltonian(gs, e, curve, Cyclotomic::one(3)).mat;
    auto ev1 = h1.hermitian_eigenvalues();
    bool t1_float = ev1.size() == 3 && std::abs(ev1[0] + 2.0) < 1e-10 &&
                    std::abs(ev1[1] - 1.0) < 1e-10 && std::abs(ev1[2] - 1.0) < 1e-10;
    bool t1_exact = h1.eigen_multiplicity(Cyclotomic::one(3)) == 2 &&
                    h1.eigen_multiplicity(Cyclotomic::from_int(-2)) == 1;

    auto hw = effective_hamiltonian(gs, e, curve, Cyclotomic::root_power(3, 1)).mat;
    auto evw = hw.hermitian_eigenvalues();
    bool tw_float = evw.size() == 3 && std::abs(evw[0] - evw[1]) > 1e-10 &&
                    std::abs(evw[1] - evw[2]) > 1e-10 && std::abs(evw[0] - evw[2]) > 1e-10;
    bool tw_exact = !cubic_discriminant(hw.char_poly()).is_zero();

    c.expected = "t=1: {-2,1,1}, multiplicity of 1 is exactly 2; t=w: three distinct eigenvalues";
    std::ostringstream act;
    act.precision(12);
    act << "t=1: {" << ev1[0] << "," << ev1[1] << "," << ev1[2] << "}"
        << (t1_exact ? " mult(1)=2 exact" : " wrong exact multiplicities") << "; t=w: {"
        << evw[0] << "," << evw[1] << "," << evw[2] << "}"
        << (tw_exact ? ", squarefree" : ", repeated root (discriminant = 0)");
    c.actual = act.str();
    c.passed = t1_float && t1_exact && tw_float && tw_exact;
    return c;
}

VerifyCheck check_gate_identities() {
    VerifyCheck c;
    c.id = "gate-identities";
    c.anchor = "SUM3 = (1 x H3^dag) CZ3 (1 x H3); Q3 = diag(1,1,w) up to the recorded phase; "
               "M projects |0> against span{|1>,|2>} after H3 conjugation";
    const auto& sum3 = gate_by_name("SUM3");
    const auto& cz3 = gate_by_name("CZ3");
    const auto& h3 = gate_by_name("H3");
    auto conj = CycMatrix::identity(3, 3).tensor(h3.matrix);
    bool had = (sum3.matrix == conj.dagger() * cz3.matrix * conj);

    bool perm = true;
    for (int i = 0; i < 3 && perm; ++i)
        for (int j = 0; j < 3 && perm; ++j) {
            std::vector<Cyclotomic> v(9, Cyclotomic::zero(3));
            v[static_cast<std::size_t>(3 * i + j)] = Cyclotomic::one(3);
            auto out = sum3.matrix.apply(v);
            for (int k = 0; k < 9; ++k) {
                bool hit = (k == 3 * i + (i + j) % 3);
                if (hit != out[static_cast<std::size_t>(k)].is_one() &&
                    !(hit == false && out[static_cast<std::size_t>(k)].is_zero()))
                    perm = false;
            }
        }

    const auto& q3 = gate_by_name("Q3");
    std::vector<Cyclotomic> qdiag{Cyclotomic::one(3), Cyclotomic::one(3),
                                  Cyclotomic::root_power(3, 1)};
    bool q_ok = (q3.matrix == CycMatrix::diagonal(qdiag).scaled(q3.global_phase));

    const auto& m = gate_by_name("M");
    std::vector<Cyclotomic> d0{Cyclotomic::one(3), Cyclotomic::zero(3), Cyclotomic::zero(3)};
    std::vector<Cyclotomic> d1{Cyclotomic::zero(3), Cyclotomic::one(3), Cyclotomic::one(3)};
    bool m_ok = (m.proj0 == CycMatrix::diagonal(d0)) && (m.proj1 == CycMatrix::diagonal(d1));

    c.expected = "all three identities exact";
    std::ostringstream act;
    act << "Hadamard conjugation " << (had && perm ? "holds (SUM3 acts |i,j> -> |i,i+j>)" : "fails")
        << "; Q3 " << (q_ok ? "= phase*diag(1,1,w)" : "unexpected") << "; M "
        << (m_ok ? "= diag(1,0,0)/diag(0,1,1)" : "unexpected");
    c.actual = act.str();
    c.passed = had && perm && q_ok && m_ok;
    return c;
}

VerifyCheck check_properties() {
    VerifyCheck c;
    c.id = "properties";
    c.anchor = "W_a W_b = W_(a x b) per curve; braid generators unitary, disjoint pairs "
               "commute; identical seeds reproduce identical runs";
    bool ok = true;
    std::string detail;
    int tunnel_pairs = 0, loop_pairs = 0, braid_pairs = 0;

    for (int n = 2; n <= 4 && ok; ++n) {
        auto th = build_theory(n);
        auto algs = enumerate_lagrangians(th);
        auto e = boundary_by_name(algs, "e");
        auto m = boundary_by_name(algs, "m");
        std::vector<std::vector<LagrangianAlgebra>> configs{
            {e, e}, {e, m}, {e, e, m, m}};
        for (const auto& bs : configs) {
            auto gs = build_ground_space(th, bs);
            // tunnel composition along (1,2) for anyons condensing at both ends
            std::vector<AnyonLabel> movable;
            for (const auto& a : bs[1].elements)
                if (bs[0].contains(a.dual())) movable.push_back(a);
            for (const auto& a : movable)
                for (const auto& b : movable) {
                    auto ta = tunnel(gs, a, 1, 2).mat;
                    auto tb = tunnel(gs, b, 1, 2).mat;
                    auto tab = tunnel(gs, fuse(a, b), 1, 2).mat;
                    if (!(ta * tb == tab)) ok = false;
                    if (!(ta * tunnel(gs, a.dual(), 1, 2).mat).is_identity()) ok = false;
                    ++tunnel_pairs;
                }
            // loop composition on every hole for every anyon pair
            for (int hole = 1; hole <= gs.holes() && ok; ++hole)
                for (const auto& a : th.labels)
                    for (const auto& b : th.labels) {
                        auto la = loop_op(gs, a, hole).mat;
                        auto lb = loop_op(gs, b, hole).mat;
                        if (!(la * lb == loop_op(gs, fuse(a, b), hole).mat)) ok = false;
                        ++loop_pairs;
                    }
        }
        // braid generators on the 4-hole space
        auto gs4 = build_ground_space(th, std::vector<LagrangianAlgebra>{e, e, m, m});
        std::vector<BraidGenerator> gens;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) gens.push_back(BraidGenerator{i, j});
        for (const auto& g : gens) {
            auto bg = braid_squared(gs4, g).mat;
            if (!bg.is_unitary()) ok = false;
            ++braid_pairs;
        }
        auto b12 = braid_squared(gs4, BraidGenerator{1, 2}).mat;
        auto b34 = braid_squared(gs4, BraidGenerator{3, 4}).mat;
        if (!(b12 * b34 == b34 * b12)) ok = false;
    }

    auto proto = sum_protocol_circuit();
    auto rec1 = run(proto, std::vector<int>{1, 2}, 25, 9001, true);
    auto rec2 = run(proto, std::vector<int>{1, 2}, 25, 9001, true);
    bool deterministic =
        run_record_to_json(rec1, true).dump() == run_record_to_json(rec2, true).dump();
    ok = ok && deterministic;

    c.expected = "group laws, unitarity, commutation, determinism all hold for N <= 4";
    std::ostringstream act;
    act << (ok ? "hold" : "violated") << " (" << tunnel_pairs << " tunnel pairs, " << loop_pairs
        << " loop pairs, " << braid_pairs << " braid generators, seeded reruns "
        << (deterministic ? "identical" : "diverged") << ")";
    c.actual = act.str();
    c.passed = ok;
    return c;
}

using CheckFn = VerifyCheck (*)();

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> table{
        {"sigma22", check_sigma22},
        {"tcm-projector", check_tcm_projector},
        {"pauli-x", check_pauli_x},
        {"sum-protocol", check_sum_protocol},
        {"projector-algebra", check_projector_algebra},
        {"lagrangians", check_lagrangians},
        {"gsd", check_gsd},
        {"spectrum", check_spectrum},
        {"gate-identities", check_gate_identities},
        {"properties", check_properties},
    };
    return table;
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed; });
}

const std::vector<std::string>& verify_check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

VerifyReport run_verify(const std::string& scope) {
    VerifyReport report;
    bool found = false;
    for (const auto& [id, fn] : registry()) {
        if (scope != "all" && scope != id) continue;
        found = true;
        report.checks.push_back(fn());
    }
    if (!found) {
        std::string known;
        for (const auto& id : verify_check_ids()) known += (known.empty() ? "" : ", ") + id;
        fail("usage-error", "unknown check id '" + scope + "'; known: all, " + known);
    }
    return report;
}

}  // namespace gbl
