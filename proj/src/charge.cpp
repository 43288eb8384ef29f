#include "gbl/charge.hpp"

#include <random>
#include <set>
#include <sstream>

#include "gbl/error.hpp"

namespace gbl {

SingleLayer split_double_layer(const TheoryData& th) {
    require(th.n % 2 == 1, "not-factorizable",
            "D(Z_" + std::to_string(th.n) +
                ") does not split into two chiral layers: 2 is not invertible mod N");
    SingleLayer layer;
    layer.n = th.n;
    layer.s_tilde = CycMatrix(th.n, th.n, th.n);
    auto norm = Cyclotomic::inv_sqrt_order(th.n, 1);
    for (int x = 0; x < th.n; ++x) {
        for (int a = 0; a < th.n; ++a)
            layer.s_tilde.at(x, a) = Cyclotomic::root_power(th.n, static_cast<long>(x) * a) * norm;
        layer.twists.push_back(Cyclotomic::root_power(th.n, static_cast<long>(x) * x));
    }
    return layer;
}

std::string CurveLabel::str() const {
    if (kind == Kind::Loop) return "loop:" + std::to_string(i);
    return "arc:" + std::to_string(i) + "," + std::to_string(j);
}

CurveLabel CurveLabel::parse(const std::string& text) {
    auto colon = text.find(':');
    require(colon != std::string::npos, "invalid-input", "curve must be loop:<i> or arc:<i>,<j>");
    std::string head = text.substr(0, colon);
    std::string tail = text.substr(colon + 1);
    std::istringstream is(tail);
    if (head == "loop") {
        int hole = 0;
        is >> hole;
        require(!is.fail() && is.eof() && hole >= 1, "invalid-input",
                "malformed loop curve '" + text + "'");
        return loop(hole);
    }
    if (head == "arc") {
        int a = 0, b = 0;
        char comma = 0;
        is >> a >> comma >> b;
        require(!is.fail() && comma == ',' && a >= 1 && a < b, "invalid-input",
                "malformed arc curve '" + text + "'");
        return arc(a, b);
    }
    fail("invalid-input", "unknown curve kind '" + head + "'");
}

WilsonAlgebraBasis wilson_basis(const GroundSpace& gs) {
    WilsonAlgebraBasis out;
    for (int hole = 1; hole <= gs.holes(); ++hole)
        for (const auto& a : gs.theory.labels)
            out.elements.emplace_back(a, CurveLabel::loop(hole));
    for (int i = 1; i <= gs.holes(); ++i)
        for (int j = i + 1; j <= gs.holes(); ++j) {
            const auto& alg_i = gs.boundaries[static_cast<std::size_t>(i - 1)];
            const auto& alg_j = gs.boundaries[static_cast<std::size_t>(j - 1)];
            for (const auto& a : gs.theory.labels)
                if (alg_j.contains(a) && alg_i.contains(a.dual()))
                    out.elements.emplace_back(a, CurveLabel::arc(i, j));
        }
    return out;
}

namespace {

// Cyclic generator of the arc's condensable set, ordered so that powers
// g^0..g^{N-1} enumerate it; the curve is rejected if no such generator
// exists (trivial or non-cyclic condensable sets).
AnyonLabel arc_generator(const GroundSpace& gs, int i, int j) {
    const auto& alg_i = gs.boundaries[static_cast<std::size_t>(i - 1)];
    const auto& alg_j = gs.boundaries[static_cast<std::size_t>(j - 1)];
    std::vector<AnyonLabel> cond;
    for (const auto& a : gs.theory.labels)
        if (alg_j.contains(a) && alg_i.contains(a.dual())) cond.push_back(a);
    require(static_cast<int>(cond.size()) == gs.theory.n, "invalid-curve",
            "arc " + std::to_string(i) + "," + std::to_string(j) + " condenses only " +
                std::to_string(cond.size()) + " anyons; a full charge ladder needs " +
                std::to_string(gs.theory.n));
    for (const auto& g : cond) {
        if (g.is_vacuum()) continue;
        std::set<int> powers;
        AnyonLabel p(0, 0, gs.theory.n);
        for (int k = 0; k < gs.theory.n; ++k) {
            powers.insert(p.index());
            p = fuse(p, g);
        }
        if (static_cast<int>(powers.size()) == gs.theory.n) return g;
    }
    fail("invalid-curve", "arc condensable set is not cyclic");
}

AnyonLabel power(const AnyonLabel& g, int k) {
    AnyonLabel p(0, 0, g.n);
    for (int t = 0; t < k; ++t) p = fuse(p, g);
    return p;
}

}  // namespace

ChargeMeasurement charge_projector(const GroundSpace& gs, int a, const CurveLabel& curve) {
    auto layer = split_double_layer(gs.theory);
    require(a >= 0 && a < layer.n, "invalid-input", "charge label out of range");
    int n = gs.theory.n;
    int d = gs.dim();

    if (curve.kind == CurveLabel::Kind::Arc)
        require(curve.i >= 1 && curve.j <= gs.holes() && curve.i < curve.j, "invalid-curve",
                "arc endpoints out of range");
    else
        require(curve.i >= 1 && curve.i <= gs.holes(), "invalid-curve", "loop hole out of range");

    CycMatrix p(d, d, n);
    for (int x = 0; x < n; ++x) {
        Cyclotomic weight = layer.s_tilde.at(0, a) * layer.s_tilde.at(x, a).conj();
        CycMatrix op_x;
        if (curve.kind == CurveLabel::Kind::Arc) {
            AnyonLabel g = arc_generator(gs, curve.i, curve.j);
            op_x = tunnel(gs, power(g, x), curve.i, curve.j).mat;
        } else {
            op_x = loop_op(gs, AnyonLabel(x, -x, n), curve.i).mat;
        }
        p = p + op_x.scaled(weight);
    }

    ChargeMeasurement m;
    m.charge = a;
    m.curve = curve;
    m.projector.mat = p;
    m.projector.provenance = "tcm charge=" + std::to_string(a) + " " + curve.str();
    m.projector.basis = "space-lex";
    m.complement.mat = CycMatrix::identity(d, n) - p;
    m.complement.provenance = "tcm-complement charge=" + std::to_string(a) + " " + curve.str();
    m.complement.basis = "space-lex";

    require(p * p == p, "internal", "charge projector is not idempotent");
    require(p.is_hermitian(), "internal", "charge projector is not Hermitian");
    return m;
}

OperatorMatrix effective_hamiltonian(const GroundSpace& gs, const AnyonLabel& a,
                                     const CurveLabel& curve, const Cyclotomic& t) {
    OperatorMatrix w = curve.kind == CurveLabel::Kind::Arc ? tunnel(gs, a, curve.i, curve.j)
                                                           : loop_op(gs, a, curve.i);
    Cyclotomic mt = -t;
    OperatorMatrix h;
    h.mat = w.mat.scaled(mt) + w.mat.dagger().scaled(mt.conj());
    h.provenance = "hamiltonian " + a.str() + " " + curve.str() + " t=" + t.str();
    h.basis = "space-lex";
    return h;
}

Cyclotomic exact_inv_sqrt(const Cyclotomic& q, int order) {
    require(q.is_rational(), "inexact-normalization",
            "branch norm is not rational; cannot renormalize exactly");
    Rational r = q.rational_value();
    require(r > 0, "inexact-normalization", "branch norm must be positive");
    Rational root;
    if (exact_sqrt(r, root)) return Cyclotomic::from_rational(Rational(1) / root, 1);
    if (exact_sqrt(r * order, root))
        return Cyclotomic::sqrt_order(order) * Cyclotomic::from_rational(Rational(1) / root, 1);
    fail("inexact-normalization",
         "branch norm " + rational_str(r) + " is not of the form r^2 or r^2/" +
             std::to_string(order));
}

MeasureResult measure(const std::vector<Cyclotomic>& state, const ChargeMeasurement& m,
                      std::uint64_t seed) {
    int d = m.projector.mat.rows();
    require(static_cast<int>(state.size()) == d, "invalid-input", "state dimension mismatch");
    require(norm_squared(state).is_one(), "invalid-input", "state must be exactly normalized");

    auto proj0 = m.projector.mat.apply(state);
    auto proj1 = m.complement.mat.apply(state);
    Cyclotomic q0 = norm_squared(proj0);
    Cyclotomic q1 = norm_squared(proj1);
    double p0 = q0.to_complex().real();
    double p1 = q1.to_complex().real();

    std::mt19937_64 rng(seed);
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    int outcome = u < p0 ? 0 : 1;

    bool resampled = false;
    if ((outcome == 0 ? p0 : p1) < 1e-12) {
        outcome = 1 - outcome;
        resampled = true;
    }

    const auto& proj = outcome == 0 ? proj0 : proj1;
    const auto& q = outcome == 0 ? q0 : q1;
    Cyclotomic scale = exact_inv_sqrt(q, m.projector.mat.at(0, 0).order());

    MeasureResult res;
    res.outcome = outcome;
    res.probability = outcome == 0 ? p0 : p1;
    res.resampled = resampled;
    res.post_state.reserve(state.size());
    for (const auto& amp : proj) res.post_state.push_back(amp * scale);
    return res;
}

}  // namespace gbl
