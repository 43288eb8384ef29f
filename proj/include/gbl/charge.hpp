#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gbl/wilson.hpp"

namespace gbl {

// One chiral layer of the doubled theory: Z_N labels {0..N-1} with the
// normalized braiding matrix and the layer twists.
struct SingleLayer {
    int n = 0;
    CycMatrix s_tilde;                // entries w^{xa} / sqrt(N)
    std::vector<Cyclotomic> twists;   // theta_x = w^{x^2}
};

// Factor D(Z_N) into a modular layer times its mirror. Exists exactly when
// the diagonal/antidiagonal recombination (a1,a2) -> ((a1+a2)/2-type data)
// is invertible, i.e. for odd N; even N throws not-factorizable.
SingleLayer split_double_layer(const TheoryData& th);

// The closed curves on which Wilson operators live: a loop encircling one
// hole or an arc connecting two holes (1-based indices, i < j for arcs).
struct CurveLabel {
    enum class Kind { Loop, Arc };
    Kind kind = Kind::Loop;
    int i = 0;
    int j = 0;

    static CurveLabel loop(int hole) { return {Kind::Loop, hole, 0}; }
    static CurveLabel arc(int i, int j) { return {Kind::Arc, i, j}; }
    std::string str() const;                      // "loop:2" / "arc:1,2"
    static CurveLabel parse(const std::string&);  // inverse of str()
};

// Linear basis of the operator algebra on a GroundSpace: every anyon looped
// around every hole, plus arc operators for each anyon that condenses
// appropriately at both endpoints.
struct WilsonAlgebraBasis {
    std::vector<std::pair<AnyonLabel, CurveLabel>> elements;
};

WilsonAlgebraBasis wilson_basis(const GroundSpace& gs);

// Projective measurement of the single-layer charge `a` through a curve:
// P = sum_x s~_{0a} conj(s~_{xa}) O_x, with O_x the x-th power tunnel along
// an arc or the (x,-x) loop around a hole. P and 1-P are validated exactly
// (idempotent, Hermitian, summing to the identity).
struct ChargeMeasurement {
    int charge = 0;
    CurveLabel curve;
    OperatorMatrix projector;
    OperatorMatrix complement;
};

ChargeMeasurement charge_projector(const GroundSpace& gs, int a, const CurveLabel& curve);

// H' = -t W - conj(t) W^dag for the curve operator W; Hermitian by shape.
OperatorMatrix effective_hamiltonian(const GroundSpace& gs, const AnyonLabel& a,
                                     const CurveLabel& curve, const Cyclotomic& t);

struct MeasureResult {
    int outcome = 0;                     // 0 = projector branch, 1 = complement
    std::vector<Cyclotomic> post_state;  // renormalized exactly
    double probability = 0.0;            // Born weight of the returned branch
    bool resampled = false;              // true if the sampled branch was numerically dead
};

// Born-rule sampling between P and 1-P; deterministic for a fixed seed.
// The input state must be exactly normalized.
MeasureResult measure(const std::vector<Cyclotomic>& state, const ChargeMeasurement& m,
                      std::uint64_t seed);

// Exact inverse square root helper: returns s with s^2 * q == 1 for rational
// q of the form r^2 or r^2 / order; throws inexact-normalization otherwise.
Cyclotomic exact_inv_sqrt(const Cyclotomic& q, int order);

}  // namespace gbl
