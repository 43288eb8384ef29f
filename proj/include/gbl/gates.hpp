#pragma once

#include <string>
#include <vector>

#include "gbl/charge.hpp"

namespace gbl {

// One primitive invocation inside a compiled gate, with its exact matrix in
// the register (digit) basis.
struct RecipeStep {
    std::string kind;    // "tunnel" | "loop" | "braid" | "twist" | "tcm" | "primitive"
    std::string detail;  // human-readable parameters
    CycMatrix matrix;
};

// A gate of the metaplectic set, compiled from boundary primitives. The
// matrix always equals global_phase times the product of the recipe steps
// (later steps act on the left); this is validated at construction.
struct CompiledGate {
    std::string name;
    int arity = 1;      // registers consumed
    int qudit_dim = 3;  // digits per register
    CycMatrix matrix;   // register-basis matrix (dim = qudit_dim^arity)
    std::vector<RecipeStep> recipe;
    Cyclotomic global_phase;

    bool is_measurement = false;  // M only: matrix unused, projectors below
    CycMatrix proj0, proj1;
};

// Single-qutrit Pauli-X: tunnel the charge generator across the hole pair.
CompiledGate gate_X3();
// Single-qutrit Pauli-Z: flux loop around the first hole of the pair.
CompiledGate gate_Z3();
// Qutrit Fourier gate, entries w^{kj}/sqrt(3); shipped as its own primitive
// (a charge-projection compilation is deliberately not claimed).
CompiledGate gate_H3();
// Controlled phase diag(w^{ij}): the (2,3) pure braid on two hole pairs.
CompiledGate gate_CZ3();
// SUM (controlled increment) between a flux-type control and a charge-type
// target: Fourier conjugation of the braid phase on the target register.
CompiledGate gate_SUM3();
// diag(1,1,w): the mirror-layer Dehn twist diag(1,conj(w),conj(w)) followed
// by the flux-loop Pauli-Z. (The direct layer twist diag(1,w,w) admits no
// Pauli-Z completion to diag(1,1,w); the mirror twist does, with unit
// global phase — fixed by exhaustive search over loop powers and phases.)
CompiledGate gate_Q3();
// Coherent two-outcome measurement splitting span{|0>} from span{|1>,|2>}:
// Fourier conjugation of the arc charge projector and its complement.
CompiledGate gate_M();

// Registry lookup by name (X3, Z3, H3, CZ3, SUM3, Q3, M); throws
// unknown-gate with the list of valid names.
const CompiledGate& gate_by_name(const std::string& name);
const std::vector<std::string>& gate_names();

}  // namespace gbl
