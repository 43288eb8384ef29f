#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gbl/gates.hpp"

namespace gbl {

struct CircuitRegister {
    std::string name;
    int dim = 3;
    std::string boundary;  // "e" or "m"
};

struct Instruction {
    enum class Kind { Gate, Measure, Conditional };
    Kind kind = Kind::Gate;
    // Gate / Conditional payload
    std::string gate;
    std::vector<std::string> on;
    int pow = 1;
    // Measure payload
    std::string reg;
    std::string bind;
    std::string measure_kind = "charge";  // "charge" (digit basis) or "M"
    // Conditional guard
    std::string cond_var;
    int cond_eq = 0;
};

// A register-level program: gates, mid-circuit measurements with outcome
// binding, and gates conditioned on earlier outcomes. Registers that are
// measured act as ancillas: they start in digit 0 and circuit inputs address
// only the unmeasured (data) registers, in declaration order.
struct Circuit {
    std::vector<CircuitRegister> registers;
    std::vector<Instruction> instructions;

    void validate() const;  // throws circuit-invalid naming the instruction
    int register_index(const std::string& name) const;  // -1 when absent
    std::vector<int> data_registers() const;
    std::vector<int> measured_registers() const;
    int data_dim() const;
    int full_dim() const;
};

struct RunRecord {
    std::uint64_t seed = 0;
    int shots = 0;
    std::vector<std::map<std::string, int>> shot_outcomes;  // one map per shot
    // Exact-enumeration Born weights, keyed "var=o" joined with ",".
    std::map<std::string, double> branch_probabilities;
    // Full-register exact state after the last shot (when requested).
    std::vector<Cyclotomic> final_state;
    std::vector<std::string> warnings;
};

// Seed-deterministic sampling; exact amplitudes throughout. The basis-input
// overload places the given digits on the data registers.
RunRecord run(const Circuit& c, const std::vector<int>& input_digits, int shots,
              std::uint64_t seed, bool emit_state = false);
RunRecord run(const Circuit& c, const std::vector<Cyclotomic>& data_state, int shots,
              std::uint64_t seed, bool emit_state = false);

// Float-path evolution of one shot (for exact/float agreement checks).
std::vector<std::complex<double>> run_float_shot(const Circuit& c,
                                                 const std::vector<std::complex<double>>& data_state,
                                                 std::uint64_t seed,
                                                 std::map<std::string, int>& outcomes_out);

// The circuit as a map on the data registers. When every measurement branch
// collapses to the same unitary (after conditioning/corrections), that
// unitary is returned; otherwise `unitary` is false and `witness` names a
// basis input and two branches whose outputs diverge. `branches` lists each
// outcome assignment with its (amplitude-weighted) data-space operator.
struct ChannelResult {
    bool unitary = false;
    CycMatrix matrix;
    std::string witness;
    std::vector<std::pair<std::string, CycMatrix>> branches;
};

ChannelResult channel_matrix(const Circuit& c);

// The ancilla-mediated SUM protocol between two charge-type qutrits: three
// mixed-type SUM gates, a flux-charge measurement on the ancilla, and the
// X3^j correction on the target.
Circuit sum_protocol_circuit(bool with_correction = true);

// The protocol packaged as a two-qutrit gate; its matrix is the (verified
// unitary) channel of sum_protocol_circuit(). Recipe steps carry the
// instruction list rather than matrix factors, since a measurement protocol
// is not a product of unitaries.
CompiledGate gate_SUM3_ee();

}  // namespace gbl
