#pragma once

// JSON serialization for every artifact the CLI can emit. All top-level
// payloads are versioned with "schema": "gbl/1". Cyclotomic scalars and
// matrices round-trip exactly (coefficients travel as rational strings).

#include <string>

#include "json.hpp"

#include "gbl/boundary.hpp"
#include "gbl/charge.hpp"
#include "gbl/circuit.hpp"
#include "gbl/gates.hpp"
#include "gbl/theory.hpp"
#include "gbl/verify.hpp"
#include "gbl/wilson.hpp"

namespace gbl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "gbl/1";

// Scalars and matrices: {"coeffs": ["1/3", ...], "order": 3, "sqrtpow": 1};
// matrices carry row-major entry lists.
Json cyclotomic_to_json(const Cyclotomic& value);
Cyclotomic cyclotomic_from_json(const Json& payload);
Json matrix_to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const Json& payload);

// Top-level payloads (each carries "schema" and a "kind" discriminator).
Json theory_to_json(const TheoryData& th);
Json boundaries_to_json(int n, const std::vector<LagrangianAlgebra>& algebras);
Json space_to_json(const GroundSpace& gs);
GroundSpace space_from_json(const Json& payload);  // rebuilds from N + boundary names
Json verify_report_to_json(const VerifyReport& report);
Json operator_to_json(const OperatorMatrix& op);
Json gate_to_json(const CompiledGate& g);
Json run_record_to_json(const RunRecord& rec, bool include_state);
Json channel_to_json(const ChannelResult& res);

// Circuits round-trip: registers plus an instruction list, with conditionals
// written as {"if": "mout", "eq": 1, "gate": "X3", "on": ["tgt"]}.
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& payload);
Circuit circuit_from_file(const std::string& path);

}  // namespace gbl
