#include "gbl/json_io.hpp"

#include <fstream>

#include "gbl/error.hpp"

namespace gbl {

Json cyclotomic_to_json(const Cyclotomic& value) {
    Json coeffs = Json::array();
    for (const auto& c : value.coeffs()) coeffs.push_back(rational_str(c));
    return Json{{"coeffs", coeffs}, {"order", value.order()}, {"sqrtpow", value.sqrt_power()}};
}

Cyclotomic cyclotomic_from_json(const Json& payload) {
    require(payload.contains("coeffs") && payload.contains("order") && payload.contains("sqrtpow"),
            "parse-error", "cyclotomic JSON needs coeffs/order/sqrtpow");
    std::vector<Rational> coeffs;
    for (const auto& c : payload.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Cyclotomic::make(payload.at("order").get<int>(), coeffs,
                            payload.at("sqrtpow").get<int>());
}

Json matrix_to_json(const CycMatrix& m) {
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(cyclotomic_to_json(m.at(r, c)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

CycMatrix matrix_from_json(const Json& payload) {
    int rows = payload.at("rows").get<int>();
    int cols = payload.at("cols").get<int>();
    require(rows > 0 && cols > 0, "parse-error", "matrix dims must be positive");
    const auto& entries = payload.at("entries");
    require(static_cast<int>(entries.size()) == rows * cols, "parse-error",
            "matrix entry count does not match dims");
    CycMatrix m(rows, cols, 1);
    int k = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = cyclotomic_from_json(entries[static_cast<std::size_t>(k++)]);
    return m;
}

Json theory_to_json(const TheoryData& th) {
    Json labels = Json::array();
    Json twists = Json::array();
    for (const auto& a : th.labels) {
        labels.push_back(a.str());
        twists.push_back(th.theta(a).pretty());
    }
    return Json{{"schema", kSchemaTag},
                {"kind", "theory"},
                {"N", th.n},
                {"global_dimension", th.global_dimension},
                {"anyons", labels},
                {"twists", twists},
                {"s", matrix_to_json(th.s)},
                {"t", matrix_to_json(th.t)}};
}

Json boundaries_to_json(int n, const std::vector<LagrangianAlgebra>& algebras) {
    Json list = Json::array();
    for (const auto& alg : algebras) {
        Json elements = Json::array();
        for (const auto& a : alg.elements) elements.push_back(a.str());
        list.push_back(Json{{"name", alg.name}, {"display", alg.display}, {"elements", elements}});
    }
    return Json{{"schema", kSchemaTag}, {"kind", "boundaries"}, {"N", n}, {"algebras", list}};
}

Json space_to_json(const GroundSpace& gs) {
    Json names = Json::array();
    for (const auto& b : gs.boundaries) names.push_back(b.name);
    Json basis = Json::array();
    for (const auto& labeling : gs.basis) {
        Json row = Json::array();
        for (const auto& a : labeling) row.push_back(a.str());
        basis.push_back(row);
    }
    return Json{{"schema", kSchemaTag}, {"kind", "space"},     {"N", gs.theory.n},
                {"boundaries", names},  {"dim", gs.dim()},     {"basis", basis}};
}

GroundSpace space_from_json(const Json& payload) {
    require(payload.value("schema", "") == kSchemaTag, "parse-error",
            "space JSON must declare \"schema\": \"gbl/1\"");
    auto th = build_theory(payload.at("N").get<int>());
    auto algs = enumerate_lagrangians(th);
    std::vector<LagrangianAlgebra> bs;
    for (const auto& name : payload.at("boundaries"))
        bs.push_back(boundary_by_name(algs, name.get<std::string>()));
    auto gs = build_ground_space(th, bs);
    if (payload.contains("dim"))
        require(gs.dim() == payload.at("dim").get<int>(), "parse-error",
                "space descriptor dim does not match the rebuilt space");
    return gs;
}

Json verify_report_to_json(const VerifyReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"id", c.id},
                              {"anchor", c.anchor},
                              {"status", c.passed ? "pass" : "fail"},
                              {"expected", c.expected},
                              {"actual", c.actual}});
    return Json{{"schema", kSchemaTag},
                {"kind", "verify"},
                {"all_passed", report.all_passed()},
                {"checks", checks}};
}

Json operator_to_json(const OperatorMatrix& op) {
    return Json{{"schema", kSchemaTag},
                {"kind", "operator"},
                {"provenance", op.provenance},
                {"basis", op.basis},
                {"unitary", op.mat.is_unitary()},
                {"matrix", matrix_to_json(op.mat)}};
}

Json gate_to_json(const CompiledGate& g) {
    Json recipe = Json::array();
    for (const auto& step : g.recipe)
        recipe.push_back(Json{{"kind", step.kind}, {"detail", step.detail}});
    Json out{{"schema", kSchemaTag},
             {"kind", "gate"},
             {"name", g.name},
             {"arity", g.arity},
             {"qudit_dim", g.qudit_dim},
             {"is_measurement", g.is_measurement},
             {"global_phase", cyclotomic_to_json(g.global_phase)},
             {"recipe", recipe},
             {"matrix", matrix_to_json(g.matrix)}};
    if (g.is_measurement) {
        out["proj0"] = matrix_to_json(g.proj0);
        out["proj1"] = matrix_to_json(g.proj1);
    }
    return out;
}

Json run_record_to_json(const RunRecord& rec, bool include_state) {
    Json shots = Json::array();
    for (const auto& outcome : rec.shot_outcomes) {
        Json one = Json::object();
        for (const auto& [var, o] : outcome) one[var] = o;
        shots.push_back(one);
    }
    Json probs = Json::object();
    for (const auto& [key, p] : rec.branch_probabilities) probs[key] = p;
    Json out{{"schema", kSchemaTag}, {"kind", "run"},
             {"seed", rec.seed},     {"shots", rec.shots},
             {"outcomes", shots},    {"branch_probabilities", probs},
             {"warnings", rec.warnings}};
    if (include_state) {
        Json state = Json::array();
        for (const auto& amp : rec.final_state) state.push_back(cyclotomic_to_json(amp));
        out["final_state"] = state;
    }
    return out;
}

Json channel_to_json(const ChannelResult& res) {
    Json out{{"schema", kSchemaTag}, {"kind", "channel"}, {"unitary", res.unitary}};
    if (res.unitary) {
        out["matrix"] = matrix_to_json(res.matrix);
    } else {
        out["witness"] = res.witness;
        Json branches = Json::array();
        for (const auto& [key, k] : res.branches)
            branches.push_back(Json{{"outcome", key}, {"operator", matrix_to_json(k)}});
        out["branches"] = branches;
    }
    return out;
}

Json circuit_to_json(const Circuit& c) {
    Json registers = Json::array();
    for (const auto& reg : c.registers)
        registers.push_back(
            Json{{"name", reg.name}, {"dim", reg.dim}, {"boundary", reg.boundary}});
    Json instructions = Json::array();
    for (const auto& ins : c.instructions) {
        switch (ins.kind) {
            case Instruction::Kind::Gate: {
                Json one{{"gate", ins.gate}, {"on", ins.on}};
                if (ins.pow != 1) one["pow"] = ins.pow;
                instructions.push_back(one);
                break;
            }
            case Instruction::Kind::Measure: {
                Json one{{"measure", ins.reg}, {"bind", ins.bind}};
                if (ins.measure_kind != "charge") one["kind"] = ins.measure_kind;
                instructions.push_back(one);
                break;
            }
            case Instruction::Kind::Conditional: {
                Json one{{"if", ins.cond_var}, {"eq", ins.cond_eq}, {"gate", ins.gate},
                         {"on", ins.on}};
                if (ins.pow != 1) one["pow"] = ins.pow;
                instructions.push_back(one);
                break;
            }
        }
    }
    return Json{{"schema", kSchemaTag},
                {"kind", "circuit"},
                {"registers", registers},
                {"instructions", instructions}};
}

Circuit circuit_from_json(const Json& payload) {
    require(payload.value("schema", "") == kSchemaTag, "parse-error",
            "circuit JSON must declare \"schema\": \"gbl/1\"");
    Circuit c;
    require(payload.contains("registers") && payload.at("registers").is_array(), "parse-error",
            "circuit JSON needs an array of registers");
    for (const auto& reg : payload.at("registers")) {
        CircuitRegister r;
        r.name = reg.at("name").get<std::string>();
        r.dim = reg.value("dim", 3);
        r.boundary = reg.value("boundary", "e");
        c.registers.push_back(std::move(r));
    }
    require(payload.contains("instructions") && payload.at("instructions").is_array(),
            "parse-error", "circuit JSON needs an array of instructions");
    for (const auto& item : payload.at("instructions")) {
        Instruction ins;
        if (item.contains("measure")) {
            ins.kind = Instruction::Kind::Measure;
            ins.reg = item.at("measure").get<std::string>();
            ins.bind = item.at("bind").get<std::string>();
            ins.measure_kind = item.value("kind", "charge");
        } else if (item.contains("if")) {
            ins.kind = Instruction::Kind::Conditional;
            ins.cond_var = item.at("if").get<std::string>();
            ins.cond_eq = item.at("eq").get<int>();
            ins.gate = item.at("gate").get<std::string>();
            ins.on = item.at("on").get<std::vector<std::string>>();
            ins.pow = item.value("pow", 1);
        } else {
            require(item.contains("gate"), "parse-error",
                    "instruction must be a gate, measure, or conditional object");
            ins.kind = Instruction::Kind::Gate;
            ins.gate = item.at("gate").get<std::string>();
            ins.on = item.at("on").get<std::vector<std::string>>();
            ins.pow = item.value("pow", 1);
        }
        c.instructions.push_back(std::move(ins));
    }
    c.validate();
    return c;
}

Circuit circuit_from_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "io-error", "cannot open circuit file: " + path);
    Json payload;
    try {
        in >> payload;
    } catch (const std::exception& ex) {
        fail("parse-error", std::string("invalid JSON in ") + path + ": " + ex.what());
    }
    return circuit_from_json(payload);
}

}  // namespace gbl
