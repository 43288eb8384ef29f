// gblab: command-line entry point. Inspect modular data, enumerate gapped
// boundaries, build ground spaces, emit operators and compiled gates, run
// measured circuits, and replay the verification suite.
//
// Exit codes: 0 ok, 1 failed check or domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gbl/boundary.hpp"
#include "gbl/braid.hpp"
#include "gbl/charge.hpp"
#include "gbl/circuit.hpp"
#include "gbl/error.hpp"
#include "gbl/gates.hpp"
#include "gbl/json_io.hpp"
#include "gbl/verify.hpp"
#include "gbl/wilson.hpp"

namespace {

using gbl::Json;

struct Options {
    int n = 3;
    std::vector<std::string> boundaries{"e", "e"};
    std::string format = "json";
    std::string space_file;

    std::string anyon = "1,0";
    int from = 1;
    int to = 2;
    int hole = 1;
    std::string pair = "2,3";
    int charge = 0;
    std::string curve = "arc:1,2";

    std::string gate_name;
    std::string circuit_file;
    std::string input_digits;
    int shots = 1;
    std::uint64_t seed = 0;
    bool emit_state = false;

    std::string verify_scope = "all";
};

void emit(const Json& payload) { std::cout << payload.dump(2) << "\n"; }

std::pair<int, int> parse_int_pair(const std::string& text) {
    auto comma = text.find(',');
    gbl::require(comma != std::string::npos, "usage-error",
                 "expected a comma-separated pair, got '" + text + "'");
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        gbl::fail("usage-error", "expected integers in '" + text + "'");
    }
}

gbl::GroundSpace resolve_space(const Options& opt) {
    if (!opt.space_file.empty()) {
        std::ifstream in(opt.space_file);
        gbl::require(static_cast<bool>(in), "io-error",
                     "cannot open space file: " + opt.space_file);
        Json payload;
        in >> payload;
        return gbl::space_from_json(payload);
    }
    auto th = gbl::build_theory(opt.n);
    auto algs = gbl::enumerate_lagrangians(th);
    std::vector<gbl::LagrangianAlgebra> bs;
    for (const auto& name : opt.boundaries) bs.push_back(gbl::boundary_by_name(algs, name));
    return gbl::build_ground_space(th, bs);
}

void print_operator(const gbl::OperatorMatrix& op, const std::string& format) {
    if (format == "json") {
        emit(gbl::operator_to_json(op));
        return;
    }
    std::cout << op.provenance << "  [basis: " << op.basis << "]"
              << (op.mat.is_unitary() ? "" : "  (not unitary)") << "\n"
              << op.mat.pretty("  ");
}

void cmd_theory(const Options& opt) {
    auto th = gbl::build_theory(opt.n);
    if (opt.format == "json") {
        emit(gbl::theory_to_json(th));
        return;
    }
    std::cout << "D(Z_" << th.n << "): " << th.labels.size() << " anyons, D = "
              << th.global_dimension << "\n";
    std::cout << "anyons:";
    for (const auto& a : th.labels) std::cout << " " << a.str();
    std::cout << "\nS =\n" << th.s.pretty("  ") << "T =\n" << th.t.pretty("  ");
    std::cout << "twists:";
    for (const auto& a : th.labels) std::cout << " " << th.theta(a).pretty();
    std::cout << "\n";
}

void cmd_boundary_list(const Options& opt) {
    auto th = gbl::build_theory(opt.n);
    auto algs = gbl::enumerate_lagrangians(th);
    if (opt.format == "json") {
        emit(gbl::boundaries_to_json(opt.n, algs));
        return;
    }
    for (const auto& alg : algs) std::cout << alg.name << " = " << alg.display << "\n";
}

void cmd_space(const Options& opt) {
    auto gs = resolve_space(opt);
    if (opt.format == "json") {
        emit(gbl::space_to_json(gs));
        return;
    }
    std::cout << "dim " << gs.dim() << ", " << gs.holes() << " holes\n";
    for (int i = 0; i < gs.dim(); ++i)
        std::cout << "  |" << i << "> = (" << gs.labeling_str(i) << ")\n";
}

void cmd_gate(const Options& opt) {
    const auto& g = opt.gate_name == "SUM3-ee" ? gbl::gate_SUM3_ee()
                                               : gbl::gate_by_name(opt.gate_name);
    if (opt.format == "json") {
        emit(gbl::gate_to_json(g));
        return;
    }
    std::cout << g.name << " (arity " << g.arity << ", qudit dim " << g.qudit_dim << ")\n";
    if (g.is_measurement) {
        std::cout << "projector 0:\n" << g.proj0.pretty("  ");
        std::cout << "projector 1:\n" << g.proj1.pretty("  ");
    } else {
        std::cout << g.matrix.pretty("  ");
        std::cout << "global phase: " << g.global_phase.pretty() << "\n";
    }
    if (!g.recipe.empty()) {
        std::cout << "recipe:\n";
        for (const auto& step : g.recipe)
            std::cout << "  [" << step.kind << "] " << step.detail << "\n";
    }
}

void cmd_circuit_run(const Options& opt) {
    auto circuit = gbl::circuit_from_file(opt.circuit_file);
    std::vector<int> digits(circuit.data_registers().size(), 0);
    if (!opt.input_digits.empty()) {
        digits.clear();
        std::string text = opt.input_digits;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            try {
                digits.push_back(std::stoi(text.substr(pos, comma - pos)));
            } catch (const std::exception&) {
                gbl::fail("usage-error", "bad --input digit list '" + text + "'");
            }
            pos = comma + 1;
        }
    }
    auto rec = gbl::run(circuit, digits, opt.shots, opt.seed, opt.emit_state);
    if (opt.format == "json") {
        emit(gbl::run_record_to_json(rec, opt.emit_state));
        return;
    }
    std::cout << "seed " << rec.seed << ", " << rec.shots << " shots\n";
    std::map<std::string, int> tally;
    for (const auto& outcomes : rec.shot_outcomes) {
        std::string key;
        for (const auto& [var, o] : outcomes)
            key += (key.empty() ? "" : ",") + var + "=" + std::to_string(o);
        ++tally[key];
    }
    for (const auto& [key, count] : tally) std::cout << "  " << key << ": " << count << "\n";
    std::cout << "exact branch weights:\n";
    for (const auto& [key, p] : rec.branch_probabilities)
        std::cout << "  " << key << ": " << p << "\n";
    for (const auto& w : rec.warnings) std::cout << "warning: " << w << "\n";
    if (opt.emit_state) {
        std::cout << "final state (last shot, full register order):\n";
        for (const auto& amp : rec.final_state) std::cout << "  " << amp.pretty() << "\n";
    }
}

void cmd_circuit_channel(const Options& opt) {
    auto circuit = gbl::circuit_from_file(opt.circuit_file);
    auto res = gbl::channel_matrix(circuit);
    if (opt.format == "json") {
        emit(gbl::channel_to_json(res));
        return;
    }
    if (res.unitary) {
        std::cout << "unitary channel on the data registers:\n" << res.matrix.pretty("  ");
    } else {
        std::cout << "not a unitary channel: " << res.witness << "\n";
        for (const auto& [key, k] : res.branches)
            std::cout << "branch " << key << ":\n" << k.pretty("  ");
    }
}

int cmd_verify(const Options& opt) {
    auto report = gbl::run_verify(opt.verify_scope);
    if (opt.format == "json") {
        emit(gbl::verify_report_to_json(report));
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.passed ? "[pass] " : "[FAIL] ") << c.id << ": " << c.anchor << "\n";
            if (!c.passed)
                std::cout << "    expected: " << c.expected << "\n    actual:   " << c.actual
                          << "\n";
        }
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact operators and circuits on gapped-boundary qudits of D(Z_N)"};
    app.require_subcommand(1);
    app.fallthrough(false);

    auto add_common = [&](CLI::App* cmd, bool with_space = false) {
        cmd->add_option("--n", opt.n, "group modulus N");
        cmd->add_option("--boundaries", opt.boundaries,
                        "comma list of boundary names (e.g. e,e,m,m)")
            ->delimiter(',');
        cmd->add_option("--format", opt.format, "json or pretty")
            ->check(CLI::IsMember({"json", "pretty"}));
        if (with_space)
            cmd->add_option("--space", opt.space_file, "space descriptor JSON file");
    };

    auto* theory = app.add_subcommand("theory", "modular data of D(Z_N)");
    add_common(theory);

    auto* boundary = app.add_subcommand("boundary", "gapped boundary types");
    auto* blist = boundary->add_subcommand("list", "enumerate Lagrangian algebras");
    add_common(blist);
    boundary->require_subcommand(1);

    auto* space = app.add_subcommand("space", "protected subspace for a hole configuration");
    add_common(space, true);

    auto* op = app.add_subcommand("op", "Wilson / braid / measurement operators");
    op->require_subcommand(1);
    auto* tun = op->add_subcommand("tunnel", "tunneling operator between two holes");
    add_common(tun, true);
    tun->add_option("--anyon", opt.anyon, "anyon label (e.g. 1,0 or e)");
    tun->add_option("--from", opt.from, "source hole (1-based)");
    tun->add_option("--to", opt.to, "target hole (1-based)");
    auto* loop = op->add_subcommand("loop", "loop operator around one hole");
    add_common(loop, true);
    loop->add_option("--anyon", opt.anyon, "anyon label (e.g. 0,1 or m)");
    loop->add_option("--hole", opt.hole, "hole index (1-based)");
    auto* braid = op->add_subcommand("braid", "squared braid generator");
    add_common(braid, true);
    braid->add_option("--pair", opt.pair, "hole pair i,j");
    auto* tcm = op->add_subcommand("tcm", "topological charge projector");
    add_common(tcm, true);
    tcm->add_option("--charge", opt.charge, "single-layer charge 0..N-1");
    tcm->add_option("--curve", opt.curve, "arc:i,j or loop:h");
    auto* tcmc = op->add_subcommand("tcm-complement", "complement 1-P of the projector");
    add_common(tcmc, true);
    tcmc->add_option("--charge", opt.charge, "single-layer charge 0..N-1");
    tcmc->add_option("--curve", opt.curve, "arc:i,j or loop:h");

    auto* gate = app.add_subcommand("gate", "compiled qutrit gates");
    auto* gemit = gate->add_subcommand("emit", "emit a gate with its recipe");
    gemit->add_option("name", opt.gate_name, "X3|Z3|H3|CZ3|SUM3|Q3|M|SUM3-ee")->required();
    add_common(gemit);
    gate->require_subcommand(1);

    auto* circuit = app.add_subcommand("circuit", "measured-circuit simulation");
    circuit->require_subcommand(1);
    auto* crun = circuit->add_subcommand("run", "sample a circuit");
    crun->add_option("file", opt.circuit_file, "circuit JSON file")->required();
    crun->add_option("--shots", opt.shots, "number of shots");
    crun->add_option("--seed", opt.seed, "master RNG seed");
    crun->add_option("--input", opt.input_digits, "comma digits for the data registers");
    crun->add_flag("--emit-state", opt.emit_state, "include the last shot's exact state");
    add_common(crun);
    auto* cchan = circuit->add_subcommand("channel", "exact channel over all branches");
    cchan->add_option("file", opt.circuit_file, "circuit JSON file")->required();
    add_common(cchan);

    auto* verify = app.add_subcommand("verify", "re-derive the pinned results");
    verify->add_option("scope", opt.verify_scope, "all or a check id");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(theory)) {
            cmd_theory(opt);
        } else if (app.got_subcommand(boundary)) {
            cmd_boundary_list(opt);
        } else if (app.got_subcommand(space)) {
            cmd_space(opt);
        } else if (app.got_subcommand(op)) {
            auto gs = resolve_space(opt);
            if (op->got_subcommand(tun)) {
                auto a = gbl::AnyonLabel::parse(opt.anyon, gs.theory.n);
                print_operator(gbl::tunnel(gs, a, opt.from, opt.to), opt.format);
            } else if (op->got_subcommand(loop)) {
                auto a = gbl::AnyonLabel::parse(opt.anyon, gs.theory.n);
                print_operator(gbl::loop_op(gs, a, opt.hole), opt.format);
            } else if (op->got_subcommand(braid)) {
                auto [i, j] = parse_int_pair(opt.pair);
                print_operator(gbl::braid_squared(gs, gbl::BraidGenerator{i, j}), opt.format);
            } else {
                auto curve = gbl::CurveLabel::parse(opt.curve);
                auto meas = gbl::charge_projector(gs, opt.charge, curve);
                print_operator(op->got_subcommand(tcmc) ? meas.complement : meas.projector,
                               opt.format);
            }
        } else if (app.got_subcommand(gate)) {
            cmd_gate(opt);
        } else if (app.got_subcommand(circuit)) {
            if (circuit->got_subcommand(crun))
                cmd_circuit_run(opt);
            else
                cmd_circuit_channel(opt);
        } else if (app.got_subcommand(verify)) {
            return cmd_verify(opt);
        }
    } catch (const gbl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const std::string& code = e.code();
        return (code == "usage-error" || code == "unknown-gate" || code == "unknown-boundary")
                   ? 2
                   : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
