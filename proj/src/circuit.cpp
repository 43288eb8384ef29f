#include "gbl/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gbl/charge.hpp"
#include "gbl/error.hpp"

namespace gbl {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15uLL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9uLL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBuLL;
    return x ^ (x >> 31);
}

double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 shot_rng(std::uint64_t master_seed, std::uint64_t shot) {
    std::mt19937_64 rng(splitmix64(master_seed + 0x9E3779B97F4A7C15uLL * shot));
    rng.discard(32);  // warm past the single-value-seed cold start
    return rng;
}

std::vector<int> strides_of(const std::vector<int>& dims) {
    std::vector<int> strides(dims.size(), 1);
    for (int r = static_cast<int>(dims.size()) - 2; r >= 0; --r)
        strides[static_cast<std::size_t>(r)] = strides[static_cast<std::size_t>(r) + 1] *
                                               dims[static_cast<std::size_t>(r) + 1];
    return strides;
}

int digit_of(int index, int reg, const std::vector<int>& dims, const std::vector<int>& strides) {
    return (index / strides[static_cast<std::size_t>(reg)]) % dims[static_cast<std::size_t>(reg)];
}

}  // namespace

int Circuit::register_index(const std::string& name) const {
    for (std::size_t r = 0; r < registers.size(); ++r)
        if (registers[r].name == name) return static_cast<int>(r);
    return -1;
}

std::vector<int> Circuit::measured_registers() const {
    std::vector<int> out;
    for (const auto& ins : instructions)
        if (ins.kind == Instruction::Kind::Measure) {
            int r = register_index(ins.reg);
            if (r >= 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Circuit::data_registers() const {
    auto measured = measured_registers();
    std::vector<int> out;
    for (int r = 0; r < static_cast<int>(registers.size()); ++r)
        if (std::find(measured.begin(), measured.end(), r) == measured.end()) out.push_back(r);
    return out;
}

int Circuit::data_dim() const {
    int d = 1;
    for (int r : data_registers()) d *= registers[static_cast<std::size_t>(r)].dim;
    return d;
}

int Circuit::full_dim() const {
    int d = 1;
    for (const auto& reg : registers) d *= reg.dim;
    return d;
}

void Circuit::validate() const {
    require(!registers.empty() && registers.size() <= 5, "circuit-invalid",
            "a circuit needs between 1 and 5 registers");
    std::set<std::string> names;
    for (const auto& reg : registers) {
        require(!reg.name.empty() && names.insert(reg.name).second, "circuit-invalid",
                "register names must be unique and non-empty");
        require(reg.dim >= 2, "circuit-invalid", "register dims must be at least 2");
        require(reg.boundary == "e" || reg.boundary == "m", "circuit-invalid",
                "register boundary must be 'e' or 'm'");
    }

    std::set<std::string> bound;
    std::set<std::string> measured;
    for (std::size_t k = 0; k < instructions.size(); ++k) {
        const auto& ins = instructions[k];
        auto where = [&] { return "instruction " + std::to_string(k + 1); };
        if (ins.kind == Instruction::Kind::Measure) {
            int r = register_index(ins.reg);
            require(r >= 0, "circuit-invalid", where() + ": unknown register '" + ins.reg + "'");
            require(measured.insert(ins.reg).second, "circuit-invalid",
                    where() + ": register '" + ins.reg + "' measured twice");
            require(!ins.bind.empty() && bound.insert(ins.bind).second, "circuit-invalid",
                    where() + ": outcome variable must be new and non-empty");
            require(ins.measure_kind == "charge" || ins.measure_kind == "M", "circuit-invalid",
                    where() + ": measurement kind must be 'charge' or 'M'");
            if (ins.measure_kind == "M")
                require(registers[static_cast<std::size_t>(r)].dim == 3, "circuit-invalid",
                        where() + ": the coherent M measurement needs a qutrit register");
            continue;
        }
        if (ins.kind == Instruction::Kind::Conditional)
            require(bound.count(ins.cond_var), "circuit-invalid",
                    where() + ": condition variable '" + ins.cond_var +
                        "' is not bound by an earlier measurement");
        const auto& g = gate_by_name(ins.gate);  // throws unknown-gate
        require(!g.is_measurement, "circuit-invalid",
                where() + ": 'M' is a measurement; use a measure instruction");
        require(static_cast<int>(ins.on.size()) == g.arity, "circuit-invalid",
                where() + ": gate " + ins.gate + " expects " + std::to_string(g.arity) +
                    " register(s)");
        require(ins.pow >= 0, "circuit-invalid", where() + ": gate power must be non-negative");
        std::set<std::string> seen;
        for (const auto& name : ins.on) {
            int r = register_index(name);
            require(r >= 0, "circuit-invalid", where() + ": unknown register '" + name + "'");
            require(seen.insert(name).second, "circuit-invalid",
                    where() + ": register '" + name + "' repeated");
            require(registers[static_cast<std::size_t>(r)].dim == g.qudit_dim, "circuit-invalid",
                    where() + ": gate " + ins.gate + " needs dim-" +
                        std::to_string(g.qudit_dim) + " registers");
        }
        if (g.arity == 2) {
            const auto& b0 = registers[static_cast<std::size_t>(register_index(ins.on[0]))].boundary;
            const auto& b1 = registers[static_cast<std::size_t>(register_index(ins.on[1]))].boundary;
            require(b0 != b1, "circuit-invalid",
                    where() + ": gate " + ins.gate +
                        " braids a charge-type against a flux-type register; same-type pairs "
                        "need the ancilla protocol");
        }
    }
}

namespace {

using State = std::vector<Cyclotomic>;

struct Engine {
    const Circuit& c;
    std::vector<int> dims;
    std::vector<int> strides;
    int full = 1;

    explicit Engine(const Circuit& circuit) : c(circuit) {
        for (const auto& reg : c.registers) dims.push_back(reg.dim);
        strides = strides_of(dims);
        for (int d : dims) full *= d;
    }

    State embed(const std::vector<Cyclotomic>& data_state) const {
        auto data = c.data_registers();
        State out(static_cast<std::size_t>(full), Cyclotomic::zero(1));
        std::vector<int> ddims;
        for (int r : data) ddims.push_back(dims[static_cast<std::size_t>(r)]);
        auto dstrides = strides_of(ddims);
        int ddim = 1;
        for (int d : ddims) ddim *= d;
        require(static_cast<int>(data_state.size()) == ddim, "invalid-input",
                "input state must have dim " + std::to_string(ddim));
        for (int i = 0; i < ddim; ++i) {
            int fidx = 0;
            for (std::size_t r = 0; r < data.size(); ++r)
                fidx += digit_of(i, static_cast<int>(r), ddims, dstrides) *
                        strides[static_cast<std::size_t>(data[r])];
            out[static_cast<std::size_t>(fidx)] = data_state[static_cast<std::size_t>(i)];
        }
        return out;
    }

    void apply_matrix(State& state, const CycMatrix& g, const std::vector<int>& targets) const {
        std::vector<int> tdims;
        for (int r : targets) tdims.push_back(dims[static_cast<std::size_t>(r)]);
        auto tstrides_local = strides_of(tdims);
        int m = 1;
        for (int d : tdims) m *= d;
        // Offsets of each target configuration within the full index.
        std::vector<int> offsets(static_cast<std::size_t>(m), 0);
        for (int t = 0; t < m; ++t)
            for (std::size_t r = 0; r < targets.size(); ++r)
                offsets[static_cast<std::size_t>(t)] +=
                    digit_of(t, static_cast<int>(r), tdims, tstrides_local) *
                    strides[static_cast<std::size_t>(targets[r])];
        State out(state.size(), Cyclotomic::zero(1));
        for (int base = 0; base < full; ++base) {
            bool is_base = true;
            for (int r : targets)
                if (digit_of(base, r, dims, strides) != 0) { is_base = false; break; }
            if (!is_base) continue;
            for (int tr = 0; tr < m; ++tr) {
                Cyclotomic acc = Cyclotomic::zero(1);
                for (int tc = 0; tc < m; ++tc) {
                    const auto& amp =
                        state[static_cast<std::size_t>(base + offsets[static_cast<std::size_t>(tc)])];
                    if (amp.is_zero()) continue;
                    acc += g.at(tr, tc) * amp;
                }
                out[static_cast<std::size_t>(base + offsets[static_cast<std::size_t>(tr)])] = acc;
            }
        }
        state = std::move(out);
    }

    void apply_gate_ins(State& state, const Instruction& ins) const {
        const auto& g = gate_by_name(ins.gate);
        std::vector<int> targets;
        for (const auto& name : ins.on) targets.push_back(c.register_index(name));
        apply_matrix(state, g.matrix.pow(ins.pow), targets);
    }

    // Projects onto outcome o of the measurement instruction; unnormalized.
    State project(const State& state, const Instruction& ins, int o) const {
        int r = c.register_index(ins.reg);
        if (ins.measure_kind == "M") {
            State out = state;
            const auto& g = gate_by_name("M");
            apply_matrix(out, o == 0 ? g.proj0 : g.proj1, {r});
            return out;
        }
        State out(state.size(), Cyclotomic::zero(1));
        for (int i = 0; i < full; ++i)
            if (digit_of(i, r, dims, strides) == o) out[static_cast<std::size_t>(i)] = state[static_cast<std::size_t>(i)];
        return out;
    }

    int outcome_count(const Instruction& ins) const {
        return ins.measure_kind == "M" ? 2 : dims[static_cast<std::size_t>(c.register_index(ins.reg))];
    }
};

std::string outcome_key(const std::map<std::string, int>& outcomes) {
    std::string key;
    for (const auto& [var, o] : outcomes) {
        if (!key.empty()) key += ",";
        key += var + "=" + std::to_string(o);
    }
    return key;
}

struct Branch {
    std::map<std::string, int> outcomes;
    State raw;  // unnormalized
};

// All measurement branches of the circuit from a given embedded input,
// amplitudes kept unnormalized (branch weight = norm^2 of raw).
std::vector<Branch> enumerate_branches(const Engine& eng, const State& input) {
    std::vector<Branch> branches{{{}, input}};
    for (const auto& ins : eng.c.instructions) {
        if (ins.kind == Instruction::Kind::Gate) {
            for (auto& b : branches) eng.apply_gate_ins(b.raw, ins);
        } else if (ins.kind == Instruction::Kind::Conditional) {
            for (auto& b : branches)
                if (b.outcomes.at(ins.cond_var) == ins.cond_eq) eng.apply_gate_ins(b.raw, ins);
        } else {
            std::vector<Branch> next;
            for (auto& b : branches)
                for (int o = 0; o < eng.outcome_count(ins); ++o) {
                    Branch nb;
                    nb.outcomes = b.outcomes;
                    nb.outcomes[ins.bind] = o;
                    nb.raw = eng.project(b.raw, ins, o);
                    bool zero = std::all_of(nb.raw.begin(), nb.raw.end(),
                                            [](const Cyclotomic& x) { return x.is_zero(); });
                    if (!zero) next.push_back(std::move(nb));
                }
            branches = std::move(next);
        }
    }
    return branches;
}

}  // namespace

RunRecord run(const Circuit& c, const std::vector<int>& input_digits, int shots,
              std::uint64_t seed, bool emit_state) {
    auto data = c.data_registers();
    require(input_digits.size() == data.size(), "invalid-input",
            "need one input digit per unmeasured register (" + std::to_string(data.size()) + ")");
    std::vector<int> ddims;
    for (int r : data) ddims.push_back(c.registers[static_cast<std::size_t>(r)].dim);
    int ddim = 1, idx = 0;
    for (int d : ddims) ddim *= d;
    for (std::size_t r = 0; r < data.size(); ++r) {
        require(input_digits[r] >= 0 && input_digits[r] < ddims[r], "invalid-input",
                "input digit out of range");
        idx = idx * ddims[r] + input_digits[r];
    }
    std::vector<Cyclotomic> vec(static_cast<std::size_t>(ddim), Cyclotomic::zero(1));
    vec[static_cast<std::size_t>(idx)] = Cyclotomic::one(1);
    return run(c, vec, shots, seed, emit_state);
}

RunRecord run(const Circuit& c, const std::vector<Cyclotomic>& data_state, int shots,
              std::uint64_t seed, bool emit_state) {
    c.validate();
    require(shots >= 1, "invalid-input", "shots must be positive");
    require(norm_squared(data_state).is_one(), "invalid-input",
            "input state must be exactly normalized");
    Engine eng(c);
    RunRecord rec;
    rec.seed = seed;
    rec.shots = shots;

    // Exact Born weights per outcome assignment, independent of sampling.
    for (const auto& b : enumerate_branches(eng, eng.embed(data_state)))
        rec.branch_probabilities[outcome_key(b.outcomes)] =
            norm_squared(b.raw).to_complex().real();

    for (int shot = 0; shot < shots; ++shot) {
        std::mt19937_64 rng = shot_rng(seed, static_cast<std::uint64_t>(shot));
        State state = eng.embed(data_state);
        std::map<std::string, int> outcomes;
        for (const auto& ins : c.instructions) {
            if (ins.kind == Instruction::Kind::Gate) {
                eng.apply_gate_ins(state, ins);
            } else if (ins.kind == Instruction::Kind::Conditional) {
                if (outcomes.at(ins.cond_var) == ins.cond_eq) eng.apply_gate_ins(state, ins);
            } else {
                int count = eng.outcome_count(ins);
                std::vector<State> proj;
                std::vector<double> probs;
                for (int o = 0; o < count; ++o) {
                    proj.push_back(eng.project(state, ins, o));
                    probs.push_back(norm_squared(proj.back()).to_complex().real());
                }
                double u = next_uniform(rng);
                int outcome = count - 1;
                double acc = 0.0;
                for (int o = 0; o < count; ++o) {
                    acc += probs[static_cast<std::size_t>(o)];
                    if (u < acc) { outcome = o; break; }
                }
                if (probs[static_cast<std::size_t>(outcome)] < 1e-12) {
                    // Numerically dead branch: fall over to the heaviest one.
                    outcome = static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                                               probs.begin());
                    rec.warnings.push_back("shot " + std::to_string(shot) +
                                           ": resampled a numerically dead branch of '" +
                                           ins.bind + "'");
                }
                Cyclotomic norm2 = norm_squared(proj[static_cast<std::size_t>(outcome)]);
                Cyclotomic scale = exact_inv_sqrt(norm2, eng.dims[static_cast<std::size_t>(
                                                              c.register_index(ins.reg))]);
                state = std::move(proj[static_cast<std::size_t>(outcome)]);
                for (auto& amp : state) amp *= scale;
                outcomes[ins.bind] = outcome;
            }
        }
        rec.shot_outcomes.push_back(outcomes);
        if (emit_state && shot == shots - 1) rec.final_state = state;
    }
    return rec;
}

std::vector<std::complex<double>> run_float_shot(
    const Circuit& c, const std::vector<std::complex<double>>& data_state, std::uint64_t seed,
    std::map<std::string, int>& outcomes_out) {
    c.validate();
    Engine eng(c);
    // Same embedding as the exact path, carried out on complex doubles.
    auto data = c.data_registers();
    std::vector<int> ddims;
    for (int r : data) ddims.push_back(eng.dims[static_cast<std::size_t>(r)]);
    auto dstrides = strides_of(ddims);
    int ddim = 1;
    for (int d : ddims) ddim *= d;
    require(static_cast<int>(data_state.size()) == ddim, "invalid-input",
            "input state must have dim " + std::to_string(ddim));
    std::vector<std::complex<double>> state(static_cast<std::size_t>(eng.full), 0.0);
    for (int i = 0; i < ddim; ++i) {
        int fidx = 0;
        for (std::size_t r = 0; r < data.size(); ++r)
            fidx += digit_of(i, static_cast<int>(r), ddims, dstrides) *
                    eng.strides[static_cast<std::size_t>(data[r])];
        state[static_cast<std::size_t>(fidx)] = data_state[static_cast<std::size_t>(i)];
    }

    auto apply_float = [&](const CycMatrix& g, const std::vector<int>& targets) {
        auto gf = g.to_complex();
        std::vector<int> tdims;
        for (int r : targets) tdims.push_back(eng.dims[static_cast<std::size_t>(r)]);
        auto tstrides = strides_of(tdims);
        int m = 1;
        for (int d : tdims) m *= d;
        std::vector<int> offsets(static_cast<std::size_t>(m), 0);
        for (int t = 0; t < m; ++t)
            for (std::size_t r = 0; r < targets.size(); ++r)
                offsets[static_cast<std::size_t>(t)] +=
                    digit_of(t, static_cast<int>(r), tdims, tstrides) *
                    eng.strides[static_cast<std::size_t>(targets[r])];
        std::vector<std::complex<double>> out(state.size(), 0.0);
        for (int base = 0; base < eng.full; ++base) {
            bool is_base = true;
            for (int r : targets)
                if (digit_of(base, r, eng.dims, eng.strides) != 0) { is_base = false; break; }
            if (!is_base) continue;
            for (int tr = 0; tr < m; ++tr) {
                std::complex<double> acc = 0.0;
                for (int tc = 0; tc < m; ++tc)
                    acc += gf[static_cast<std::size_t>(tr)][static_cast<std::size_t>(tc)] *
                           state[static_cast<std::size_t>(base +
                                                          offsets[static_cast<std::size_t>(tc)])];
                out[static_cast<std::size_t>(base + offsets[static_cast<std::size_t>(tr)])] = acc;
            }
        }
        state = std::move(out);
    };

    std::mt19937_64 rng = shot_rng(seed, 0);
    std::map<std::string, int> outcomes;
    for (const auto& ins : c.instructions) {
        if (ins.kind == Instruction::Kind::Gate ||
            ins.kind == Instruction::Kind::Conditional) {
            if (ins.kind == Instruction::Kind::Conditional &&
                outcomes.at(ins.cond_var) != ins.cond_eq)
                continue;
            const auto& g = gate_by_name(ins.gate);
            std::vector<int> targets;
            for (const auto& name : ins.on) targets.push_back(c.register_index(name));
            apply_float(g.matrix.pow(ins.pow), targets);
        } else {
            int r = c.register_index(ins.reg);
            int count = ins.measure_kind == "M" ? 2 : eng.dims[static_cast<std::size_t>(r)];
            std::vector<std::vector<std::complex<double>>> proj;
            std::vector<double> probs;
            for (int o = 0; o < count; ++o) {
                auto p = state;
                if (ins.measure_kind == "M") {
                    auto saved = state;
                    const auto& g = gate_by_name("M");
                    apply_float(o == 0 ? g.proj0 : g.proj1, {r});
                    p = state;
                    state = saved;
                } else {
                    for (int i = 0; i < eng.full; ++i)
                        if (digit_of(i, r, eng.dims, eng.strides) != o)
                            p[static_cast<std::size_t>(i)] = 0.0;
                }
                double w = 0.0;
                for (const auto& amp : p) w += std::norm(amp);
                proj.push_back(std::move(p));
                probs.push_back(w);
            }
            double u = next_uniform(rng);
            int outcome = count - 1;
            double acc = 0.0;
            for (int o = 0; o < count; ++o) {
                acc += probs[static_cast<std::size_t>(o)];
                if (u < acc) { outcome = o; break; }
            }
            if (probs[static_cast<std::size_t>(outcome)] < 1e-12)
                outcome = static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                                           probs.begin());
            state = std::move(proj[static_cast<std::size_t>(outcome)]);
            double inv = 1.0 / std::sqrt(probs[static_cast<std::size_t>(outcome)]);
            for (auto& amp : state) amp *= inv;
            outcomes[ins.bind] = outcome;
        }
    }
    outcomes_out = outcomes;
    return state;
}

ChannelResult channel_matrix(const Circuit& c) {
    c.validate();
    Engine eng(c);
    auto data = c.data_registers();
    auto measured = c.measured_registers();
    int ddim = c.data_dim();

    std::vector<int> ddims;
    for (int r : data) ddims.push_back(eng.dims[static_cast<std::size_t>(r)]);
    auto dstrides = strides_of(ddims);

    // Column-by-column branch evolution from every data basis state.
    std::map<std::string, CycMatrix> karts;
    std::map<std::string, std::vector<int>> anc_digits;  // per branch: measured-reg digits
    ChannelResult res;
    for (int col = 0; col < ddim; ++col) {
        std::vector<Cyclotomic> unit(static_cast<std::size_t>(ddim), Cyclotomic::zero(1));
        unit[static_cast<std::size_t>(col)] = Cyclotomic::one(1);
        for (const auto& b : enumerate_branches(eng, eng.embed(unit))) {
            std::string key = outcome_key(b.outcomes);
            auto [it, fresh] = karts.try_emplace(key, CycMatrix(ddim, ddim, 1));
            // The measured registers must sit in a definite digit pattern;
            // anything else means the ancilla stayed entangled.
            std::vector<int> pattern(measured.size(), -1);
            for (int i = 0; i < eng.full; ++i) {
                if (b.raw[static_cast<std::size_t>(i)].is_zero()) continue;
                for (std::size_t a = 0; a < measured.size(); ++a) {
                    int dig = digit_of(i, measured[a], eng.dims, eng.strides);
                    if (pattern[a] < 0) pattern[a] = dig;
                    if (pattern[a] != dig) {
                        res.unitary = false;
                        res.witness = "input column " + std::to_string(col) + ", branch " + key +
                                      ": a measured register is left entangled";
                        return res;
                    }
                }
            }
            if (!fresh) {
                auto& known = anc_digits[key];
                if (pattern != known && pattern != std::vector<int>(measured.size(), -1)) {
                    for (std::size_t a = 0; a < measured.size(); ++a)
                        if (known[a] < 0) known[a] = pattern[a];
                    if (pattern != known) {
                        res.unitary = false;
                        res.witness = "branch " + key +
                                      ": measured registers end in input-dependent digits";
                        return res;
                    }
                }
            } else {
                anc_digits[key] = pattern;
            }
            for (int row = 0; row < ddim; ++row) {
                int fidx = 0;
                for (std::size_t r = 0; r < data.size(); ++r)
                    fidx += digit_of(row, static_cast<int>(r), ddims, dstrides) *
                            eng.strides[static_cast<std::size_t>(data[r])];
                for (std::size_t a = 0; a < measured.size(); ++a)
                    fidx += std::max(anc_digits[key][a], 0) *
                            eng.strides[static_cast<std::size_t>(measured[a])];
                it->second.at(row, col) = b.raw[static_cast<std::size_t>(fidx)];
            }
        }
    }

    for (const auto& [key, k] : karts) res.branches.emplace_back(key, k);

    // All branch operators must point the same way; then the common direction,
    // scaled to unit norm, is the channel.
    const CycMatrix& k0 = res.branches.front().second;
    for (const auto& [key, k] : res.branches) {
        Cyclotomic s;
        if (!k0.proportional_to(k, &s)) {
            res.unitary = false;
            res.witness = "branches " + res.branches.front().first + " and " + key +
                          " act in different directions on the data space";
            return res;
        }
    }

    CycMatrix gram = k0.dagger() * k0;
    Cyclotomic p = gram.at(0, 0);
    require(gram == CycMatrix::identity(ddim, 1).scaled(p), "internal",
            "branch operator gram matrix is not scalar");
    int order = 1;
    for (int d : eng.dims) order = order * d / std::gcd(order, d);
    CycMatrix u = k0.scaled(exact_inv_sqrt(p, order));
    require(u.is_unitary(), "internal", "normalized channel is not unitary");
    res.unitary = true;
    res.matrix = u;
    return res;
}

Circuit sum_protocol_circuit(bool with_correction) {
    Circuit c;
    c.registers = {{"ctrl", 3, "e"}, {"tgt", 3, "e"}, {"anc", 3, "m"}};
    Instruction prep;
    prep.kind = Instruction::Kind::Gate;
    prep.gate = "H3";
    prep.on = {"anc"};
    c.instructions.push_back(prep);
    for (int rep = 0; rep < 2; ++rep) {
        Instruction s;
        s.kind = Instruction::Kind::Gate;
        s.gate = "SUM3";
        s.on = {"anc", "tgt"};
        c.instructions.push_back(s);
    }
    Instruction s2;
    s2.kind = Instruction::Kind::Gate;
    s2.gate = "SUM3";
    s2.on = {"ctrl", "anc"};
    c.instructions.push_back(s2);
    Instruction meas;
    meas.kind = Instruction::Kind::Measure;
    meas.reg = "anc";
    meas.bind = "mout";
    c.instructions.push_back(meas);
    if (with_correction) {
        for (int j = 1; j <= 2; ++j) {
            Instruction fix;
            fix.kind = Instruction::Kind::Conditional;
            fix.cond_var = "mout";
            fix.cond_eq = j;
            fix.gate = "X3";
            fix.pow = j;
            fix.on = {"tgt"};
            c.instructions.push_back(fix);
        }
    }
    return c;
}

CompiledGate gate_SUM3_ee() {
    auto circuit = sum_protocol_circuit();
    auto chan = channel_matrix(circuit);
    require(chan.unitary, "internal", "the SUM protocol channel failed to converge");
    CompiledGate g;
    g.name = "SUM3-ee";
    g.arity = 2;
    g.matrix = chan.matrix;
    g.global_phase = Cyclotomic::one(3);
    for (const auto& ins : circuit.instructions) {
        RecipeStep step;
        step.kind = "circuit";
        step.matrix = CycMatrix::identity(9, 3);
        switch (ins.kind) {
            case Instruction::Kind::Gate:
                step.detail = ins.gate + " on " + ins.on[0] + (ins.on.size() > 1 ? "," + ins.on[1] : "");
                break;
            case Instruction::Kind::Measure:
                step.detail = "measure " + ins.reg + " -> " + ins.bind;
                break;
            case Instruction::Kind::Conditional:
                step.detail = "if " + ins.cond_var + "=" + std::to_string(ins.cond_eq) + ": " +
                              ins.gate + "^" + std::to_string(ins.pow) + " on " + ins.on[0];
                break;
        }
        g.recipe.push_back(std::move(step));
    }
    return g;
}

}  // namespace gbl
