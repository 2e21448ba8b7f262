// Copyright 2026 The Brickwall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// brickwall: compile Turing machines into staggered reversible circuits,
// simulate them, and verify the construction's claims.
//
// Exit codes: 0 success/pass, 1 semantic failure (irreversible machine,
// non-unitary operator, simulation mismatch), 2 input or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "brickwall/brick.hpp"
#include "brickwall/json_io.hpp"
#include "brickwall/quantum.hpp"

using namespace brickwall;

namespace {

constexpr int kSchemaVersion = 1;

struct CommonOptions {
    std::string machine_path;
    uint32_t steps = 1;
    double tolerance = 0;
    uint32_t trials = 100;
    uint64_t seed = 1;
    std::string out_path;
    bool strict = false;
};

ordered_json make_manifest(const std::string &command, const CommonOptions &opt) {
    ordered_json m;
    m["command"] = command;
    m["inputs"] = {opt.machine_path};
    if (!opt.out_path.empty()) {
        m["out"] = opt.out_path;
    }
    return m;
}

void emit(const ordered_json &doc, const std::string &out_path) {
    std::string text = doc.dump(2);
    text += '\n';
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write output file: " + out_path);
        }
        out << text;
    }
}

TmSpec load_tm(const std::string &path) {
    return parse_tm(read_text_file(path));
}

QtmSpec load_qtm(const std::string &path) {
    return parse_qtm(read_text_file(path));
}

/// Applies the implicit rewrite of partial machines: the halting extension
/// followed by totalization. --strict turns the rewrite into an error.
TmSpec prepare_total_machine(const TmSpec &spec, bool strict, std::string *rewrite_note) {
    auto report = check_reversible(spec);
    if (!report.reversible()) {
        throw std::domain_error(
            std::string("the machine is not reversible (") +
            (report.separable ? "" : "separability violated") +
            (!report.separable && !report.injective ? ", " : "") +
            (report.injective ? "" : "injectivity violated") + ")");
    }
    if (spec.is_total()) {
        *rewrite_note = "none";
        return spec;
    }
    if (strict) {
        throw std::domain_error("the machine is partial and --strict forbids implicit rewriting");
    }
    std::cerr << "note: machine is partial; applying the halting extension and totalizing\n";
    *rewrite_note = "halting_extension+totalize";
    return totalize(halting_extension(spec).machine);
}

Config load_tape(const TmSpec &spec, const std::string &tape_path, uint32_t width) {
    if (tape_path.empty()) {
        Config c;
        c.state = spec.start;
        c.head = 0;
        c.tape.assign(width, spec.blank);
        return c;
    }
    return config_from_json(spec, nlohmann::json::parse(read_text_file(tape_path)), width);
}

int cmd_check(const CommonOptions &opt) {
    TmSpec spec = load_tm(opt.machine_path);
    auto report = check_reversible(spec);
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["manifest"] = make_manifest("check", opt);
    doc.update(reversibility_report_to_json(spec, report));
    emit(doc, opt.out_path);
    return report.reversible() ? 0 : 1;
}

int cmd_build(const CommonOptions &opt, bool lower_bits) {
    TmSpec spec = load_tm(opt.machine_path);
    std::string rewrite;
    TmSpec total = prepare_total_machine(spec, opt.strict, &rewrite);
    BrickWall wall = build_wall(total, opt.steps);
    SyntacticCircuit circuit = wall_to_circuit(wall);
    if (lower_bits) {
        circuit = lower_to_bits(circuit, state_part_count(total.num_states()), total.num_symbols());
    }
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["manifest"] = make_manifest("build", opt);
    doc["manifest"]["steps"] = opt.steps;
    doc["manifest"]["lower_bits"] = lower_bits;
    doc["machine_rewrite"] = rewrite;
    doc.update(circuit_to_json(circuit));
    emit(doc, opt.out_path);
    return 0;
}

int cmd_run(const CommonOptions &opt, const std::string &tape_path, bool with_halting) {
    TmSpec spec = load_tm(opt.machine_path);
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["manifest"] = make_manifest("run", opt);
    doc["manifest"]["steps"] = opt.steps;
    if (!tape_path.empty()) {
        doc["manifest"]["inputs"].push_back(tape_path);
    }
    uint32_t width = 2 * opt.steps + 2;

    if (with_halting) {
        if (!check_reversible(spec).reversible()) {
            throw std::domain_error("the machine is not reversible");
        }
        Config c0 = load_tape(spec, tape_path, width);
        WallHaltRun result = simulate_with_halting(spec, opt.steps, c0);
        doc["machine_rewrite"] = "halting_extension+totalize";
        doc["config"] = config_to_json(spec, result.config);
        doc["halt_step"] = result.halt_step.has_value() ? ordered_json(*result.halt_step) : ordered_json(nullptr);
        emit(doc, opt.out_path);
        return 0;
    }

    std::string rewrite;
    TmSpec total = prepare_total_machine(spec, opt.strict, &rewrite);
    Config c0 = load_tape(spec, tape_path, width);
    Config final_config = simulate_wall(total, opt.steps, c0);
    doc["machine_rewrite"] = rewrite;
    doc["config"] = config_to_json(total, final_config);
    doc["halt_step"] = nullptr;
    emit(doc, opt.out_path);
    return 0;
}

int cmd_verify(const CommonOptions &opt, bool corrupt_brick) {
    TmSpec spec = load_tm(opt.machine_path);
    std::string rewrite;
    TmSpec total = prepare_total_machine(spec, opt.strict, &rewrite);
    BrickWall wall = build_wall(total, opt.steps);
    if (corrupt_brick) {
        // Fault-injection hook: every gate copies its input, so the wall no
        // longer simulates anything.
        for (uint32_t idx = 0; idx < wall.table.size(); idx++) {
            wall.table[idx] = idx;
            wall.case_tags[idx] = BrickCase::COPY;
        }
        std::cerr << "note: brick table corrupted for fault injection\n";
    }

    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["manifest"] = make_manifest("verify", opt);
    doc["manifest"]["steps"] = opt.steps;
    doc["manifest"]["trials"] = opt.trials;
    doc["manifest"]["seed"] = opt.seed;
    doc["machine_rewrite"] = rewrite;

    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<uint32_t> symbol(0, total.num_symbols() - 1);
    bool pass = true;
    for (uint32_t trial = 0; trial < opt.trials && pass; trial++) {
        Config c0;
        c0.state = total.start;
        c0.head = 0;
        c0.tape.assign(wall.width, total.blank);
        for (uint32_t j = 0; j < wall.width; j++) {
            if (j != opt.steps + 1) {
                c0.tape[j] = symbol(rng);
            }
        }
        auto trace = simulate_wall_trace(wall, c0);
        Config expect = c0;
        for (uint32_t step = 0; step < opt.steps; step++) {
            auto next = successor(total, expect);
            if (!next.has_value()) {
                throw std::logic_error("a totalized machine halted");
            }
            expect = std::move(*next);
            if (trace[step] != expect) {
                pass = false;
                doc["mismatch"] = ordered_json{
                    {"trial", trial},
                    {"step", step + 1},
                    {"expected", config_to_json(total, expect)},
                    {"actual", config_to_json(total, trace[step])}};
                break;
            }
        }
    }
    doc["pass"] = pass;
    doc["trials"] = opt.trials;
    if (opt.trials == 0) {
        doc["warning"] = "no trials were run; the pass is vacuous";
        std::cerr << "warning: --trials 0 makes the verification vacuous\n";
    }
    emit(doc, opt.out_path);
    return pass ? 0 : 1;
}

int cmd_qcheck(const CommonOptions &opt) {
    QtmSpec spec = load_qtm(opt.machine_path);
    auto report = check_delta_properties(spec, opt.tolerance);
    // Build the operator even when the properties fail, to report how far
    // from unitary it lands.
    double build_tolerance = std::max(
        opt.tolerance,
        2 * std::max({report.worst_unit, report.worst_orthogonality, report.worst_separability}) +
            opt.tolerance);
    auto unitarity = check_unitary(build_brick_operator(spec, build_tolerance), opt.tolerance);

    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["manifest"] = make_manifest("qcheck", opt);
    doc["manifest"]["tolerance"] = opt.tolerance;
    doc.update(delta_property_report_to_json(spec, report));
    doc["unitarity"] = {{"ok", unitarity.unitary}, {"max_deviation", unitarity.max_deviation}};
    doc["pass"] = report.all() && unitarity.unitary;
    emit(doc, opt.out_path);
    return (report.all() && unitarity.unitary) ? 0 : 1;
}

int cmd_qrun(const CommonOptions &opt, const std::string &state_path) {
    QtmSpec spec = load_qtm(opt.machine_path);
    uint32_t width = 2 * opt.steps + 2;
    QState s0;
    if (state_path.empty()) {
        ExtKey key{plain_part(spec.start), 0, std::vector<uint32_t>(width, spec.blank)};
        s0.amplitudes[key] = 1.0;
    } else {
        s0 = qstate_from_json(spec, nlohmann::json::parse(read_text_file(state_path)), width);
    }
    BrickOperator op = build_brick_operator(spec, opt.tolerance);
    QState out = simulate_quantum_wall(spec, opt.steps, s0, op);

    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["manifest"] = make_manifest("qrun", opt);
    doc["manifest"]["steps"] = opt.steps;
    doc["manifest"]["tolerance"] = opt.tolerance;
    if (!state_path.empty()) {
        doc["manifest"]["inputs"].push_back(state_path);
    }
    doc.update(qstate_to_json(spec, out));
    emit(doc, opt.out_path);
    return 0;
}

int cmd_qverify(const CommonOptions &opt) {
    QtmSpec spec = load_qtm(opt.machine_path);
    auto properties = check_delta_properties(spec, 1e-9);
    if (!properties.all()) {
        std::cerr << "error: the machine fails the amplitude-vector properties\n";
        return 1;
    }
    BrickOperator op = build_brick_operator(spec, 1e-9);

    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["manifest"] = make_manifest("qverify", opt);
    doc["manifest"]["steps"] = opt.steps;
    doc["manifest"]["trials"] = opt.trials;
    doc["manifest"]["seed"] = opt.seed;
    doc["manifest"]["tolerance"] = opt.tolerance;

    std::mt19937_64 rng(opt.seed);
    double worst = 0;
    for (uint32_t trial = 0; trial < opt.trials; trial++) {
        QState s0 = random_plain_state(spec, opt.steps, rng);
        QState wall_out = simulate_quantum_wall(spec, opt.steps, s0, op);
        QState direct = s0;
        for (uint32_t step = 0; step < opt.steps; step++) {
            direct = apply_um(spec, direct);
        }
        worst = std::max(worst, l2_distance(wall_out, direct));
    }
    bool pass = worst <= opt.tolerance;
    doc["pass"] = pass;
    doc["trials"] = opt.trials;
    doc["max_l2_distance"] = worst;
    if (opt.trials == 0) {
        doc["warning"] = "no trials were run; the pass is vacuous";
        std::cerr << "warning: --trials 0 makes the verification vacuous\n";
    }
    emit(doc, opt.out_path);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Turing machines compiled into staggered reversible circuits"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string tape_path, state_path;
    bool lower_bits = false, with_halting = false, corrupt_brick = false;

    auto add_machine = [&](CLI::App *cmd) {
        cmd->add_option("machine", opt.machine_path, "machine description file")->required();
        cmd->add_option("--out", opt.out_path, "write the JSON report here instead of stdout");
    };
    auto add_steps = [&](CLI::App *cmd) {
        cmd->add_option("--steps,-T", opt.steps, "number of machine steps to simulate")
            ->required()
            ->check(CLI::PositiveNumber);
    };

    CLI::App *check = app.add_subcommand("check", "report the reversibility of a machine");
    add_machine(check);

    CLI::App *build = app.add_subcommand("build", "compile a machine into a circuit");
    add_machine(build);
    add_steps(build);
    build->add_flag("--lower-bits", lower_bits, "lower the circuit to single-bit wires");
    build->add_flag("--strict", opt.strict, "fail on partial machines instead of rewriting them");

    CLI::App *run = app.add_subcommand("run", "simulate T steps through the compiled wall");
    add_machine(run);
    add_steps(run);
    run->add_option("--tape", tape_path, "initial configuration JSON file");
    run->add_flag("--with-halting", with_halting, "recover the halting configuration and halt step");
    run->add_flag("--strict", opt.strict, "fail on partial machines instead of rewriting them");

    CLI::App *verify = app.add_subcommand("verify", "compare the wall against direct execution");
    add_machine(verify);
    add_steps(verify);
    verify->add_option("--trials", opt.trials, "number of random initial tapes");
    verify->add_option("--seed", opt.seed, "PRNG seed");
    verify->add_flag("--strict", opt.strict, "fail on partial machines instead of rewriting them");
    verify->add_flag("--debug-corrupt-brick", corrupt_brick, "")->group("");

    CLI::App *qcheck = app.add_subcommand("qcheck", "report amplitude properties and gate unitarity");
    add_machine(qcheck);
    opt.tolerance = 1e-9;
    qcheck->add_option("--tol", opt.tolerance, "numeric tolerance")->check(CLI::PositiveNumber);

    CLI::App *qrun = app.add_subcommand("qrun", "simulate T steps of the quantum wall");
    add_machine(qrun);
    add_steps(qrun);
    qrun->add_option("--state", state_path, "initial state JSON file");
    qrun->add_option("--tol", opt.tolerance, "numeric tolerance")->check(CLI::PositiveNumber);

    CLI::App *qverify = app.add_subcommand("qverify", "compare the quantum wall against direct evolution");
    add_machine(qverify);
    add_steps(qverify);
    qverify->add_option("--trials", opt.trials, "number of random unit states");
    qverify->add_option("--seed", opt.seed, "PRNG seed");
    qverify->add_option("--tol", opt.tolerance, "numeric tolerance")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) {
            return cmd_check(opt);
        }
        if (app.got_subcommand(build)) {
            return cmd_build(opt, lower_bits);
        }
        if (app.got_subcommand(run)) {
            return cmd_run(opt, tape_path, with_halting);
        }
        if (app.got_subcommand(verify)) {
            return cmd_verify(opt, corrupt_brick);
        }
        if (app.got_subcommand(qcheck)) {
            return cmd_qcheck(opt);
        }
        if (app.got_subcommand(qrun)) {
            if (qrun->count("--tol") == 0) {
                opt.tolerance = 1e-9;
            }
            return cmd_qrun(opt, state_path);
        }
        if (app.got_subcommand(qverify)) {
            if (qverify->count("--tol") == 0) {
                opt.tolerance = 1e-8;  // error accumulates over 2T rows
            }
            return cmd_qverify(opt);
        }
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
