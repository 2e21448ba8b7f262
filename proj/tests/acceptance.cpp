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

// Acceptance suite: one pass/fail line per claim the project is built around,
// each checked at a pinned tolerance and runtime budget.
//
// Usage: acceptance [machines-dir]

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>

#include "brickwall/brick.hpp"
#include "brickwall/json_io.hpp"
#include "brickwall/quantum.hpp"
#include "oracles.hpp"

using namespace brickwall;
using namespace brickwall::testing;
namespace fs = std::filesystem;

namespace {

struct Corpus {
    std::vector<std::pair<std::string, TmSpec>> reversible_total;   // total after no rewrite
    std::vector<std::pair<std::string, TmSpec>> reversible_partial;  // machines with holes
    std::vector<std::pair<std::string, TmSpec>> violators;
    std::vector<std::pair<std::string, QtmSpec>> quantum;
};

Corpus load_corpus(const std::string &dir) {
    Corpus corpus;
    std::vector<fs::path> paths;
    for (const auto &entry : fs::directory_iterator(dir)) {
        paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    for (const auto &path : paths) {
        if (path.extension() == ".tm") {
            TmSpec spec = parse_tm(read_text_file(path.string()));
            if (!check_reversible(spec).reversible()) {
                corpus.violators.push_back({path.filename().string(), std::move(spec)});
            } else if (spec.is_total()) {
                corpus.reversible_total.push_back({path.filename().string(), std::move(spec)});
            } else {
                corpus.reversible_partial.push_back({path.filename().string(), std::move(spec)});
            }
        } else if (path.extension() == ".qtm") {
            corpus.quantum.push_back({path.filename().string(), parse_qtm(read_text_file(path.string()))});
        }
    }
    return corpus;
}

int failures = 0;

void criterion(int number, const std::string &label, double budget_seconds, const std::function<bool(std::string &)> &body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception &e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = budget_seconds <= 0 || elapsed <= budget_seconds;
    if (!in_budget) {
        detail += detail.empty() ? "" : "; ";
        detail += "over the runtime budget";
    }
    bool pass = ok && in_budget;
    if (!pass) {
        failures++;
    }
    std::printf(
        "[%s] criterion %d: %s (%.2f s%s)%s%s\n",
        pass ? "PASS" : "FAIL",
        number,
        label.c_str(),
        elapsed,
        budget_seconds > 0 ? (", budget " + std::to_string((int)budget_seconds) + " s").c_str() : "",
        detail.empty() ? "" : " -- ",
        detail.c_str());
}

}  // namespace

int main(int argc, char **argv) {
    std::string machines_dir = argc > 1 ? argv[1] : "machines";
    Corpus corpus = load_corpus(machines_dir);
    std::printf(
        "corpus: %zu reversible total, %zu reversible partial, %zu violating, %zu quantum\n",
        corpus.reversible_total.size(),
        corpus.reversible_partial.size(),
        corpus.violators.size(),
        corpus.quantum.size());

    // 1. The delta-level reversibility criterion coincides with "every
    //    configuration has at most one predecessor", exhaustively at N=4.
    criterion(1, "reversibility criterion equivalence", 30, [&](std::string &detail) {
        std::mt19937_64 rng(0xacce9701);
        int checked = 0, reversible_seen = 0;
        auto agree = [&](const TmSpec &spec) {
            bool by_criterion = check_reversible(spec).reversible();
            bool by_counting = every_config_has_at_most_one_predecessor(spec, 4);
            checked++;
            reversible_seen += by_criterion;
            return by_criterion == by_counting;
        };
        for (int trial = 0; trial < 200; trial++) {
            uint32_t nq = 1 + (uint32_t)(rng() % 3);
            double density = 0.25 + 0.75 * (double)(rng() % 16) / 16.0;
            if (!agree(random_spec(nq, 2, density, rng))) {
                detail = "mismatch on a random table";
                return false;
            }
        }
        for (const auto &[name, spec] : corpus.violators) {
            if (!agree(spec)) {
                detail = "mismatch on " + name;
                return false;
            }
        }
        for (const auto &[name, spec] : corpus.reversible_total) {
            if (spec.num_symbols() != 2 || spec.num_states() > 3) {
                continue;  // the exhaustive oracle sizes are |Q|<=3, |Γ|=2
            }
            if (!agree(spec)) {
                detail = "mismatch on " + name;
                return false;
            }
        }
        detail = std::to_string(checked) + " machines, " + std::to_string(reversible_seen) + " reversible";
        return checked >= 200 && reversible_seen > 0 && reversible_seen < checked;
    });

    // 2. The brick function is a bijection exactly for reversible machines.
    criterion(2, "brick function bijectivity", 5, [&](std::string &detail) {
        for (const auto &[name, spec] : corpus.reversible_total) {
            auto report = check_brick_bijective(spec);
            if (!report.bijective || !report.collisions.empty()) {
                detail = "unexpected collision for " + name;
                return false;
            }
        }
        for (const auto &[name, spec] : corpus.reversible_partial) {
            auto report = check_brick_bijective(totalize(halting_extension(spec).machine));
            if (!report.bijective) {
                detail = "unexpected collision for extended " + name;
                return false;
            }
        }
        for (const auto &[name, spec] : corpus.violators) {
            if (!spec.is_total()) {
                continue;
            }
            auto report = check_brick_bijective(spec);
            if (report.bijective || report.collisions.empty()) {
                detail = "no collision found for " + name;
                return false;
            }
        }
        detail = std::to_string(corpus.reversible_total.size() + corpus.reversible_partial.size()) +
                 " machines bijective, " + std::to_string(corpus.violators.size()) + " violators collide";
        return !corpus.violators.empty();
    });

    // 3. The wall computes the T-fold successor function, bit for bit.
    criterion(3, "classical wall simulation equals iterated successor", 60, [&](std::string &detail) {
        std::mt19937_64 rng(0xacce9703);
        size_t machines = 0, runs = 0;
        auto check_machine = [&](const std::string &name, const TmSpec &total) {
            machines++;
            for (uint32_t steps = 1; steps <= 8; steps++) {
                BrickWall wall = build_wall(total, steps);
                for (int trial = 0; trial < 100; trial++) {
                    Config c0 = random_wall_config(total, steps, true, rng);
                    Config expect = c0;
                    for (uint32_t s = 0; s < steps; s++) {
                        expect = *successor(total, expect);
                    }
                    if (simulate_wall(wall, c0) != expect) {
                        detail = "mismatch for " + name;
                        return false;
                    }
                    runs++;
                }
            }
            return true;
        };
        for (const auto &[name, spec] : corpus.reversible_total) {
            if (!check_machine(name, spec)) {
                return false;
            }
        }
        for (const auto &[name, spec] : corpus.reversible_partial) {
            if (!check_machine(name, totalize(halting_extension(spec).machine))) {
                return false;
            }
        }

        // Two rows = one successor step, exhaustively over every
        // configuration at N=6 for one fixed machine.
        TmSpec shuttle = parse_tm(read_text_file(machines_dir + "/shuttle.tm"));
        BrickWall wall = build_wall(shuttle, 2);
        for (const Config &c : enumerate_configs(shuttle, 6)) {
            auto row = encode_row(shuttle, c);
            apply_wall_row(wall, 0, row);
            apply_wall_row(wall, 1, row);
            ExtConfig ext = decode_row(shuttle, row);
            Config expect = *successor(shuttle, c);
            if (ext.state_part != plain_part(expect.state) || ext.head != expect.head ||
                ext.tape != expect.tape) {
                detail = "two-row mismatch at N=6";
                return false;
            }
        }
        detail = std::to_string(machines) + " machines, " + std::to_string(runs) + " runs, all exact";
        return machines >= 10;
    });

    // 4. The halting extension never halts before step T and the halting
    //    configuration and halt step are recovered exactly.
    criterion(4, "halting extension and recovery", 0, [&](std::string &detail) {
        std::mt19937_64 rng(0xacce9704);
        size_t machines = 0, inputs = 0, halts = 0;
        for (const auto &[name, spec] : corpus.reversible_partial) {
            machines++;
            HaltingExtension ext = halting_extension(spec);
            for (uint32_t steps = 4; steps <= 10; steps++) {
                for (int trial = 0; trial < 20; trial++) {
                    Config c0 = random_wall_config(spec, steps, false, rng);
                    inputs++;
                    auto [ext_config, ext_halt] = iterate_successor(ext.machine, c0, steps);
                    if (ext_halt.has_value()) {
                        detail = name + " halted before step T";
                        return false;
                    }
                    auto [direct_config, direct_halt] = iterate_successor(spec, c0, steps);
                    WallHaltRun run = simulate_with_halting(spec, steps, c0);
                    if (run.halt_step != direct_halt || run.config != direct_config) {
                        detail = "recovery mismatch for " + name;
                        return false;
                    }
                    halts += direct_halt.has_value();
                }
            }
        }
        detail = std::to_string(machines) + " machines, " + std::to_string(inputs) + " inputs, " +
                 std::to_string(halts) + " halting";
        return machines >= 5 && halts >= inputs / 4;
    });

    // 5. Machines generated from random unitaries satisfy the three
    //    amplitude properties and yield a unitary brick operator; every
    //    single-amplitude perturbation of magnitude 0.01 is detected.
    criterion(5, "amplitude properties and unitarity", 30, [&](std::string &detail) {
        std::mt19937_64 rng(0xacce9705);
        size_t specs = 0, perturbations = 0;
        for (int trial = 0; trial < 20; trial++) {
            uint32_t nq = 1 + (uint32_t)(rng() % 3), ns = 2;
            StatePartition partition;
            for (uint32_t q = 0; q < nq; q++) {
                partition.direction.push_back(rng() % 2 ? +1 : -1);
            }
            QtmSpec spec = gen_qtm_from_unitary(
                random_unitary(nq * ns, rng), partition, index_names("q", nq), index_names("s", ns), "s0",
                "q0");
            specs++;
            if (!check_delta_properties(spec, 1e-9).all()) {
                detail = "generated machine fails the delta properties";
                return false;
            }
            if (check_unitary(build_brick_operator(spec, 1e-9), 1e-9).max_deviation > 1e-9) {
                detail = "generated machine's brick operator is not unitary";
                return false;
            }
            for (size_t key = 0; key < spec.delta.size(); key++) {
                for (size_t entry = 0; entry < spec.delta[key].size(); entry++) {
                    QtmSpec perturbed = spec;
                    perturbed.delta[key][entry].amp += 0.01;
                    perturbations++;
                    bool detected = !check_delta_properties(perturbed, 1e-9).all();
                    if (!detected) {
                        detected = !check_unitary(build_brick_operator(perturbed, 1.0), 1e-9).unitary;
                    }
                    if (!detected) {
                        detail = "a 0.01 perturbation went unnoticed";
                        return false;
                    }
                }
            }
        }
        detail = std::to_string(specs) + " machines, " + std::to_string(perturbations) +
                 " perturbations all detected";
        return specs >= 20;
    });

    // 6. The quantum wall computes the T-fold direct evolution within 1e-8,
    //    preserving the norm within 1e-9 after every row.
    criterion(6, "quantum wall simulation", 120, [&](std::string &detail) {
        std::mt19937_64 rng(0xacce9706);
        size_t machines = 0, sims = 0;
        double worst_distance = 0, worst_norm = 0;
        for (const auto &[name, spec] : corpus.quantum) {
            machines++;
            BrickOperator op = build_brick_operator(spec, 1e-9);
            for (uint32_t steps = 1; steps <= 4; steps++) {
                for (int trial = 0; trial < 20; trial++) {
                    QState s0 = random_plain_state(spec, steps, rng);
                    std::vector<double> row_norms;
                    QState wall_out = simulate_quantum_wall(spec, steps, s0, op, &row_norms);
                    QState direct = s0;
                    for (uint32_t s = 0; s < steps; s++) {
                        direct = apply_um(spec, direct);
                    }
                    worst_distance = std::max(worst_distance, l2_distance(wall_out, direct));
                    for (double n : row_norms) {
                        worst_norm = std::max(worst_norm, std::abs(n - 1.0));
                    }
                    sims++;
                }
            }
        }
        char buf[128];
        std::snprintf(
            buf, sizeof buf, "%zu machines, %zu runs, max distance %.2e, max norm drift %.2e", machines,
            sims, worst_distance, worst_norm);
        detail = buf;
        return machines >= 5 && worst_distance <= 1e-8 && worst_norm <= 1e-9;
    });

    // 7. On 0/1 amplitudes the brick operator is the brick permutation,
    //    entry-exact, and the quantum wall reproduces the classical wall.
    criterion(7, "classical consistency bridge", 0, [&](std::string &detail) {
        std::mt19937_64 rng(0xacce9707);
        size_t machines = 0;
        for (const auto &[name, spec] : corpus.reversible_total) {
            machines++;
            QtmSpec embedded = classical_embedding(spec);
            BrickOperator op = build_brick_operator(embedded, 1e-9);
            BrickWall wall = build_wall(spec, 2);
            for (uint32_t col = 0; col < op.dim(); col++) {
                for (uint32_t row = 0; row < op.dim(); row++) {
                    cplx expect = row == wall.table[col] ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
                    if (op.u.at(row, col) != expect) {
                        detail = "operator entry differs from the permutation for " + name;
                        return false;
                    }
                }
            }
            for (int trial = 0; trial < 20; trial++) {
                Config c0 = random_wall_config(spec, 2, true, rng);
                QState s0;
                s0.amplitudes[basis_key(c0)] = 1.0;
                QState out = simulate_quantum_wall(embedded, 2, s0, op);
                Config expect = simulate_wall(wall, c0);
                if (out.amplitudes.size() != 1 || out.amplitudes.begin()->first != basis_key(expect) ||
                    out.amplitudes.begin()->second != cplx{1.0, 0.0}) {
                    detail = "quantum wall differs from the classical wall for " + name;
                    return false;
                }
            }
        }
        detail = std::to_string(machines) + " classical machines, entry-exact";
        return machines > 0;
    });

    // 8. Exported walls conform to the circuit model: they validate, are
    //    reversible, schedule as 2T bouts of T+1 gates, and compute a
    //    schedule-independent function.
    criterion(8, "circuit-model conformance", 0, [&](std::string &detail) {
        std::mt19937_64 rng(0xacce9708);
        size_t walls = 0;
        auto check_wall = [&](const std::string &name, const TmSpec &total, uint32_t steps) {
            BrickWall wall = build_wall(total, steps);
            SyntacticCircuit c = wall_to_circuit(wall);
            walls++;
            if (!validate(c).ok() || !check_reversible_circuit(c).reversible) {
                detail = "wall for " + name + " fails validation or reversibility";
                return false;
            }
            Schedule eager = eager_schedule(c);
            if (eager.bouts.size() != 2 * steps) {
                detail = "wall for " + name + " has the wrong bout count";
                return false;
            }
            for (const auto &bout : eager.bouts) {
                if (bout.size() != steps + 1) {
                    detail = "wall for " + name + " has the wrong bout width";
                    return false;
                }
            }
            std::vector<std::vector<uint32_t>> inputs;
            for (int k = 0; k < 20; k++) {
                std::vector<uint32_t> in;
                for (uint32_t id : c.inputs) {
                    in.push_back((uint32_t)(rng() % c.domain[id]));
                }
                inputs.push_back(std::move(in));
            }
            std::vector<std::vector<uint32_t>> expected;
            for (const auto &in : inputs) {
                expected.push_back(run_with_schedule(c, eager, in));
            }
            for (int s = 0; s < 5; s++) {
                Schedule candidate = random_schedule(c, rng);
                int attempts = 0;
                while (candidate.bouts.size() == eager.bouts.size() && attempts++ < 32) {
                    candidate = random_schedule(c, rng);  // insist on a non-eager schedule
                }
                if (!is_valid_schedule(c, candidate) || candidate.bouts.size() == eager.bouts.size()) {
                    detail = "failed to draw a valid non-eager schedule for " + name;
                    return false;
                }
                for (size_t k = 0; k < inputs.size(); k++) {
                    if (run_with_schedule(c, candidate, inputs[k]) != expected[k]) {
                        detail = "schedule dependence in the wall for " + name;
                        return false;
                    }
                }
            }
            return true;
        };
        for (const auto &[name, spec] : corpus.reversible_total) {
            for (uint32_t steps : {1u, 2u, 3u}) {
                if (!check_wall(name, spec, steps)) {
                    return false;
                }
            }
        }
        for (const auto &[name, spec] : corpus.reversible_partial) {
            TmSpec total = totalize(halting_extension(spec).machine);
            if (!check_wall(name, total, 2)) {
                return false;
            }
        }
        detail = std::to_string(walls) + " walls conform";
        return walls > 0;
    });

    std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures);
    return failures == 0 ? 0 : 1;
}
