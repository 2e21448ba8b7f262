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

#include "brickwall/circuit.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"

using namespace brickwall;
using brickwall::testing::random_schedule;

namespace {

GateFunction identity_function(std::vector<uint32_t> domains) {
    GateFunction f;
    f.entry_domains = domains;
    f.exit_domains = domains;
    f.table.resize(f.entry_space());
    for (uint64_t i = 0; i < f.table.size(); i++) {
        f.table[i] = i;
    }
    return f;
}

GateFunction swap_function(uint32_t domain) {
    GateFunction f;
    f.entry_domains = {domain, domain};
    f.exit_domains = {domain, domain};
    f.table.resize(f.entry_space());
    for (uint32_t a = 0; a < domain; a++) {
        for (uint32_t b = 0; b < domain; b++) {
            f.table[a * domain + b] = b * domain + a;
        }
    }
    return f;
}

GateFunction random_function(std::vector<uint32_t> domains, bool bijective, std::mt19937_64 &rng) {
    GateFunction f;
    f.entry_domains = domains;
    f.exit_domains = domains;
    f.table.resize(f.entry_space());
    for (uint64_t i = 0; i < f.table.size(); i++) {
        f.table[i] = i;
    }
    std::shuffle(f.table.begin(), f.table.end(), rng);
    if (!bijective && f.table.size() >= 2) {
        f.table[0] = f.table[1];
    }
    return f;
}

// A layered "lane" circuit: k parallel lanes, each layer applies gates to
// random disjoint lane groups. Wiring is one wire per producer, so the
// circuit is reversible whenever the gate tables are bijections.
SyntacticCircuit random_lane_circuit(
    uint32_t lanes, uint32_t layers, uint32_t domain, bool bijective, std::mt19937_64 &rng) {
    SyntacticCircuit c;
    std::vector<uint32_t> live;
    for (uint32_t i = 0; i < lanes; i++) {
        live.push_back(c.add_input(domain));
    }
    for (uint32_t layer = 0; layer < layers; layer++) {
        std::vector<uint32_t> order(lanes);
        for (uint32_t i = 0; i < lanes; i++) {
            order[i] = i;
        }
        std::shuffle(order.begin(), order.end(), rng);
        size_t next = 0;
        while (next < order.size()) {
            uint32_t arity = 1 + (uint32_t)(rng() % 2);
            arity = (uint32_t)std::min<size_t>(arity, order.size() - next);
            std::vector<uint32_t> group(order.begin() + next, order.begin() + next + arity);
            next += arity;
            uint32_t fn = c.add_function(
                random_function(std::vector<uint32_t>(arity, domain), bijective, rng));
            uint32_t g = c.add_gate(fn);
            for (uint32_t i = 0; i < arity; i++) {
                c.add_wire(live[group[i]], c.gates[g].entries[i]);
                live[group[i]] = c.gates[g].exits[i];
            }
        }
    }
    for (uint32_t i = 0; i < lanes; i++) {
        uint32_t out = c.add_output(domain);
        c.add_wire(live[i], out);
    }
    return c;
}

}  // namespace

TEST_CASE("a single wired-through gate validates", "[circuit][validate]") {
    SyntacticCircuit c;
    uint32_t in = c.add_input(2);
    uint32_t g = c.add_gate(c.add_function(identity_function({2})));
    uint32_t out = c.add_output(2);
    c.add_wire(in, c.gates[g].entries[0]);
    c.add_wire(c.gates[g].exits[0], out);
    REQUIRE(validate(c).ok());
}

TEST_CASE("a two-gate cycle is reported as an acyclicity violation", "[circuit][validate]") {
    SyntacticCircuit c;
    uint32_t fn = c.add_function(identity_function({2}));
    uint32_t a = c.add_gate(fn);
    uint32_t b = c.add_gate(fn);
    c.add_wire(c.gates[a].exits[0], c.gates[b].entries[0]);
    c.add_wire(c.gates[b].exits[0], c.gates[a].entries[0]);
    auto report = validate(c);
    REQUIRE(!report.ok());
    bool mentions_cycle = false;
    for (const auto &v : report.violations) {
        mentions_cycle |= v.find("cycle") != std::string::npos;
    }
    REQUIRE(mentions_cycle);
}

TEST_CASE("dangling consumers and producers are violations", "[circuit][validate]") {
    SyntacticCircuit c;
    uint32_t in = c.add_input(2);
    uint32_t g = c.add_gate(c.add_function(identity_function({2})));
    c.add_output(2);  // never wired: consumer with 0 wires
    c.add_wire(in, c.gates[g].entries[0]);
    // gate exit never wired: producer with 0 wires
    auto report = validate(c);
    REQUIRE(report.violations.size() == 2);
}

TEST_CASE("eager schedule of a chain is one gate per bout", "[circuit][schedule]") {
    SyntacticCircuit c;
    uint32_t fn = c.add_function(identity_function({2}));
    uint32_t in = c.add_input(2);
    uint32_t prev = in;
    for (int k = 0; k < 3; k++) {
        uint32_t g = c.add_gate(fn);
        c.add_wire(prev, c.gates[g].entries[0]);
        prev = c.gates[g].exits[0];
    }
    c.add_wire(prev, c.add_output(2));
    Schedule s = eager_schedule(c);
    REQUIRE(s.bouts.size() == 3);
    for (const auto &bout : s.bouts) {
        REQUIRE(bout.size() == 1);
    }
    REQUIRE(is_valid_schedule(c, s));
}

TEST_CASE("independent gates share one bout", "[circuit][schedule]") {
    SyntacticCircuit c;
    uint32_t fn = c.add_function(identity_function({2}));
    for (int k = 0; k < 2; k++) {
        uint32_t in = c.add_input(2);
        uint32_t g = c.add_gate(fn);
        uint32_t out = c.add_output(2);
        c.add_wire(in, c.gates[g].entries[0]);
        c.add_wire(c.gates[g].exits[0], out);
    }
    Schedule s = eager_schedule(c);
    REQUIRE(s.bouts.size() == 1);
    REQUIRE(s.bouts[0].size() == 2);
}

TEST_CASE("eager schedules satisfy all schedule invariants", "[circuit][schedule][oracle]") {
    std::mt19937_64 rng(0x5eed0101);
    for (int trial = 0; trial < 25; trial++) {
        SyntacticCircuit c = random_lane_circuit(4, 3, 2, true, rng);
        Schedule s = eager_schedule(c);
        REQUIRE(is_valid_schedule(c, s));

        // Independent oracle: reachability over direct prerequisites.
        auto prereq = c.direct_prerequisites();
        size_t n = c.gates.size();
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (uint32_t g = 0; g < n; g++) {
            for (uint32_t d : prereq[g]) {
                reach[d][g] = true;
            }
        }
        for (uint32_t k = 0; k < n; k++) {
            for (uint32_t i = 0; i < n; i++) {
                for (uint32_t j = 0; j < n; j++) {
                    reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
                }
            }
        }
        std::vector<uint32_t> bout_of(n);
        size_t seen = 0;
        for (uint32_t t = 0; t < s.bouts.size(); t++) {
            for (uint32_t g : s.bouts[t]) {
                bout_of[g] = t;
                seen++;
            }
        }
        REQUIRE(seen == n);  // every gate exactly once (bouts are disjoint by construction check below)
        for (uint32_t i = 0; i < n; i++) {
            for (uint32_t j = 0; j < n; j++) {
                if (reach[i][j]) {
                    REQUIRE(bout_of[i] < bout_of[j]);  // prerequisites strictly earlier; bouts are antichains
                }
            }
        }
        // Eagerness: every gate fires as soon as its prerequisites are done.
        for (uint32_t g = 0; g < n; g++) {
            uint32_t earliest = 0;
            for (uint32_t d : prereq[g]) {
                earliest = std::max(earliest, bout_of[d] + 1);
            }
            REQUIRE(bout_of[g] == earliest);
        }
    }
}

TEST_CASE("run through an identity gate returns the input", "[circuit][run]") {
    SyntacticCircuit c;
    uint32_t in = c.add_input(5);
    uint32_t g = c.add_gate(c.add_function(identity_function({5})));
    uint32_t out = c.add_output(5);
    c.add_wire(in, c.gates[g].entries[0]);
    c.add_wire(c.gates[g].exits[0], out);
    for (uint32_t v = 0; v < 5; v++) {
        REQUIRE(run(c, {v}) == std::vector<uint32_t>{v});
    }
    REQUIRE_THROWS_AS(run(c, {5}), std::invalid_argument);
    REQUIRE_THROWS_AS(run(c, {0, 0}), std::invalid_argument);
}

TEST_CASE("a two-gate swap chain composes the two tables", "[circuit][run]") {
    SyntacticCircuit c;
    uint32_t fn = c.add_function(swap_function(3));
    uint32_t in0 = c.add_input(3), in1 = c.add_input(3);
    uint32_t g0 = c.add_gate(fn), g1 = c.add_gate(fn);
    uint32_t out0 = c.add_output(3), out1 = c.add_output(3);
    c.add_wire(in0, c.gates[g0].entries[0]);
    c.add_wire(in1, c.gates[g0].entries[1]);
    c.add_wire(c.gates[g0].exits[0], c.gates[g1].entries[0]);
    c.add_wire(c.gates[g0].exits[1], c.gates[g1].entries[1]);
    c.add_wire(c.gates[g1].exits[0], out0);
    c.add_wire(c.gates[g1].exits[1], out1);
    // swap then swap is the identity
    for (uint32_t a = 0; a < 3; a++) {
        for (uint32_t b = 0; b < 3; b++) {
            REQUIRE(run(c, {a, b}) == std::vector<uint32_t>{a, b});
        }
    }
}

TEST_CASE("fan-out duplicates a value and blocks reversibility", "[circuit][run][reversible]") {
    SyntacticCircuit c;
    uint32_t in = c.add_input(2);
    uint32_t fn = c.add_function(identity_function({2}));
    uint32_t g0 = c.add_gate(fn), g1 = c.add_gate(fn);
    uint32_t out0 = c.add_output(2), out1 = c.add_output(2);
    c.add_wire(in, c.gates[g0].entries[0]);
    c.add_wire(in, c.gates[g1].entries[0]);
    c.add_wire(c.gates[g0].exits[0], out0);
    c.add_wire(c.gates[g1].exits[0], out1);
    REQUIRE(validate(c).ok());
    REQUIRE(run(c, {1}) == std::vector<uint32_t>{1, 1});
    auto report = check_reversible_circuit(c);
    REQUIRE(!report.reversible);
    REQUIRE_THAT(report.witnesses.at(0), Catch::Matchers::ContainsSubstring("fans out"));
}

TEST_CASE("a non-bijective gate table blocks reversibility", "[circuit][reversible]") {
    SyntacticCircuit c;
    GateFunction f;
    f.entry_domains = {2};
    f.exit_domains = {2};
    f.table = {0, 0};  // two inputs, one output value
    uint32_t in = c.add_input(2);
    uint32_t g = c.add_gate(c.add_function(std::move(f)));
    uint32_t out = c.add_output(2);
    c.add_wire(in, c.gates[g].entries[0]);
    c.add_wire(c.gates[g].exits[0], out);
    auto report = check_reversible_circuit(c);
    REQUIRE(!report.reversible);
    REQUIRE_THAT(report.witnesses.at(0), Catch::Matchers::ContainsSubstring("not a bijection"));
}

TEST_CASE("run is invariant under any valid schedule", "[circuit][schedule][oracle]") {
    std::mt19937_64 rng(0x5eed0102);
    for (int trial = 0; trial < 20; trial++) {
        SyntacticCircuit c = random_lane_circuit(5, 3, 2, trial % 2 == 0, rng);
        Schedule eager = eager_schedule(c);
        std::vector<uint32_t> input(c.inputs.size());
        for (auto &v : input) {
            v = (uint32_t)(rng() % 2);
        }
        auto expected = run_with_schedule(c, eager, input);
        for (int s = 0; s < 5; s++) {
            Schedule candidate = random_schedule(c, rng);
            REQUIRE(is_valid_schedule(c, candidate));
            REQUIRE(run_with_schedule(c, candidate, input) == expected);
        }
    }
}

TEST_CASE("reversible circuits compute injective functions", "[circuit][reversible][oracle]") {
    std::mt19937_64 rng(0x5eed0103);
    for (int trial = 0; trial < 10; trial++) {
        SyntacticCircuit c = random_lane_circuit(4, 3, 2, true, rng);  // 4 input bits
        REQUIRE(check_reversible_circuit(c).reversible);
        std::set<std::vector<uint32_t>> images;
        for (uint32_t x = 0; x < 16; x++) {
            std::vector<uint32_t> input(4);
            for (uint32_t i = 0; i < 4; i++) {
                input[i] = (x >> i) & 1;
            }
            REQUIRE(images.insert(run(c, input)).second);
        }
    }
}

TEST_CASE("cell bit coding is 2 + 1 bits for three state parts and two symbols", "[circuit][lower]") {
    REQUIRE(bits_for(4) == 2);   // |Q*| = 3 plus the no-head value
    REQUIRE(bits_for(2) == 1);
    REQUIRE(encode_cell_bits(0, 4, 2).size() == 3);
    for (uint32_t v = 0; v < 8; v++) {
        auto bits = encode_cell_bits(v, 4, 2);
        auto back = decode_cell_bits(bits, 0, 4, 2);
        REQUIRE(back.has_value());
        REQUIRE(*back == v);
    }
}

TEST_CASE("lower_to_bits keeps invalid codes fixed and valid codes faithful", "[circuit][lower][oracle]") {
    std::mt19937_64 rng(0x5eed0104);
    // A 2-gate chain over a 6-value cell alphabet: 3 state parts x 2 symbols,
    // lowered into 2 + 1 = 3 bits per port.
    uint32_t state_parts = 3, symbols = 2, cell = state_parts * symbols;
    SyntacticCircuit c;
    uint32_t fn0 = c.add_function(random_function({cell, cell}, true, rng));
    uint32_t fn1 = c.add_function(random_function({cell, cell}, true, rng));
    uint32_t in0 = c.add_input(cell), in1 = c.add_input(cell);
    uint32_t g0 = c.add_gate(fn0), g1 = c.add_gate(fn1);
    uint32_t out0 = c.add_output(cell), out1 = c.add_output(cell);
    c.add_wire(in0, c.gates[g0].entries[0]);
    c.add_wire(in1, c.gates[g0].entries[1]);
    c.add_wire(c.gates[g0].exits[0], c.gates[g1].entries[0]);
    c.add_wire(c.gates[g0].exits[1], c.gates[g1].entries[1]);
    c.add_wire(c.gates[g1].exits[0], out0);
    c.add_wire(c.gates[g1].exits[1], out1);

    SyntacticCircuit lowered = lower_to_bits(c, state_parts, symbols);
    REQUIRE(validate(lowered).ok());
    REQUIRE(check_reversible_circuit(lowered).reversible);
    uint32_t w = bits_for(state_parts) + bits_for(symbols);
    REQUIRE(lowered.inputs.size() == 2 * w);
    REQUIRE(lowered.gates[0].entries.size() == 2 * w);

    // Invalid codes are fixed points of the lowered table.
    const GateFunction &lf = lowered.functions[0];
    bool saw_invalid = false;
    for (uint64_t idx = 0; idx < lf.table.size(); idx++) {
        auto bits = GateFunction::unpack(idx, lf.entry_domains);
        bool valid = decode_cell_bits(bits, 0, state_parts, symbols).has_value() &&
                     decode_cell_bits(bits, w, state_parts, symbols).has_value();
        if (!valid) {
            saw_invalid = true;
            REQUIRE(lf.table[idx] == idx);
        }
    }
    REQUIRE(saw_invalid);

    // decode(run(lowered)) equals run(original) on random valid codes.
    for (int trial = 0; trial < 100; trial++) {
        std::vector<uint32_t> cells = {(uint32_t)(rng() % cell), (uint32_t)(rng() % cell)};
        auto expected = run(c, cells);
        std::vector<uint32_t> bits;
        for (uint32_t v : cells) {
            auto b = encode_cell_bits(v, state_parts, symbols);
            bits.insert(bits.end(), b.begin(), b.end());
        }
        auto out_bits = run(lowered, bits);
        std::vector<uint32_t> decoded;
        for (size_t port = 0; port < 2; port++) {
            auto v = decode_cell_bits(out_bits, port * w, state_parts, symbols);
            REQUIRE(v.has_value());
            decoded.push_back(*v);
        }
        REQUIRE(decoded == expected);
    }
}

TEST_CASE("circuit JSON round-trips structure and behavior", "[circuit][json]") {
    std::mt19937_64 rng(0x5eed0105);
    SyntacticCircuit c = random_lane_circuit(3, 2, 3, true, rng);
    auto doc = circuit_to_json(c);
    std::string text = doc.dump();
    SyntacticCircuit back = circuit_from_json(nlohmann::json::parse(text));
    REQUIRE(validate(back).ok());
    REQUIRE(back.inputs == c.inputs);
    REQUIRE(back.outputs == c.outputs);
    REQUIRE(back.domain == c.domain);
    REQUIRE(back.wires.size() == c.wires.size());
    REQUIRE(circuit_to_json(back).dump() == text);
    for (int trial = 0; trial < 20; trial++) {
        std::vector<uint32_t> input(c.inputs.size());
        for (auto &v : input) {
            v = (uint32_t)(rng() % 3);
        }
        REQUIRE(run(back, input) == run(c, input));
    }
}
