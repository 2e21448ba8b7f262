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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "brickwall/tm.hpp"

namespace brickwall {

/// A total gate function over finite per-port alphabets. Assignments are
/// packed mixed-radix, first port most significant, so `table[packed entries]`
/// is the packed exit assignment.
struct GateFunction {
    std::vector<uint32_t> entry_domains;
    std::vector<uint32_t> exit_domains;
    std::vector<uint64_t> table;

    static uint64_t space(const std::vector<uint32_t> &domains) {
        uint64_t s = 1;
        for (uint32_t d : domains) {
            s *= d;
        }
        return s;
    }
    uint64_t entry_space() const {
        return space(entry_domains);
    }
    uint64_t exit_space() const {
        return space(exit_domains);
    }

    static uint64_t pack(const std::vector<uint32_t> &values, const std::vector<uint32_t> &domains) {
        uint64_t idx = 0;
        for (size_t i = 0; i < domains.size(); i++) {
            idx = idx * domains[i] + values[i];
        }
        return idx;
    }
    static std::vector<uint32_t> unpack(uint64_t idx, const std::vector<uint32_t> &domains) {
        std::vector<uint32_t> values(domains.size());
        for (size_t i = domains.size(); i-- > 0;) {
            values[i] = (uint32_t)(idx % domains[i]);
            idx /= domains[i];
        }
        return values;
    }

    bool is_bijection() const {
        if (entry_space() != exit_space() || table.size() != entry_space()) {
            return false;
        }
        std::vector<bool> seen(table.size(), false);
        for (uint64_t out : table) {
            if (out >= table.size() || seen[out]) {
                return false;
            }
            seen[out] = true;
        }
        return true;
    }
};

/// A syntactic circuit: input/output nodes, gates with entry and exit ports,
/// and wires from producers (input nodes, gate exits) to consumers (gate
/// entries, output nodes). Ids are opaque integers assigned in construction
/// order, so identical build sequences serialize identically.
struct SyntacticCircuit {
    enum Role : uint8_t {
        INPUT,
        OUTPUT,
        ENTRY,
        EXIT,
    };
    struct Gate {
        std::vector<uint32_t> entries;
        std::vector<uint32_t> exits;
        uint32_t function = 0;
    };
    struct Wire {
        uint32_t producer = 0;
        uint32_t consumer = 0;
    };

    std::vector<uint32_t> inputs;
    std::vector<uint32_t> outputs;
    std::vector<Gate> gates;
    std::vector<Wire> wires;
    std::vector<GateFunction> functions;
    std::vector<uint32_t> domain;      // per id: size of the value alphabet
    std::vector<Role> role;            // per id
    std::vector<uint32_t> gate_of_id;  // per id: owning gate, or UINT32_MAX

    uint32_t id_count() const {
        return (uint32_t)domain.size();
    }

    uint32_t new_id(uint32_t value_domain, Role r, uint32_t gate = UINT32_MAX) {
        domain.push_back(value_domain);
        role.push_back(r);
        gate_of_id.push_back(gate);
        return id_count() - 1;
    }
    uint32_t add_input(uint32_t value_domain) {
        uint32_t id = new_id(value_domain, INPUT);
        inputs.push_back(id);
        return id;
    }
    uint32_t add_output(uint32_t value_domain) {
        uint32_t id = new_id(value_domain, OUTPUT);
        outputs.push_back(id);
        return id;
    }
    uint32_t add_function(GateFunction f) {
        functions.push_back(std::move(f));
        return (uint32_t)functions.size() - 1;
    }
    /// Creates a gate with fresh entry and exit ids shaped after its function.
    uint32_t add_gate(uint32_t function_id) {
        const GateFunction &f = functions.at(function_id);
        uint32_t g = (uint32_t)gates.size();
        Gate gate;
        gate.function = function_id;
        for (uint32_t d : f.entry_domains) {
            gate.entries.push_back(new_id(d, ENTRY, g));
        }
        for (uint32_t d : f.exit_domains) {
            gate.exits.push_back(new_id(d, EXIT, g));
        }
        gates.push_back(std::move(gate));
        return g;
    }
    void add_wire(uint32_t producer, uint32_t consumer) {
        wires.push_back({producer, consumer});
    }

    bool is_producer(uint32_t id) const {
        return role[id] == INPUT || role[id] == EXIT;
    }
    bool is_consumer(uint32_t id) const {
        return role[id] == ENTRY || role[id] == OUTPUT;
    }

    /// Direct-prerequisite edges, gate -> set of direct prerequisite gates.
    std::vector<std::vector<uint32_t>> direct_prerequisites() const {
        std::vector<std::vector<uint32_t>> prereq(gates.size());
        for (const Wire &w : wires) {
            if (w.producer < id_count() && w.consumer < id_count() && role[w.producer] == EXIT &&
                role[w.consumer] == ENTRY) {
                prereq[gate_of_id[w.consumer]].push_back(gate_of_id[w.producer]);
            }
        }
        return prereq;
    }
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const {
        return violations.empty();
    }
};

/// Checks the structural circuit invariants: wires run producer-to-consumer
/// over matching alphabets, each consumer ends exactly one wire, each producer
/// begins at least one, gate shapes match their functions, and the direct
/// prerequisite relation is acyclic.
inline ValidationReport validate(const SyntacticCircuit &c) {
    ValidationReport report;
    auto complain = [&](const std::string &msg) {
        report.violations.push_back(msg);
    };
    if (c.role.size() != c.domain.size() || c.gate_of_id.size() != c.domain.size()) {
        complain("id tables have inconsistent sizes");
        return report;
    }

    for (uint32_t g = 0; g < c.gates.size(); g++) {
        const auto &gate = c.gates[g];
        if (gate.entries.empty() || gate.exits.empty()) {
            complain("gate " + std::to_string(g) + " has an empty entry or exit set");
        }
        if (gate.function >= c.functions.size()) {
            complain("gate " + std::to_string(g) + " references a missing function");
            continue;
        }
        const GateFunction &f = c.functions[gate.function];
        bool shape_ok = f.entry_domains.size() == gate.entries.size() &&
                        f.exit_domains.size() == gate.exits.size() && f.table.size() == f.entry_space();
        for (size_t i = 0; shape_ok && i < gate.entries.size(); i++) {
            shape_ok = c.domain[gate.entries[i]] == f.entry_domains[i];
        }
        for (size_t i = 0; shape_ok && i < gate.exits.size(); i++) {
            shape_ok = c.domain[gate.exits[i]] == f.exit_domains[i];
        }
        if (!shape_ok) {
            complain("gate " + std::to_string(g) + " does not match its function's shape");
        }
    }

    std::vector<uint32_t> incoming(c.id_count(), 0);
    std::vector<uint32_t> outgoing(c.id_count(), 0);
    for (size_t k = 0; k < c.wires.size(); k++) {
        const auto &w = c.wires[k];
        if (w.producer >= c.id_count() || w.consumer >= c.id_count()) {
            complain("wire " + std::to_string(k) + " references a missing id");
            continue;
        }
        if (!c.is_producer(w.producer)) {
            complain("wire " + std::to_string(k) + " begins at non-producer id " + std::to_string(w.producer));
        }
        if (!c.is_consumer(w.consumer)) {
            complain("wire " + std::to_string(k) + " ends at non-consumer id " + std::to_string(w.consumer));
        }
        if (c.domain[w.producer] != c.domain[w.consumer]) {
            complain("wire " + std::to_string(k) + " connects mismatched alphabets");
        }
        outgoing[w.producer]++;
        incoming[w.consumer]++;
    }
    for (uint32_t id = 0; id < c.id_count(); id++) {
        if (c.is_consumer(id) && incoming[id] != 1) {
            complain("consumer id " + std::to_string(id) + " ends " + std::to_string(incoming[id]) +
                     " wires, expected exactly 1");
        }
        if (c.is_producer(id) && outgoing[id] == 0) {
            complain("producer id " + std::to_string(id) + " begins no wire");
        }
    }

    // Kahn's algorithm over the direct prerequisite relation.
    auto prereq = c.direct_prerequisites();
    std::vector<uint32_t> unmet(c.gates.size(), 0);
    std::vector<std::vector<uint32_t>> dependents(c.gates.size());
    for (uint32_t g = 0; g < prereq.size(); g++) {
        unmet[g] = (uint32_t)prereq[g].size();
        for (uint32_t d : prereq[g]) {
            dependents[d].push_back(g);
        }
    }
    std::vector<uint32_t> ready;
    for (uint32_t g = 0; g < c.gates.size(); g++) {
        if (unmet[g] == 0) {
            ready.push_back(g);
        }
    }
    size_t fired = 0;
    while (!ready.empty()) {
        uint32_t g = ready.back();
        ready.pop_back();
        fired++;
        for (uint32_t d : dependents[g]) {
            if (--unmet[d] == 0) {
                ready.push_back(d);
            }
        }
    }
    if (fired != c.gates.size()) {
        std::string cyclers;
        for (uint32_t g = 0; g < c.gates.size(); g++) {
            if (unmet[g] > 0) {
                cyclers += (cyclers.empty() ? "" : ", ") + std::to_string(g);
            }
        }
        complain("direct prerequisite relation has a cycle through gates {" + cyclers + "}");
    }
    return report;
}

inline void require_valid(const SyntacticCircuit &c) {
    ValidationReport report = validate(c);
    if (!report.ok()) {
        throw std::invalid_argument("invalid circuit: " + report.violations.front());
    }
}

/// An ordered sequence of disjoint gate bouts.
struct Schedule {
    std::vector<std::vector<uint32_t>> bouts;
};

/// The unique eager schedule: bout t fires every gate whose prerequisites all
/// lie in bouts before t.
inline Schedule eager_schedule(const SyntacticCircuit &c) {
    require_valid(c);
    auto prereq = c.direct_prerequisites();
    std::vector<uint32_t> level(c.gates.size(), 0);
    // Gates are created row by row in wall building, but compute levels
    // generically with a worklist to stay correct for any construction order.
    std::vector<uint32_t> unmet(c.gates.size(), 0);
    std::vector<std::vector<uint32_t>> dependents(c.gates.size());
    std::vector<uint32_t> ready;
    for (uint32_t g = 0; g < c.gates.size(); g++) {
        unmet[g] = (uint32_t)prereq[g].size();
        for (uint32_t d : prereq[g]) {
            dependents[d].push_back(g);
        }
        if (unmet[g] == 0) {
            ready.push_back(g);
            level[g] = 1;
        }
    }
    uint32_t max_level = c.gates.empty() ? 0 : 1;
    while (!ready.empty()) {
        uint32_t g = ready.back();
        ready.pop_back();
        for (uint32_t d : dependents[g]) {
            level[d] = std::max(level[d], level[g] + 1);
            if (--unmet[d] == 0) {
                ready.push_back(d);
                max_level = std::max(max_level, level[d]);
            }
        }
    }
    Schedule schedule;
    schedule.bouts.resize(max_level);
    for (uint32_t g = 0; g < c.gates.size(); g++) {
        schedule.bouts[level[g] - 1].push_back(g);
    }
    return schedule;
}

/// Checks the schedule invariants: disjoint bouts covering every gate exactly
/// once, each bout an antichain, and all prerequisites in strictly earlier bouts.
inline bool is_valid_schedule(const SyntacticCircuit &c, const Schedule &schedule) {
    std::vector<uint32_t> bout_of(c.gates.size(), UINT32_MAX);
    for (uint32_t t = 0; t < schedule.bouts.size(); t++) {
        if (schedule.bouts[t].empty()) {
            return false;
        }
        for (uint32_t g : schedule.bouts[t]) {
            if (g >= c.gates.size() || bout_of[g] != UINT32_MAX) {
                return false;
            }
            bout_of[g] = t;
        }
    }
    for (uint32_t g = 0; g < c.gates.size(); g++) {
        if (bout_of[g] == UINT32_MAX) {
            return false;
        }
    }
    auto prereq = c.direct_prerequisites();
    for (uint32_t g = 0; g < c.gates.size(); g++) {
        for (uint32_t d : prereq[g]) {
            if (bout_of[d] >= bout_of[g]) {
                return false;  // also rules out prerequisites inside one bout
            }
        }
    }
    return true;
}

/// Executes the circuit on a total input assignment under the given schedule.
/// All valid schedules compute the same function; callers normally use `run`.
inline std::vector<uint32_t> run_with_schedule(
    const SyntacticCircuit &c, const Schedule &schedule, const std::vector<uint32_t> &input_values) {
    if (input_values.size() != c.inputs.size()) {
        throw std::invalid_argument("expected one value per input node");
    }
    std::vector<uint32_t> value(c.id_count(), 0);
    for (size_t i = 0; i < c.inputs.size(); i++) {
        if (input_values[i] >= c.domain[c.inputs[i]]) {
            throw std::invalid_argument("input value outside the node's alphabet");
        }
        value[c.inputs[i]] = input_values[i];
    }
    std::vector<uint32_t> source(c.id_count(), UINT32_MAX);
    for (const auto &w : c.wires) {
        source[w.consumer] = w.producer;
    }
    for (const auto &bout : schedule.bouts) {
        for (uint32_t g : bout) {
            const auto &gate = c.gates[g];
            const GateFunction &f = c.functions[gate.function];
            std::vector<uint32_t> in(gate.entries.size());
            for (size_t i = 0; i < gate.entries.size(); i++) {
                in[i] = value[source[gate.entries[i]]];
            }
            auto out = GateFunction::unpack(f.table[GateFunction::pack(in, f.entry_domains)], f.exit_domains);
            for (size_t i = 0; i < gate.exits.size(); i++) {
                value[gate.exits[i]] = out[i];
            }
        }
    }
    std::vector<uint32_t> result(c.outputs.size());
    for (size_t i = 0; i < c.outputs.size(); i++) {
        result[i] = value[source[c.outputs[i]]];
    }
    return result;
}

inline std::vector<uint32_t> run(const SyntacticCircuit &c, const std::vector<uint32_t> &input_values) {
    return run_with_schedule(c, eager_schedule(c), input_values);
}

struct ReversibleCircuitReport {
    bool reversible = true;
    std::vector<std::string> witnesses;
};

/// A circuit is reversible when every gate function is a bijection and every
/// producer has exactly one outgoing wire.
inline ReversibleCircuitReport check_reversible_circuit(const SyntacticCircuit &c) {
    require_valid(c);
    ReversibleCircuitReport report;
    std::vector<bool> function_used(c.functions.size(), false);
    for (const auto &gate : c.gates) {
        function_used[gate.function] = true;
    }
    for (uint32_t k = 0; k < c.functions.size(); k++) {
        if (function_used[k] && !c.functions[k].is_bijection()) {
            report.reversible = false;
            report.witnesses.push_back("gate function " + std::to_string(k) + " is not a bijection");
        }
    }
    std::vector<uint32_t> outgoing(c.id_count(), 0);
    for (const auto &w : c.wires) {
        outgoing[w.producer]++;
    }
    for (uint32_t id = 0; id < c.id_count(); id++) {
        if (c.is_producer(id) && outgoing[id] > 1) {
            report.reversible = false;
            report.witnesses.push_back(
                "producer id " + std::to_string(id) + " fans out to " + std::to_string(outgoing[id]) + " wires");
        }
    }
    return report;
}

inline uint32_t bits_for(uint32_t count) {
    uint32_t b = 0;
    while ((1ull << b) < count) {
        b++;
    }
    return b;
}

/// Encodes per-port cell values (state_part * symbol_count + symbol) into
/// bits, state bits first, each group least significant bit first.
inline std::vector<uint32_t> encode_cell_bits(uint32_t value, uint32_t state_parts, uint32_t symbols) {
    uint32_t bs = bits_for(state_parts), bg = bits_for(symbols);
    uint32_t state = value / symbols, symbol = value % symbols;
    std::vector<uint32_t> bits(bs + bg);
    for (uint32_t k = 0; k < bs; k++) {
        bits[k] = (state >> k) & 1;
    }
    for (uint32_t k = 0; k < bg; k++) {
        bits[bs + k] = (symbol >> k) & 1;
    }
    return bits;
}

/// Inverse of encode_cell_bits; returns nothing for codes outside the alphabet.
inline std::optional<uint32_t> decode_cell_bits(
    const std::vector<uint32_t> &bits, size_t offset, uint32_t state_parts, uint32_t symbols) {
    uint32_t bs = bits_for(state_parts), bg = bits_for(symbols);
    uint32_t state = 0, symbol = 0;
    for (uint32_t k = 0; k < bs; k++) {
        state |= bits[offset + k] << k;
    }
    for (uint32_t k = 0; k < bg; k++) {
        symbol |= bits[offset + bs + k] << k;
    }
    if (state >= state_parts || symbol >= symbols) {
        return std::nullopt;
    }
    return state * symbols + symbol;
}

/// Lowers a circuit over the cell-datum alphabet to a circuit over bits.
/// Every port becomes ceil(log2(state_parts)) + ceil(log2(symbols)) bit ports;
/// each gate becomes one multi-bit gate whose table extends the original
/// function by the identity on invalid codes, preserving bijectivity.
inline SyntacticCircuit lower_to_bits(const SyntacticCircuit &c, uint32_t state_parts, uint32_t symbols) {
    require_valid(c);
    uint32_t cell_domain = state_parts * symbols;
    for (uint32_t d : c.domain) {
        if (d != cell_domain) {
            throw std::invalid_argument("lower_to_bits expects every port to carry the cell-datum alphabet");
        }
    }
    uint32_t w = bits_for(state_parts) + bits_for(symbols);

    SyntacticCircuit lowered;
    for (const GateFunction &f : c.functions) {
        GateFunction lf;
        lf.entry_domains.assign(f.entry_domains.size() * w, 2);
        lf.exit_domains.assign(f.exit_domains.size() * w, 2);
        uint64_t space = 1ull << lf.entry_domains.size();
        lf.table.resize(space);
        for (uint64_t idx = 0; idx < space; idx++) {
            auto bits = GateFunction::unpack(idx, lf.entry_domains);
            std::vector<uint32_t> cells(f.entry_domains.size());
            bool valid = true;
            for (size_t port = 0; port < cells.size(); port++) {
                auto cell = decode_cell_bits(bits, port * w, state_parts, symbols);
                if (!cell.has_value()) {
                    valid = false;
                    break;
                }
                cells[port] = *cell;
            }
            if (!valid) {
                lf.table[idx] = idx;  // identity off the valid codes
                continue;
            }
            auto out_cells =
                GateFunction::unpack(f.table[GateFunction::pack(cells, f.entry_domains)], f.exit_domains);
            std::vector<uint32_t> out_bits;
            for (uint32_t cell : out_cells) {
                auto cell_bits = encode_cell_bits(cell, state_parts, symbols);
                out_bits.insert(out_bits.end(), cell_bits.begin(), cell_bits.end());
            }
            lf.table[idx] = GateFunction::pack(out_bits, lf.exit_domains);
        }
        lowered.add_function(std::move(lf));
    }

    // Each original id expands to w bit ids, in the original construction order.
    std::vector<std::vector<uint32_t>> bit_ids(c.id_count());
    std::vector<uint32_t> gates_created;
    for (uint32_t id = 0; id < c.id_count(); id++) {
        switch (c.role[id]) {
            case SyntacticCircuit::INPUT:
                for (uint32_t k = 0; k < w; k++) {
                    bit_ids[id].push_back(lowered.add_input(2));
                }
                break;
            case SyntacticCircuit::OUTPUT:
                for (uint32_t k = 0; k < w; k++) {
                    bit_ids[id].push_back(lowered.add_output(2));
                }
                break;
            case SyntacticCircuit::ENTRY:
            case SyntacticCircuit::EXIT: {
                // Create the owning gate once, when meeting its first port id.
                uint32_t g = c.gate_of_id[id];
                if (std::find(gates_created.begin(), gates_created.end(), g) == gates_created.end()) {
                    uint32_t lg = lowered.add_gate(c.gates[g].function);
                    gates_created.push_back(g);
                    const auto &orig = c.gates[g];
                    const auto &low = lowered.gates[lg];
                    for (size_t port = 0; port < orig.entries.size(); port++) {
                        for (uint32_t k = 0; k < w; k++) {
                            bit_ids[orig.entries[port]].push_back(low.entries[port * w + k]);
                        }
                    }
                    for (size_t port = 0; port < orig.exits.size(); port++) {
                        for (uint32_t k = 0; k < w; k++) {
                            bit_ids[orig.exits[port]].push_back(low.exits[port * w + k]);
                        }
                    }
                }
                break;
            }
        }
    }
    for (const auto &wire : c.wires) {
        for (uint32_t k = 0; k < w; k++) {
            lowered.add_wire(bit_ids[wire.producer][k], bit_ids[wire.consumer][k]);
        }
    }
    return lowered;
}

/// Serializes a circuit as a JSON document with deterministic field order.
inline nlohmann::ordered_json circuit_to_json(const SyntacticCircuit &c) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["domains"] = c.domain;
    doc["inputs"] = c.inputs;
    doc["outputs"] = c.outputs;
    doc["gates"] = nlohmann::ordered_json::array();
    for (const auto &gate : c.gates) {
        nlohmann::ordered_json g;
        g["entries"] = gate.entries;
        g["exits"] = gate.exits;
        g["function"] = gate.function;
        doc["gates"].push_back(std::move(g));
    }
    doc["wires"] = nlohmann::ordered_json::array();
    for (const auto &w : c.wires) {
        doc["wires"].push_back({w.producer, w.consumer});
    }
    doc["functions"] = nlohmann::ordered_json::array();
    for (const auto &f : c.functions) {
        nlohmann::ordered_json fj;
        fj["entry_domains"] = f.entry_domains;
        fj["exit_domains"] = f.exit_domains;
        fj["table"] = f.table;
        doc["functions"].push_back(std::move(fj));
    }
    return doc;
}

inline SyntacticCircuit circuit_from_json(const nlohmann::json &doc) {
    SyntacticCircuit c;
    std::vector<uint32_t> domains = doc.at("domains").get<std::vector<uint32_t>>();
    c.domain = domains;
    c.role.assign(domains.size(), SyntacticCircuit::INPUT);
    c.gate_of_id.assign(domains.size(), UINT32_MAX);
    std::vector<bool> claimed(domains.size(), false);
    auto claim = [&](uint32_t id, SyntacticCircuit::Role role, uint32_t gate) {
        if (id >= domains.size() || claimed[id]) {
            throw std::invalid_argument("circuit JSON assigns id " + std::to_string(id) + " twice or out of range");
        }
        claimed[id] = true;
        c.role[id] = role;
        c.gate_of_id[id] = gate;
    };
    for (uint32_t id : doc.at("inputs").get<std::vector<uint32_t>>()) {
        claim(id, SyntacticCircuit::INPUT, UINT32_MAX);
        c.inputs.push_back(id);
    }
    for (uint32_t id : doc.at("outputs").get<std::vector<uint32_t>>()) {
        claim(id, SyntacticCircuit::OUTPUT, UINT32_MAX);
        c.outputs.push_back(id);
    }
    for (const auto &fj : doc.at("functions")) {
        GateFunction f;
        f.entry_domains = fj.at("entry_domains").get<std::vector<uint32_t>>();
        f.exit_domains = fj.at("exit_domains").get<std::vector<uint32_t>>();
        f.table = fj.at("table").get<std::vector<uint64_t>>();
        c.functions.push_back(std::move(f));
    }
    for (const auto &gj : doc.at("gates")) {
        SyntacticCircuit::Gate gate;
        uint32_t g = (uint32_t)c.gates.size();
        gate.entries = gj.at("entries").get<std::vector<uint32_t>>();
        gate.exits = gj.at("exits").get<std::vector<uint32_t>>();
        gate.function = gj.at("function").get<uint32_t>();
        for (uint32_t id : gate.entries) {
            claim(id, SyntacticCircuit::ENTRY, g);
        }
        for (uint32_t id : gate.exits) {
            claim(id, SyntacticCircuit::EXIT, g);
        }
        c.gates.push_back(std::move(gate));
    }
    for (uint32_t id = 0; id < domains.size(); id++) {
        if (!claimed[id]) {
            throw std::invalid_argument("circuit JSON leaves id " + std::to_string(id) + " without a role");
        }
    }
    for (const auto &wj : doc.at("wires")) {
        c.wires.push_back({wj.at(0).get<uint32_t>(), wj.at(1).get<uint32_t>()});
    }
    return c;
}

}  // namespace brickwall
