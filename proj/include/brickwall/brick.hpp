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
#include <optional>
#include <vector>

#include "brickwall/circuit.hpp"
#include "brickwall/tm.hpp"

namespace brickwall {

// State parts encode Q* plus the unscanned marker as one integer:
//   0            no head
//   1 .. nq      plain state q
//   nq+1 .. 2nq  marked q (successful move, to be unmarked next row)
//   2nq+1 .. 3nq marked q (deferred move, to be completed next row)

inline uint32_t state_part_count(uint32_t num_states) {
    return 3 * num_states + 1;
}
inline uint32_t plain_part(uint32_t q) {
    return 1 + q;
}
inline uint32_t up_part(uint32_t q, uint32_t num_states) {
    return 1 + num_states + q;
}
inline uint32_t down_part(uint32_t q, uint32_t num_states) {
    return 1 + 2 * num_states + q;
}
inline bool is_scanned_part(uint32_t part) {
    return part != 0;
}
inline bool is_plain_part(uint32_t part, uint32_t num_states) {
    return part >= 1 && part <= num_states;
}
inline bool is_up_part(uint32_t part, uint32_t num_states) {
    return part > num_states && part <= 2 * num_states;
}
inline bool is_down_part(uint32_t part, uint32_t num_states) {
    return part > 2 * num_states && part <= 3 * num_states;
}
inline uint32_t base_state(uint32_t part, uint32_t num_states) {
    return (part - 1) % num_states;
}

/// One tape cell at one stage of the computation: a state part and a symbol.
struct CellDatum {
    uint32_t state_part = 0;
    uint32_t symbol = 0;

    auto operator<=>(const CellDatum &) const = default;
};

/// A pair of cell data with at most one scanned cell; the value alphabet of a
/// brick gate.
struct BrickDatum {
    CellDatum left;
    CellDatum right;

    bool one_head() const {
        return is_scanned_part(left.state_part) != is_scanned_part(right.state_part);
    }
    bool no_head() const {
        return !is_scanned_part(left.state_part) && !is_scanned_part(right.state_part);
    }
    BrickDatum swapped() const {
        return {right, left};
    }
    auto operator<=>(const BrickDatum &) const = default;
};

/// Number of valid brick data: (2|Q*|+1) |Γ|².
inline uint32_t brick_datum_count(uint32_t num_states, uint32_t num_symbols) {
    return (6 * num_states + 1) * num_symbols * num_symbols;
}

/// Dense index over valid brick data: no-head first, then one-head with the
/// head on the left, then one-head with the head on the right.
inline uint32_t brick_datum_index(const BrickDatum &x, uint32_t num_states, uint32_t num_symbols) {
    uint32_t g2 = num_symbols * num_symbols;
    uint32_t symbols = x.left.symbol * num_symbols + x.right.symbol;
    if (x.no_head()) {
        return symbols;
    }
    if (is_scanned_part(x.left.state_part)) {
        return g2 + (x.left.state_part - 1) * g2 + symbols;
    }
    return g2 + 3 * num_states * g2 + (x.right.state_part - 1) * g2 + symbols;
}

inline BrickDatum brick_datum_from_index(uint32_t index, uint32_t num_states, uint32_t num_symbols) {
    uint32_t g2 = num_symbols * num_symbols;
    BrickDatum x;
    uint32_t symbols = index % g2;
    x.left.symbol = symbols / num_symbols;
    x.right.symbol = symbols % num_symbols;
    if (index < g2) {
        return x;
    }
    uint32_t head = index / g2 - 1;
    if (head < 3 * num_states) {
        x.left.state_part = head + 1;
    } else {
        x.right.state_part = head - 3 * num_states + 1;
    }
    return x;
}

enum class BrickCase : uint8_t {
    COPY,       // no-head input copied through
    EXECUTE,    // δ applied; the move is marked done or deferred
    UNMARK,     // a completed move's mark removed
    MOVE,       // a deferred move completed and unmarked
    SWAP_UP,    // garbage marked input: cell data interchanged
    SWAP_DOWN,  // garbage marked input: cell data interchanged
};

inline bool is_swap_case(BrickCase c) {
    return c == BrickCase::SWAP_UP || c == BrickCase::SWAP_DOWN;
}

namespace detail {

inline void require_brick_input(const TmSpec &spec, const BrickDatum &x) {
    uint32_t parts = state_part_count(spec.num_states());
    if (x.left.state_part >= parts || x.right.state_part >= parts || x.left.symbol >= spec.num_symbols() ||
        x.right.symbol >= spec.num_symbols()) {
        throw std::invalid_argument("brick datum is out of range for this machine");
    }
    if (is_scanned_part(x.left.state_part) && is_scanned_part(x.right.state_part)) {
        throw std::invalid_argument("brick datum has two scanned cells");
    }
}

/// The brick step for one direction class of the scanned state. `positive`
/// says which class is being applied; callers resolve class membership.
inline BrickDatum brick_f_for_class(
    const TmSpec &spec, bool positive, const BrickDatum &x, BrickCase *tag) {
    uint32_t nq = spec.num_states();
    bool head_left = is_scanned_part(x.left.state_part);
    const CellDatum &scanned = head_left ? x.left : x.right;

    if (is_plain_part(scanned.state_part, nq)) {
        const auto &t = spec.transition(base_state(scanned.state_part, nq), scanned.symbol);
        if (!t.has_value()) {
            throw std::invalid_argument("the brick function needs a total transition function");
        }
        *tag = BrickCase::EXECUTE;
        // `positive` refers to the class of the target state here.
        uint32_t q = t->state, b = t->symbol;
        if (head_left) {
            if (positive) {
                return {{0, b}, {up_part(q, nq), x.right.symbol}};  // moved within the brick
            }
            return {{down_part(q, nq), b}, {0, x.right.symbol}};  // move deferred to the next row
        }
        if (positive) {
            return {{0, x.left.symbol}, {down_part(q, nq), b}};
        }
        return {{up_part(q, nq), x.left.symbol}, {0, b}};
    }

    uint32_t q = base_state(scanned.state_part, nq);
    // Marks are resolved when the head's side agrees with its direction class:
    // a positive head that already moved (or still must move) sits on the left
    // half of its next brick, a negative one on the right half.
    bool side_matches = positive == head_left;
    if (is_up_part(scanned.state_part, nq)) {
        if (side_matches) {
            *tag = BrickCase::UNMARK;
            BrickDatum out = x;
            (head_left ? out.left : out.right).state_part = plain_part(q);
            return out;
        }
        *tag = BrickCase::SWAP_UP;
        return x.swapped();
    }
    // down mark
    if (side_matches) {
        *tag = BrickCase::MOVE;
        if (head_left) {
            return {{0, x.left.symbol}, {plain_part(q), x.right.symbol}};
        }
        return {{plain_part(q), x.left.symbol}, {0, x.right.symbol}};
    }
    *tag = BrickCase::SWAP_DOWN;
    return x.swapped();
}

}  // namespace detail

/// The brick function: the single bijection every brick gate computes.
/// Requires a total, separable machine with its state partition.
inline BrickDatum brick_f(
    const TmSpec &spec, const StatePartition &partition, const BrickDatum &x, BrickCase *tag = nullptr) {
    detail::require_brick_input(spec, x);
    BrickCase local_tag;
    if (tag == nullptr) {
        tag = &local_tag;
    }
    if (x.no_head()) {
        *tag = BrickCase::COPY;
        return x;
    }
    uint32_t nq = spec.num_states();
    const CellDatum &scanned = is_scanned_part(x.left.state_part) ? x.left : x.right;
    uint32_t q = base_state(scanned.state_part, nq);
    if (is_plain_part(scanned.state_part, nq)) {
        const auto &t = spec.transition(q, scanned.symbol);
        if (!t.has_value()) {
            throw std::invalid_argument("the brick function needs a total transition function");
        }
        q = t->state;
    }
    return detail::brick_f_for_class(spec, partition.positive(q), x, tag);
}

struct BrickCollision {
    BrickDatum first_input;
    BrickDatum second_input;
    BrickDatum output;
};

struct BrickBijectivityReport {
    bool bijective = true;
    std::vector<BrickCollision> collisions;
};

/// Exhaustively evaluates the brick function over all brick data and reports
/// collisions. States that δ drives in both directions make the defining
/// equations overlap; every applicable class branch is evaluated, so the
/// collisions that witness a separability violation are found.
inline BrickBijectivityReport check_brick_bijective(const TmSpec &spec) {
    if (!spec.is_total()) {
        throw std::invalid_argument("check_brick_bijective requires a total transition function");
    }
    uint32_t nq = spec.num_states(), ns = spec.num_symbols();
    std::vector<bool> in_pos(nq, false), in_neg(nq, false);
    for (uint32_t key : spec.delta_order) {
        const Transition &t = *spec.delta[key];
        (t.direction == +1 ? in_pos : in_neg)[t.state] = true;
    }
    for (uint32_t q = 0; q < nq; q++) {
        if (!in_pos[q] && !in_neg[q]) {
            in_pos[q] = true;
        }
    }

    auto classes_of = [&](const BrickDatum &x) {
        std::vector<bool> classes;
        const CellDatum &scanned = is_scanned_part(x.left.state_part) ? x.left : x.right;
        uint32_t q = base_state(scanned.state_part, nq);
        if (is_plain_part(scanned.state_part, nq)) {
            q = spec.transition(q, scanned.symbol)->state;
        }
        if (in_pos[q]) {
            classes.push_back(true);
        }
        if (in_neg[q]) {
            classes.push_back(false);
        }
        return classes;
    };

    BrickBijectivityReport report;
    uint32_t count = brick_datum_count(nq, ns);
    std::vector<std::optional<uint32_t>> first_preimage(count);
    for (uint32_t idx = 0; idx < count; idx++) {
        BrickDatum x = brick_datum_from_index(idx, nq, ns);
        std::vector<BrickDatum> outputs;
        if (x.no_head()) {
            outputs.push_back(x);
        } else {
            BrickCase tag;
            for (bool positive : classes_of(x)) {
                BrickDatum out = detail::brick_f_for_class(spec, positive, x, &tag);
                if (std::find(outputs.begin(), outputs.end(), out) == outputs.end()) {
                    outputs.push_back(out);
                }
            }
        }
        if (outputs.size() > 1) {
            report.bijective = false;  // the equations overlap; a pairwise collision also exists
        }
        for (const BrickDatum &out : outputs) {
            uint32_t oidx = brick_datum_index(out, nq, ns);
            if (first_preimage[oidx].has_value() && *first_preimage[oidx] != idx) {
                report.bijective = false;
                report.collisions.push_back({brick_datum_from_index(*first_preimage[oidx], nq, ns), x, out});
            } else {
                first_preimage[oidx] = idx;
            }
        }
    }
    return report;
}

/// A configuration whose state may carry a move mark.
struct ExtConfig {
    uint32_t state_part = 0;  // 1 .. 3|Q|
    uint32_t head = 0;
    std::vector<uint32_t> tape;

    auto operator<=>(const ExtConfig &) const = default;
};

inline std::vector<CellDatum> encode_row(const TmSpec &spec, const Config &c) {
    require_valid_config(spec, c);
    std::vector<CellDatum> row(c.width());
    for (uint32_t j = 0; j < c.width(); j++) {
        row[j] = {j == c.head ? plain_part(c.state) : 0, c.tape[j]};
    }
    return row;
}

inline ExtConfig decode_row(const TmSpec &spec, const std::vector<CellDatum> &row) {
    ExtConfig out;
    uint32_t heads = 0;
    out.tape.resize(row.size());
    for (uint32_t j = 0; j < row.size(); j++) {
        if (row[j].symbol >= spec.num_symbols() || row[j].state_part >= state_part_count(spec.num_states())) {
            throw std::invalid_argument("row holds a cell datum outside the machine's alphabet");
        }
        out.tape[j] = row[j].symbol;
        if (is_scanned_part(row[j].state_part)) {
            heads++;
            out.state_part = row[j].state_part;
            out.head = j;
        }
    }
    if (heads != 1) {
        throw std::invalid_argument("row has " + std::to_string(heads) + " scanned cells, expected exactly 1");
    }
    return out;
}

/// The compiled circuit: N = 2T+2 columns and 2T staggered gate rows on a
/// cylinder, every gate computing the one brick function. The function is
/// materialized as a lookup table over brick-datum indices.
struct BrickWall {
    TmSpec spec;
    StatePartition partition;
    uint32_t steps = 0;  // T
    uint32_t width = 0;  // N = 2T+2
    std::vector<uint32_t> table;
    std::vector<BrickCase> case_tags;

    uint32_t gate_rows() const {
        return 2 * steps;
    }
    uint32_t gates_per_row() const {
        return width / 2;
    }
};

/// Builds the wall for T steps. Requires a total machine with a separable
/// transition function; bijectivity of the gate is a consequence of full
/// reversibility and is checked separately.
inline BrickWall build_wall(const TmSpec &spec, uint32_t steps) {
    if (steps < 1) {
        throw std::invalid_argument("the wall needs at least one step");
    }
    if (!spec.is_total()) {
        throw std::invalid_argument("build_wall requires a total transition function");
    }
    BrickWall wall;
    wall.spec = spec;
    wall.partition = partition_states(spec);
    wall.steps = steps;
    wall.width = 2 * steps + 2;
    uint32_t count = brick_datum_count(spec.num_states(), spec.num_symbols());
    wall.table.resize(count);
    wall.case_tags.resize(count);
    for (uint32_t idx = 0; idx < count; idx++) {
        BrickCase tag;
        BrickDatum out =
            brick_f(spec, wall.partition, brick_datum_from_index(idx, spec.num_states(), spec.num_symbols()), &tag);
        wall.table[idx] = brick_datum_index(out, spec.num_states(), spec.num_symbols());
        wall.case_tags[idx] = tag;
    }
    return wall;
}

/// Applies one gate row in place. Even rows pair columns (0,1), (2,3), ...;
/// odd rows pair (1,2), (3,4), ..., (N-1,0) around the cylinder. Gates fire
/// in column order; they touch disjoint cells, so the order is immaterial.
inline void apply_wall_row(
    const BrickWall &wall, uint32_t row_parity, std::vector<CellDatum> &row, uint32_t *swap_fires = nullptr) {
    uint32_t n = wall.width;
    if (row.size() != n) {
        throw std::invalid_argument("row width does not match the wall");
    }
    uint32_t nq = wall.spec.num_states(), ns = wall.spec.num_symbols();
    for (uint32_t h = row_parity & 1; h < n; h += 2) {
        uint32_t h2 = (h + 1) % n;
        uint32_t idx = brick_datum_index({row[h], row[h2]}, nq, ns);
        if (swap_fires != nullptr && is_swap_case(wall.case_tags[idx])) {
            (*swap_fires)++;
        }
        BrickDatum out = brick_datum_from_index(wall.table[idx], nq, ns);
        row[h] = out.left;
        row[h2] = out.right;
    }
}

inline void require_wall_input(const BrickWall &wall, const Config &c) {
    require_valid_config(wall.spec, c);
    if (c.width() != wall.width) {
        throw std::invalid_argument("initial configuration width must be N = 2T+2");
    }
    if (c.head != 0) {
        throw std::invalid_argument("the initial head cell must be 0");
    }
    if (c.tape[wall.steps + 1] != wall.spec.blank) {
        throw std::invalid_argument("the tape must be blank outside [-T, T] (cell T+1)");
    }
}

/// Runs all 2T rows on an encoded configuration and decodes the result.
/// A garbage (cell-swapping) gate case firing, or a non-plain final state,
/// indicates a broken wall and is surfaced as an error.
inline Config simulate_wall(const BrickWall &wall, const Config &c0) {
    require_wall_input(wall, c0);
    std::vector<CellDatum> row = encode_row(wall.spec, c0);
    for (uint32_t v = 0; v < wall.gate_rows(); v++) {
        uint32_t swap_fires = 0;
        apply_wall_row(wall, v & 1, row, &swap_fires);
        if (swap_fires != 0) {
            throw std::logic_error("a garbage brick case fired on a legal simulation input");
        }
    }
    ExtConfig ext = decode_row(wall.spec, row);
    if (!is_plain_part(ext.state_part, wall.spec.num_states())) {
        throw std::logic_error("wall output carries a move mark; simulation is broken");
    }
    return {base_state(ext.state_part, wall.spec.num_states()), ext.head, std::move(ext.tape)};
}

inline Config simulate_wall(const TmSpec &spec, uint32_t steps, const Config &c0) {
    return simulate_wall(build_wall(spec, steps), c0);
}

/// As simulate_wall, but records the configuration after every two-row step.
inline std::vector<Config> simulate_wall_trace(const BrickWall &wall, const Config &c0) {
    require_wall_input(wall, c0);
    std::vector<Config> trace;
    std::vector<CellDatum> row = encode_row(wall.spec, c0);
    for (uint32_t v = 0; v < wall.gate_rows(); v++) {
        uint32_t swap_fires = 0;
        apply_wall_row(wall, v & 1, row, &swap_fires);
        if (swap_fires != 0) {
            throw std::logic_error("a garbage brick case fired on a legal simulation input");
        }
        if (v % 2 == 1) {
            ExtConfig ext = decode_row(wall.spec, row);
            if (!is_plain_part(ext.state_part, wall.spec.num_states())) {
                throw std::logic_error("wall output carries a move mark; simulation is broken");
            }
            trace.push_back({base_state(ext.state_part, wall.spec.num_states()), ext.head, ext.tape});
        }
    }
    return trace;
}

/// Exports the wall as a syntactic circuit over packed cell values
/// (state_part * |Γ| + symbol). The shared gate table extends the brick
/// function by the identity on two-head pairs, which keeps it total and
/// bijective without ever firing on legal data.
inline SyntacticCircuit wall_to_circuit(const BrickWall &wall) {
    uint32_t nq = wall.spec.num_states(), ns = wall.spec.num_symbols();
    uint32_t cell_domain = state_part_count(nq) * ns;
    auto pack = [&](const CellDatum &d) {
        return d.state_part * ns + d.symbol;
    };
    auto unpack = [&](uint32_t v) {
        return CellDatum{v / ns, v % ns};
    };

    GateFunction f;
    f.entry_domains = {cell_domain, cell_domain};
    f.exit_domains = {cell_domain, cell_domain};
    f.table.resize((uint64_t)cell_domain * cell_domain);
    for (uint32_t v1 = 0; v1 < cell_domain; v1++) {
        for (uint32_t v2 = 0; v2 < cell_domain; v2++) {
            uint64_t in = (uint64_t)v1 * cell_domain + v2;
            BrickDatum x{unpack(v1), unpack(v2)};
            if (is_scanned_part(x.left.state_part) && is_scanned_part(x.right.state_part)) {
                f.table[in] = in;
                continue;
            }
            BrickDatum out = brick_datum_from_index(wall.table[brick_datum_index(x, nq, ns)], nq, ns);
            f.table[in] = (uint64_t)pack(out.left) * cell_domain + pack(out.right);
        }
    }

    SyntacticCircuit c;
    uint32_t fn = c.add_function(std::move(f));
    std::vector<uint32_t> producer(wall.width);
    for (uint32_t h = 0; h < wall.width; h++) {
        producer[h] = c.add_input(cell_domain);
    }
    for (uint32_t v = 0; v < wall.gate_rows(); v++) {
        for (uint32_t h = v & 1; h < wall.width; h += 2) {
            uint32_t h2 = (h + 1) % wall.width;
            uint32_t g = c.add_gate(fn);
            c.add_wire(producer[h], c.gates[g].entries[0]);
            c.add_wire(producer[h2], c.gates[g].entries[1]);
            producer[h] = c.gates[g].exits[0];
            producer[h2] = c.gates[g].exits[1];
        }
    }
    for (uint32_t h = 0; h < wall.width; h++) {
        c.add_wire(producer[h], c.add_output(cell_domain));
    }
    return c;
}

struct WallHaltRun {
    Config config;                     // over the base machine's alphabet
    std::optional<uint32_t> halt_step;  // set when the base machine halted
};

/// Simulates T steps of a (possibly partial) reversible machine through the
/// halting extension: builds the totalized extended machine's wall, runs it,
/// and undoes the priming march if the machine halted along the way.
inline WallHaltRun simulate_with_halting(const TmSpec &spec, uint32_t steps, const Config &c0) {
    if (!check_reversible(spec).reversible()) {
        throw std::invalid_argument("simulate_with_halting requires a reversible machine");
    }
    require_valid_config(spec, c0);
    HaltingExtension ext = halting_extension(spec);
    BrickWall wall = build_wall(totalize(ext.machine), steps);
    Config final_config = simulate_wall(wall, c0);
    if (final_config.state < ext.base_states) {
        for (uint32_t s : final_config.tape) {
            if (s >= ext.base_symbols) {
                throw std::logic_error("primed tape symbols with an unprimed state; simulation is broken");
            }
        }
        return {std::move(final_config), std::nullopt};
    }
    HaltRecovery recovered = recover_halting_config(ext, final_config);
    return {std::move(recovered.config), recovered.halt_step};
}

}  // namespace brickwall
