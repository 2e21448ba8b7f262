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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brickwall/text_format.hpp"

namespace brickwall {

/// A single transition target: next state, written symbol, head direction (-1 or +1).
struct Transition {
    uint32_t state = 0;
    uint32_t symbol = 0;
    int direction = +1;

    auto operator<=>(const Transition &) const = default;
};

/// A deterministic Turing machine with a partial transition function.
///
/// States and tape symbols are kept as indices into the declaration-ordered
/// name tables; all operations below work on indices. The head always moves.
struct TmSpec {
    std::vector<std::string> state_names;
    std::vector<std::string> symbol_names;
    uint32_t blank = 0;
    uint32_t start = 0;
    std::vector<std::optional<Transition>> delta;  // indexed by state * num_symbols() + symbol
    std::vector<uint32_t> delta_order;             // δ keys in declaration order

    uint32_t num_states() const {
        return (uint32_t)state_names.size();
    }
    uint32_t num_symbols() const {
        return (uint32_t)symbol_names.size();
    }
    uint32_t delta_key(uint32_t state, uint32_t symbol) const {
        return state * num_symbols() + symbol;
    }
    const std::optional<Transition> &transition(uint32_t state, uint32_t symbol) const {
        return delta[delta_key(state, symbol)];
    }
    bool is_total() const {
        return delta_order.size() == delta.size();
    }

    std::optional<uint32_t> find_state(const std::string &name) const {
        for (uint32_t q = 0; q < state_names.size(); q++) {
            if (state_names[q] == name) {
                return q;
            }
        }
        return std::nullopt;
    }
    std::optional<uint32_t> find_symbol(const std::string &name) const {
        for (uint32_t a = 0; a < symbol_names.size(); a++) {
            if (symbol_names[a] == name) {
                return a;
            }
        }
        return std::nullopt;
    }

    void add_transition(uint32_t state, uint32_t symbol, Transition t) {
        if (state >= num_states() || symbol >= num_symbols() || t.state >= num_states() ||
            t.symbol >= num_symbols() || (t.direction != -1 && t.direction != +1)) {
            throw std::invalid_argument("transition references an undeclared state or symbol");
        }
        uint32_t key = delta_key(state, symbol);
        if (delta[key].has_value()) {
            throw std::invalid_argument(
                "duplicate transition for (" + state_names[state] + ", " + symbol_names[symbol] + ")");
        }
        delta[key] = t;
        delta_order.push_back(key);
    }
};

/// Builds an empty-δ machine, checking that the declared names are sane:
/// nonempty, unique, states and symbols disjoint, blank and start declared.
inline TmSpec make_tm_spec(
    std::vector<std::string> states,
    std::vector<std::string> symbols,
    const std::string &blank,
    const std::string &start) {
    TmSpec spec;
    spec.state_names = std::move(states);
    spec.symbol_names = std::move(symbols);
    if (spec.state_names.empty() || spec.symbol_names.empty()) {
        throw std::invalid_argument("a machine needs at least one state and one symbol");
    }
    std::set<std::string> seen;
    for (const auto &n : spec.state_names) {
        if (!seen.insert(n).second) {
            throw std::invalid_argument("duplicate name: " + n);
        }
    }
    for (const auto &n : spec.symbol_names) {
        if (!seen.insert(n).second) {
            throw std::invalid_argument("state and symbol names must be disjoint; duplicate: " + n);
        }
    }
    auto b = spec.find_symbol(blank);
    auto s = spec.find_state(start);
    if (!b.has_value()) {
        throw std::invalid_argument("blank symbol '" + blank + "' is not declared");
    }
    if (!s.has_value()) {
        throw std::invalid_argument("start state '" + start + "' is not declared");
    }
    spec.blank = *b;
    spec.start = *s;
    spec.delta.assign((size_t)spec.num_states() * spec.num_symbols(), std::nullopt);
    return spec;
}

/// A configuration of the looped-tape machine: state, head cell (mod N), tape contents.
struct Config {
    uint32_t state = 0;
    uint32_t head = 0;
    std::vector<uint32_t> tape;

    uint32_t width() const {
        return (uint32_t)tape.size();
    }
    auto operator<=>(const Config &) const = default;
};

inline void require_valid_config(const TmSpec &spec, const Config &c) {
    if (c.state >= spec.num_states() || c.tape.empty() || c.head >= c.width()) {
        throw std::invalid_argument("configuration is out of range for this machine");
    }
    for (uint32_t s : c.tape) {
        if (s >= spec.num_symbols()) {
            throw std::invalid_argument("configuration tape holds an undeclared symbol");
        }
    }
}

/// One machine step. Returns nothing when δ is undefined at the scanned pair (the machine halts).
inline std::optional<Config> successor(const TmSpec &spec, const Config &c) {
    require_valid_config(spec, c);
    const auto &t = spec.transition(c.state, c.tape[c.head]);
    if (!t.has_value()) {
        return std::nullopt;
    }
    Config next = c;
    next.state = t->state;
    next.tape[c.head] = t->symbol;
    uint32_t n = c.width();
    next.head = (c.head + (t->direction == +1 ? 1u : n - 1u)) % n;
    return next;
}

/// Iterates `successor` for up to `steps` steps; stops early on a halt.
/// Returns the final configuration and the halt step, if any.
inline std::pair<Config, std::optional<uint32_t>> iterate_successor(
    const TmSpec &spec, Config c, uint32_t steps) {
    for (uint32_t k = 0; k < steps; k++) {
        auto next = successor(spec, c);
        if (!next.has_value()) {
            return {c, k};
        }
        c = std::move(*next);
    }
    return {c, std::nullopt};
}

/// One δ entry, as evidence in a reversibility report.
struct DeltaEntry {
    uint32_t from_state = 0;
    uint32_t scanned = 0;
    Transition to;

    auto operator<=>(const DeltaEntry &) const = default;
};

struct ReversibilityWitness {
    enum Kind : uint8_t {
        SEPARABILITY,  // the two entries drive the same state in opposite directions
        INJECTIVITY,   // the two entries write the same (state, symbol) pair
    };
    Kind kind;
    DeltaEntry first;
    DeltaEntry second;
};

struct ReversibilityReport {
    bool separable = true;
    bool injective = true;
    std::vector<ReversibilityWitness> witnesses;

    bool reversible() const {
        return separable && injective;
    }
};

/// Checks the two δ-properties characterizing reversibility:
/// separability (no state is a target in both directions) and injectivity
/// (each written (state, symbol) pair has at most one source).
inline ReversibilityReport check_reversible(const TmSpec &spec) {
    ReversibilityReport report;
    std::vector<std::optional<DeltaEntry>> first_neg(spec.num_states());
    std::vector<std::optional<DeltaEntry>> first_pos(spec.num_states());
    std::map<std::pair<uint32_t, uint32_t>, DeltaEntry> first_writer;
    for (uint32_t key : spec.delta_order) {
        DeltaEntry entry{key / spec.num_symbols(), key % spec.num_symbols(), *spec.delta[key]};
        auto &same_dir = entry.to.direction == -1 ? first_neg : first_pos;
        auto &other_dir = entry.to.direction == -1 ? first_pos : first_neg;
        if (other_dir[entry.to.state].has_value()) {
            report.separable = false;
            report.witnesses.push_back({ReversibilityWitness::SEPARABILITY, *other_dir[entry.to.state], entry});
        }
        if (!same_dir[entry.to.state].has_value()) {
            same_dir[entry.to.state] = entry;
        }
        auto [it, inserted] = first_writer.insert({{entry.to.state, entry.to.symbol}, entry});
        if (!inserted) {
            report.injective = false;
            report.witnesses.push_back({ReversibilityWitness::INJECTIVITY, it->second, entry});
        }
    }
    return report;
}

/// The direction class of every state: -1 or +1 per state index.
struct StatePartition {
    std::vector<int> direction;

    bool positive(uint32_t state) const {
        return direction[state] == +1;
    }
    bool negative(uint32_t state) const {
        return direction[state] == -1;
    }
};

/// Assigns each state its δ-target direction; states that are never a target
/// go to the positive class, in declaration order.
inline StatePartition partition_states(const TmSpec &spec) {
    if (!check_reversible(spec).separable) {
        throw std::invalid_argument("partition_states requires a separable transition function");
    }
    StatePartition partition;
    partition.direction.assign(spec.num_states(), 0);
    for (uint32_t key : spec.delta_order) {
        const Transition &t = *spec.delta[key];
        partition.direction[t.state] = t.direction;
    }
    for (int &d : partition.direction) {
        if (d == 0) {
            d = +1;
        }
    }
    return partition;
}

/// Extends δ to a total function whose pair map (p,a) -> (q,b) is a bijection.
/// Unmatched domain pairs are matched to unmatched range pairs in lexicographic
/// order over declaration order; new entries move toward their target's class.
inline TmSpec totalize(const TmSpec &spec) {
    if (!check_reversible(spec).reversible()) {
        throw std::invalid_argument("totalize requires a reversible transition function");
    }
    StatePartition partition = partition_states(spec);
    std::vector<bool> range_taken(spec.delta.size(), false);
    for (uint32_t key : spec.delta_order) {
        const Transition &t = *spec.delta[key];
        range_taken[spec.delta_key(t.state, t.symbol)] = true;
    }
    std::vector<uint32_t> free_range;
    for (uint32_t key = 0; key < range_taken.size(); key++) {
        if (!range_taken[key]) {
            free_range.push_back(key);
        }
    }
    TmSpec total = spec;
    size_t next_free = 0;
    for (uint32_t key = 0; key < total.delta.size(); key++) {
        if (total.delta[key].has_value()) {
            continue;
        }
        uint32_t target = free_range[next_free++];
        uint32_t q = target / total.num_symbols();
        uint32_t b = target % total.num_symbols();
        total.add_transition(key / total.num_symbols(), key % total.num_symbols(), {q, b, partition.direction[q]});
    }
    return total;
}

/// The halting extension M' of a reversible machine, together with the index
/// maps needed to undo it. States and symbols double up: index i + base is the
/// primed version of index i.
struct HaltingExtension {
    TmSpec machine;
    uint32_t base_states = 0;
    uint32_t base_symbols = 0;
    StatePartition base_partition;
};

/// Replaces halting by a priming march: where δ(p,a) is undefined, M' enters
/// the primed state p' and keeps moving in p's direction class, priming every
/// tape symbol it scans from then on. The state change alone marks the halt;
/// the halted cell itself stays unprimed, which keeps δ' injective. No M'
/// computation halts before step T on a looped tape of N = 2T+2 cells.
inline HaltingExtension halting_extension(const TmSpec &spec) {
    if (!check_reversible(spec).reversible()) {
        throw std::invalid_argument("halting_extension requires a reversible transition function");
    }
    HaltingExtension ext;
    ext.base_states = spec.num_states();
    ext.base_symbols = spec.num_symbols();
    ext.base_partition = partition_states(spec);

    std::set<std::string> names(spec.state_names.begin(), spec.state_names.end());
    names.insert(spec.symbol_names.begin(), spec.symbol_names.end());
    std::string suffix = "'";
    auto collides = [&]() {
        for (const auto &n : spec.state_names) {
            if (names.count(n + suffix)) {
                return true;
            }
        }
        for (const auto &n : spec.symbol_names) {
            if (names.count(n + suffix)) {
                return true;
            }
        }
        return false;
    };
    while (collides()) {
        suffix += "'";
    }

    std::vector<std::string> states = spec.state_names;
    std::vector<std::string> symbols = spec.symbol_names;
    for (const auto &n : spec.state_names) {
        states.push_back(n + suffix);
    }
    for (const auto &n : spec.symbol_names) {
        symbols.push_back(n + suffix);
    }
    ext.machine = make_tm_spec(states, symbols, spec.symbol_names[spec.blank], spec.state_names[spec.start]);

    for (uint32_t p = 0; p < ext.base_states; p++) {
        for (uint32_t a = 0; a < ext.base_symbols; a++) {
            const auto &t = spec.transition(p, a);
            if (t.has_value()) {
                ext.machine.add_transition(p, a, *t);
            } else {
                ext.machine.add_transition(p, a, {ext.base_states + p, a, ext.base_partition.direction[p]});
            }
        }
    }
    for (uint32_t p = 0; p < ext.base_states; p++) {
        for (uint32_t a = 0; a < ext.base_symbols; a++) {
            ext.machine.add_transition(
                ext.base_states + p,
                a,
                {ext.base_states + p, ext.base_symbols + a, ext.base_partition.direction[p]});
        }
    }
    return ext;
}

struct HaltRecovery {
    Config config;      // the halting configuration of the base machine
    uint32_t halt_step;  // the step at which the base machine halted
};

/// Undoes the priming march: walks against the primed state's direction class
/// over the primed run, stops at the first unprimed cell (the halted cell),
/// removes all primes, and reads the halt step off the run length.
/// Rejects configurations that do not match the march shape.
inline HaltRecovery recover_halting_config(const HaltingExtension &ext, const Config &c) {
    require_valid_config(ext.machine, c);
    uint32_t n = c.width();
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("halting recovery expects a looped tape of N = 2T+2 cells");
    }
    uint32_t steps = n / 2 - 1;
    if (c.state < ext.base_states) {
        throw std::invalid_argument("state is unprimed; there is no halt to recover");
    }
    uint32_t base_state = c.state - ext.base_states;
    int dir = ext.base_partition.direction[base_state];
    uint32_t back = dir == +1 ? n - 1u : 1u;

    uint32_t run = 0;
    uint32_t pos = (c.head + back) % n;
    while (c.tape[pos] >= ext.base_symbols) {
        run++;
        if (run >= n) {
            throw std::invalid_argument("primed symbols wrap the whole tape; no halt cell exists");
        }
        pos = (pos + back) % n;
    }
    if (run + 1 > steps) {
        throw std::invalid_argument("primed run is longer than any halt within T steps could produce");
    }

    HaltRecovery out;
    out.halt_step = steps - run - 1;
    out.config.state = base_state;
    out.config.head = pos;
    out.config.tape = c.tape;
    for (uint32_t k = 1; k <= run; k++) {
        uint32_t j = (c.head + (uint64_t)back * k) % n;
        out.config.tape[j] -= ext.base_symbols;
    }
    for (uint32_t s : out.config.tape) {
        if (s >= ext.base_symbols) {
            throw std::invalid_argument("primed symbols found outside the march run; ambiguous halt");
        }
    }
    return out;
}

/// Parses the line-oriented machine format:
///   states: s1 s2 ...
///   alphabet: a1 a2 ...
///   blank: a
///   start: s
///   delta: p a -> q b D        (D is +1 or -1, one line per transition)
/// '#' starts a comment. Declaration order is significant and round-trips.
inline TmSpec parse_tm(const std::string &text) {
    std::vector<std::string> states, symbols;
    std::string blank, start;
    bool have_states = false, have_symbols = false, have_blank = false, have_start = false;
    std::vector<TextLine> delta_lines;

    for (auto &line : read_directive_lines(text)) {
        if (line.directive == "states") {
            if (have_states) {
                throw ParseError(line.number, "duplicate 'states:' line");
            }
            states = line.tokens;
            have_states = true;
        } else if (line.directive == "alphabet") {
            if (have_symbols) {
                throw ParseError(line.number, "duplicate 'alphabet:' line");
            }
            symbols = line.tokens;
            have_symbols = true;
        } else if (line.directive == "blank") {
            if (have_blank || line.tokens.size() != 1) {
                throw ParseError(line.number, "expected a single 'blank: a' line");
            }
            blank = line.tokens[0];
            have_blank = true;
        } else if (line.directive == "start") {
            if (have_start || line.tokens.size() != 1) {
                throw ParseError(line.number, "expected a single 'start: s' line");
            }
            start = line.tokens[0];
            have_start = true;
        } else if (line.directive == "delta") {
            delta_lines.push_back(std::move(line));
        } else {
            throw ParseError(line.number, "unknown directive '" + line.directive + ":'");
        }
    }
    if (!have_states || !have_symbols || !have_blank || !have_start) {
        throw ParseError(0, "missing one of the required lines: states, alphabet, blank, start");
    }

    TmSpec spec;
    try {
        spec = make_tm_spec(states, symbols, blank, start);
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }

    for (const auto &line : delta_lines) {
        if (line.tokens.size() != 6 || line.tokens[2] != "->") {
            throw ParseError(line.number, "expected 'delta: p a -> q b D'");
        }
        auto p = spec.find_state(line.tokens[0]);
        auto a = spec.find_symbol(line.tokens[1]);
        auto q = spec.find_state(line.tokens[3]);
        auto b = spec.find_symbol(line.tokens[4]);
        if (!p || !a || !q || !b) {
            throw ParseError(line.number, "transition references an undeclared state or symbol");
        }
        int direction;
        if (line.tokens[5] == "+1") {
            direction = +1;
        } else if (line.tokens[5] == "-1") {
            direction = -1;
        } else {
            throw ParseError(line.number, "direction must be +1 or -1, got '" + line.tokens[5] + "'");
        }
        if (spec.transition(*p, *a).has_value()) {
            throw ParseError(
                line.number, "duplicate transition for (" + line.tokens[0] + ", " + line.tokens[1] + ")");
        }
        spec.add_transition(*p, *a, {*q, *b, direction});
    }
    return spec;
}

/// Inverse of parse_tm, deterministic in declaration order.
inline std::string serialize_tm(const TmSpec &spec) {
    std::ostringstream out;
    out << "states:";
    for (const auto &n : spec.state_names) {
        out << ' ' << n;
    }
    out << "\nalphabet:";
    for (const auto &n : spec.symbol_names) {
        out << ' ' << n;
    }
    out << "\nblank: " << spec.symbol_names[spec.blank];
    out << "\nstart: " << spec.state_names[spec.start] << '\n';
    for (uint32_t key : spec.delta_order) {
        const Transition &t = *spec.delta[key];
        out << "delta: " << spec.state_names[key / spec.num_symbols()] << ' '
            << spec.symbol_names[key % spec.num_symbols()] << " -> " << spec.state_names[t.state] << ' '
            << spec.symbol_names[t.symbol] << ' ' << (t.direction == +1 ? "+1" : "-1") << '\n';
    }
    return out.str();
}

}  // namespace brickwall
