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

#include <cinttypes>
#include <cstdio>
#include <map>

#include "brickwall/brick.hpp"
#include "brickwall/linalg.hpp"
#include "brickwall/tm.hpp"

namespace brickwall {

/// One component of a transition amplitude vector δ_pa.
struct AmpEntry {
    uint32_t state = 0;
    uint32_t symbol = 0;
    int direction = +1;
    cplx amp;
};

/// A quantum Turing machine: the classical layout plus a total map from
/// (state, symbol) pairs to sparse complex amplitude vectors over
/// (state, symbol, direction) triples.
struct QtmSpec {
    std::vector<std::string> state_names;
    std::vector<std::string> symbol_names;
    uint32_t blank = 0;
    uint32_t start = 0;
    StatePartition partition;
    std::vector<std::vector<AmpEntry>> delta;  // indexed p * num_symbols() + a

    uint32_t num_states() const {
        return (uint32_t)state_names.size();
    }
    uint32_t num_symbols() const {
        return (uint32_t)symbol_names.size();
    }
    const std::vector<AmpEntry> &delta_at(uint32_t p, uint32_t a) const {
        return delta[p * num_symbols() + a];
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

    cplx amplitude(uint32_t p, uint32_t a, uint32_t q, uint32_t b, int direction) const {
        for (const AmpEntry &e : delta_at(p, a)) {
            if (e.state == q && e.symbol == b && e.direction == direction) {
                return e.amp;
            }
        }
        return 0.0;
    }
};

/// The classical machine embedded with amplitude 1 per transition.
inline QtmSpec classical_embedding(const TmSpec &spec) {
    QtmSpec q;
    q.state_names = spec.state_names;
    q.symbol_names = spec.symbol_names;
    q.blank = spec.blank;
    q.start = spec.start;
    q.partition = partition_states(spec);
    q.delta.resize(spec.delta.size());
    for (uint32_t key : spec.delta_order) {
        const Transition &t = *spec.delta[key];
        q.delta[key].push_back({t.state, t.symbol, t.direction, 1.0});
    }
    return q;
}

/// Per-property worst deviations of the three amplitude-vector properties.
struct DeltaPropertyReport {
    double tolerance = 0;
    double worst_unit = 0;
    double worst_orthogonality = 0;
    double worst_separability = 0;
    // Index tuples where the worst deviations occur: (p,a), (p1,a1,p2,a2),
    // and (p1,a1,b1,p2,a2,b2) respectively.
    std::vector<uint32_t> worst_unit_at;
    std::vector<uint32_t> worst_orthogonality_at;
    std::vector<uint32_t> worst_separability_at;

    bool unit_length() const {
        return worst_unit <= tolerance;
    }
    bool orthogonality() const {
        return worst_orthogonality <= tolerance;
    }
    bool separability() const {
        return worst_separability <= tolerance;
    }
    bool all() const {
        return unit_length() && orthogonality() && separability();
    }
};

/// Checks unit length of every δ_pa, pairwise orthogonality of the δ_pa, and
/// separability: each left-move slice orthogonal to each right-move slice as
/// vectors over the state space.
inline DeltaPropertyReport check_delta_properties(const QtmSpec &spec, double tolerance) {
    uint32_t nq = spec.num_states(), ns = spec.num_symbols();
    DeltaPropertyReport report;
    report.tolerance = tolerance;

    // Dense per-(p,a) vectors over (q,b,D): index ((q*ns)+b)*2 + (D==+1).
    std::vector<std::vector<cplx>> dense(nq * ns, std::vector<cplx>(nq * ns * 2, 0.0));
    for (uint32_t key = 0; key < dense.size(); key++) {
        for (const AmpEntry &e : spec.delta[key]) {
            dense[key][(e.state * ns + e.symbol) * 2 + (e.direction == +1 ? 1 : 0)] += e.amp;
        }
    }

    for (uint32_t key = 0; key < dense.size(); key++) {
        double dev = std::abs(std::real(inner(dense[key], dense[key])) - 1.0);
        if (dev > report.worst_unit) {
            report.worst_unit = dev;
            report.worst_unit_at = {key / ns, key % ns};
        }
    }
    for (uint32_t k1 = 0; k1 < dense.size(); k1++) {
        for (uint32_t k2 = k1 + 1; k2 < dense.size(); k2++) {
            double dev = std::abs(inner(dense[k1], dense[k2]));
            if (dev > report.worst_orthogonality) {
                report.worst_orthogonality = dev;
                report.worst_orthogonality_at = {k1 / ns, k1 % ns, k2 / ns, k2 % ns};
            }
        }
    }
    // Left/right slices over the state space, one per (p,a,b).
    auto slice = [&](uint32_t key, uint32_t b, int direction) {
        std::vector<cplx> v(nq, 0.0);
        for (uint32_t q = 0; q < nq; q++) {
            v[q] = dense[key][(q * ns + b) * 2 + (direction == +1 ? 1 : 0)];
        }
        return v;
    };
    for (uint32_t k1 = 0; k1 < dense.size(); k1++) {
        for (uint32_t b1 = 0; b1 < ns; b1++) {
            auto left = slice(k1, b1, -1);
            for (uint32_t k2 = 0; k2 < dense.size(); k2++) {
                for (uint32_t b2 = 0; b2 < ns; b2++) {
                    double dev = std::abs(inner(left, slice(k2, b2, +1)));
                    if (dev > report.worst_separability) {
                        report.worst_separability = dev;
                        report.worst_separability_at = {k1 / ns, k1 % ns, b1, k2 / ns, k2 % ns, b2};
                    }
                }
            }
        }
    }
    return report;
}

/// Builds a machine from a unitary on the (state, symbol) space: the column
/// for (p,a) becomes δ_pa, every target state moving toward its partition
/// class. The three δ-properties then hold to the unitary's accuracy.
inline QtmSpec gen_qtm_from_unitary(
    const CMatrix &alpha,
    const StatePartition &partition,
    std::vector<std::string> state_names,
    std::vector<std::string> symbol_names,
    const std::string &blank,
    const std::string &start,
    double tolerance = 1e-9) {
    // Reuse the classical name validation.
    TmSpec names = make_tm_spec(std::move(state_names), std::move(symbol_names), blank, start);
    uint32_t nq = names.num_states(), ns = names.num_symbols();
    if (alpha.rows != (size_t)nq * ns || alpha.cols != (size_t)nq * ns) {
        throw std::invalid_argument("the unitary must act on the (state, symbol) space");
    }
    if (partition.direction.size() != nq) {
        throw std::invalid_argument("the partition must cover every state");
    }
    if (unitarity_deviation(alpha) > tolerance) {
        throw std::invalid_argument("gen_qtm_from_unitary needs a unitary matrix");
    }
    QtmSpec spec;
    spec.state_names = names.state_names;
    spec.symbol_names = names.symbol_names;
    spec.blank = names.blank;
    spec.start = names.start;
    spec.partition = partition;
    spec.delta.resize((size_t)nq * ns);
    for (uint32_t p = 0; p < nq; p++) {
        for (uint32_t a = 0; a < ns; a++) {
            for (uint32_t q = 0; q < nq; q++) {
                for (uint32_t b = 0; b < ns; b++) {
                    cplx amp = alpha.at((size_t)q * ns + b, (size_t)p * ns + a);
                    if (amp != 0.0) {
                        spec.delta[p * ns + a].push_back({q, b, partition.direction[q], amp});
                    }
                }
            }
        }
    }
    return spec;
}

/// The single quantum gate of the wall: a unitary on the span of one-head and
/// no-head two-cell vectors, plus the projectors onto the spans of the
/// left-move and right-move amplitude slices.
struct BrickOperator {
    uint32_t num_states = 0;
    uint32_t num_symbols = 0;
    CMatrix u;
    CMatrix p_left, p_right;
    std::vector<std::vector<std::pair<uint32_t, cplx>>> columns;  // sparse view of u

    uint32_t dim() const {
        return brick_datum_count(num_states, num_symbols);
    }
};

/// Constructs the brick operator column by column: no-head inputs are copied,
/// plain-state inputs apply δ marking completed and deferred moves, and
/// marked inputs resolve through the projector onto the matching move
/// subspace, with the orthogonal-complement part swapping the two cells.
inline BrickOperator build_brick_operator(const QtmSpec &spec, double tolerance) {
    if (!check_delta_properties(spec, tolerance).all()) {
        throw std::invalid_argument("the machine fails the amplitude-vector properties at this tolerance");
    }
    uint32_t nq = spec.num_states(), ns = spec.num_symbols();
    BrickOperator op;
    op.num_states = nq;
    op.num_symbols = ns;

    std::vector<std::vector<cplx>> left_gen, right_gen;
    for (uint32_t p = 0; p < nq; p++) {
        for (uint32_t a = 0; a < ns; a++) {
            for (uint32_t b = 0; b < ns; b++) {
                std::vector<cplx> l(nq, 0.0), r(nq, 0.0);
                for (const AmpEntry &e : spec.delta_at(p, a)) {
                    if (e.symbol != b) {
                        continue;
                    }
                    (e.direction == -1 ? l : r)[e.state] += e.amp;
                }
                if (norm_of(l) > 0) {
                    left_gen.push_back(std::move(l));
                }
                if (norm_of(r) > 0) {
                    right_gen.push_back(std::move(r));
                }
            }
        }
    }
    op.p_left = projector_onto(modified_gram_schmidt(left_gen, tolerance), nq);
    op.p_right = projector_onto(modified_gram_schmidt(right_gen, tolerance), nq);

    uint32_t dim = op.dim();
    op.u = CMatrix(dim, dim);
    auto column_add = [&](uint32_t col, const BrickDatum &out, cplx amp) {
        if (amp != 0.0) {
            op.u.at(brick_datum_index(out, nq, ns), col) += amp;
        }
    };

    for (uint32_t col = 0; col < dim; col++) {
        BrickDatum x = brick_datum_from_index(col, nq, ns);
        if (x.no_head()) {
            column_add(col, x, 1.0);
            continue;
        }
        bool head_left = is_scanned_part(x.left.state_part);
        const CellDatum &scanned = head_left ? x.left : x.right;
        uint32_t other_symbol = head_left ? x.right.symbol : x.left.symbol;
        uint32_t q = base_state(scanned.state_part, nq);

        if (is_plain_part(scanned.state_part, nq)) {
            for (const AmpEntry &e : spec.delta_at(q, scanned.symbol)) {
                if (head_left) {
                    if (e.direction == +1) {  // moved within the brick, marked done
                        column_add(col, {{0, e.symbol}, {up_part(e.state, nq), other_symbol}}, e.amp);
                    } else {  // move deferred
                        column_add(col, {{down_part(e.state, nq), e.symbol}, {0, other_symbol}}, e.amp);
                    }
                } else {
                    if (e.direction == -1) {
                        column_add(col, {{up_part(e.state, nq), other_symbol}, {0, e.symbol}}, e.amp);
                    } else {
                        column_add(col, {{0, other_symbol}, {down_part(e.state, nq), e.symbol}}, e.amp);
                    }
                }
            }
            continue;
        }

        bool up = is_up_part(scanned.state_part, nq);
        // The matching projector: a mark is resolved on the left half for
        // right-movers and on the right half for left-movers.
        const CMatrix &match = head_left ? op.p_right : op.p_left;
        for (uint32_t q2 = 0; q2 < nq; q2++) {
            cplx in_span = match.at(q2, q);
            cplx in_complement = (q2 == q ? 1.0 : 0.0) - in_span;
            if (up) {
                if (head_left) {
                    // unmark in place / swap cells keeping the mark
                    column_add(col, {{plain_part(q2), x.left.symbol}, x.right}, in_span);
                    column_add(col, {x.right, {up_part(q2, nq), x.left.symbol}}, in_complement);
                } else {
                    column_add(col, {x.left, {plain_part(q2), x.right.symbol}}, in_span);
                    column_add(col, {{up_part(q2, nq), x.right.symbol}, x.left}, in_complement);
                }
            } else {
                if (head_left) {
                    // complete the deferred move rightward / swap cells
                    column_add(col, {{0, x.left.symbol}, {plain_part(q2), x.right.symbol}}, in_span);
                    column_add(col, {x.right, {down_part(q2, nq), x.left.symbol}}, in_complement);
                } else {
                    column_add(col, {{plain_part(q2), x.left.symbol}, {0, x.right.symbol}}, in_span);
                    column_add(col, {{down_part(q2, nq), x.right.symbol}, x.left}, in_complement);
                }
            }
        }
    }

    op.columns.resize(dim);
    for (uint32_t col = 0; col < dim; col++) {
        for (uint32_t row = 0; row < dim; row++) {
            cplx amp = op.u.at(row, col);
            if (amp != 0.0) {
                op.columns[col].push_back({row, amp});
            }
        }
    }
    return op;
}

struct UnitarityReport {
    bool unitary = false;
    double max_deviation = 0;
};

inline UnitarityReport check_unitary(const BrickOperator &op, double tolerance) {
    UnitarityReport report;
    report.max_deviation = unitarity_deviation(op.u);
    report.unitary = report.max_deviation <= tolerance;
    return report;
}

/// A basis label of the extended space: one marked-or-plain head somewhere on
/// the tape.
struct ExtKey {
    uint32_t state_part = 0;  // 1 .. 3|Q|
    uint32_t head = 0;
    std::vector<uint32_t> tape;

    auto operator<=>(const ExtKey &) const = default;
};

/// A sparse vector over extended-configuration keys.
struct QState {
    std::map<ExtKey, cplx> amplitudes;

    double norm_squared() const {
        double s = 0;
        for (const auto &[key, amp] : amplitudes) {
            s += std::norm(amp);
        }
        return s;
    }
    double norm() const {
        return std::sqrt(norm_squared());
    }
    void add(const ExtKey &key, cplx amp) {
        amplitudes[key] += amp;
    }
    void prune(double floor = 1e-13) {
        for (auto it = amplitudes.begin(); it != amplitudes.end();) {
            if (std::abs(it->second) <= floor) {
                it = amplitudes.erase(it);
            } else {
                ++it;
            }
        }
    }
    bool plain_support(uint32_t num_states) const {
        for (const auto &[key, amp] : amplitudes) {
            if (!is_plain_part(key.state_part, num_states)) {
                return false;
            }
        }
        return true;
    }
};

inline double l2_distance(const QState &a, const QState &b) {
    double s = 0;
    auto ia = a.amplitudes.begin();
    auto ib = b.amplitudes.begin();
    while (ia != a.amplitudes.end() || ib != b.amplitudes.end()) {
        if (ib == b.amplitudes.end() || (ia != a.amplitudes.end() && ia->first < ib->first)) {
            s += std::norm(ia->second);
            ++ia;
        } else if (ia == a.amplitudes.end() || ib->first < ia->first) {
            s += std::norm(ib->second);
            ++ib;
        } else {
            s += std::norm(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return std::sqrt(s);
}

inline ExtKey basis_key(const Config &c) {
    return {plain_part(c.state), c.head, c.tape};
}

inline void require_key_in_range(const QtmSpec &spec, const ExtKey &key) {
    if (key.state_part == 0 || key.state_part >= state_part_count(spec.num_states()) || key.tape.empty() ||
        key.head >= key.tape.size()) {
        throw std::invalid_argument("state key is out of range for this machine");
    }
    for (uint32_t s : key.tape) {
        if (s >= spec.num_symbols()) {
            throw std::invalid_argument("state key tape holds an undeclared symbol");
        }
    }
}

/// One step of the machine's own evolution, linearly extended over a
/// plain-support state.
inline QState apply_um(const QtmSpec &spec, const QState &s) {
    QState out;
    for (const auto &[key, amp] : s.amplitudes) {
        require_key_in_range(spec, key);
        if (!is_plain_part(key.state_part, spec.num_states())) {
            throw std::invalid_argument("direct evolution needs a plain (unmarked) support");
        }
        uint32_t n = (uint32_t)key.tape.size();
        uint32_t p = base_state(key.state_part, spec.num_states());
        for (const AmpEntry &e : spec.delta_at(p, key.tape[key.head])) {
            ExtKey next = key;
            next.state_part = plain_part(e.state);
            next.tape[key.head] = e.symbol;
            next.head = (key.head + (e.direction == +1 ? 1u : n - 1u)) % n;
            out.add(next, amp * e.amp);
        }
    }
    out.prune();
    return out;
}

/// Applies the brick operator at every gate position of one row. Even rows
/// pair columns (0,1), (2,3), ...; odd rows pair (1,2), ..., (N-1,0). Away
/// from the head every gate copies its input, so only the head's gate acts.
inline QState apply_row(const BrickOperator &op, const QtmSpec &spec, uint32_t row_parity, const QState &s) {
    uint32_t nq = op.num_states, ns = op.num_symbols;
    QState out;
    for (const auto &[key, amp] : s.amplitudes) {
        require_key_in_range(spec, key);
        uint32_t n = (uint32_t)key.tape.size();
        uint32_t start;
        if ((row_parity & 1) == 0) {
            start = key.head & ~1u;
        } else {
            start = (key.head & 1) ? key.head : (key.head + n - 1) % n;
        }
        uint32_t other = (start + 1) % n;
        BrickDatum in;
        in.left = {key.head == start ? key.state_part : 0, key.tape[start]};
        in.right = {key.head == other ? key.state_part : 0, key.tape[other]};
        for (const auto &[row, gate_amp] : op.columns[brick_datum_index(in, nq, ns)]) {
            BrickDatum result = brick_datum_from_index(row, nq, ns);
            ExtKey next = key;
            next.tape[start] = result.left.symbol;
            next.tape[other] = result.right.symbol;
            if (is_scanned_part(result.left.state_part)) {
                next.state_part = result.left.state_part;
                next.head = start;
            } else {
                next.state_part = result.right.state_part;
                next.head = other;
            }
            out.add(next, amp * gate_amp);
        }
    }
    out.prune();
    return out;
}

/// Runs all 2T rows of the quantum wall on a plain-support state with the
/// head in cell 0 and a blank outside [-T, T]. Records the norm after every
/// row when asked. The support must return to plain states after every
/// two-row step; a surviving mark means the simulation is broken.
inline QState simulate_quantum_wall(
    const QtmSpec &spec,
    uint32_t steps,
    const QState &s0,
    const BrickOperator &op,
    std::vector<double> *row_norms = nullptr) {
    if (steps < 1) {
        throw std::invalid_argument("the wall needs at least one step");
    }
    uint32_t n = 2 * steps + 2;
    for (const auto &[key, amp] : s0.amplitudes) {
        require_key_in_range(spec, key);
        if (!is_plain_part(key.state_part, spec.num_states())) {
            throw std::invalid_argument("initial support must be plain configurations");
        }
        if (key.tape.size() != n || key.head != 0 || key.tape[steps + 1] != spec.blank) {
            throw std::invalid_argument(
                "initial support must have the head in cell 0 and a blank outside [-T, T]");
        }
    }
    if (std::abs(s0.norm() - 1.0) > 1e-6) {
        throw std::invalid_argument("initial state must have norm 1");
    }
    QState s = s0;
    for (uint32_t v = 0; v < 2 * steps; v++) {
        s = apply_row(op, spec, v & 1, s);
        if (row_norms != nullptr) {
            row_norms->push_back(s.norm());
        }
        if (v % 2 == 1 && !s.plain_support(spec.num_states())) {
            throw std::logic_error("marked states survived a two-row step; simulation is broken");
        }
    }
    return s;
}

inline QState simulate_quantum_wall(
    const QtmSpec &spec, uint32_t steps, const QState &s0, double tolerance = 1e-9) {
    return simulate_quantum_wall(spec, steps, s0, build_brick_operator(spec, tolerance));
}

/// A random unit state over the valid wall inputs (head 0, blank at T+1).
/// Dense over the whole valid basis when it is small, sampled otherwise.
inline QState random_plain_state(const QtmSpec &spec, uint32_t steps, std::mt19937_64 &rng) {
    uint32_t n = 2 * steps + 2;
    uint32_t nq = spec.num_states(), ns = spec.num_symbols();
    std::normal_distribution<double> gauss(0.0, 1.0);
    QState s;
    double basis_log = (n - 1) * std::log2((double)ns) + std::log2((double)nq);
    if (basis_log <= 12) {
        // Enumerate every valid configuration.
        std::vector<uint32_t> tape(n, spec.blank);
        while (true) {
            for (uint32_t q = 0; q < nq; q++) {
                s.amplitudes[{plain_part(q), 0, tape}] = {gauss(rng), gauss(rng)};
            }
            uint32_t j = 0;
            while (j < n && (j == steps + 1 || ++tape[j] == ns)) {
                if (j != steps + 1) {
                    tape[j] = 0;
                }
                j++;
            }
            if (j == n) {
                break;
            }
        }
    } else {
        std::uniform_int_distribution<uint32_t> state(0, nq - 1);
        std::uniform_int_distribution<uint32_t> symbol(0, ns - 1);
        while (s.amplitudes.size() < 64) {
            ExtKey key;
            key.state_part = plain_part(state(rng));
            key.head = 0;
            key.tape.assign(n, spec.blank);
            for (uint32_t j = 0; j < n; j++) {
                if (j != steps + 1) {
                    key.tape[j] = symbol(rng);
                }
            }
            s.amplitudes[key] = {gauss(rng), gauss(rng)};
        }
    }
    double len = s.norm();
    for (auto &[key, amp] : s.amplitudes) {
        amp /= len;
    }
    return s;
}

inline std::string format_amplitude(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Parses the machine format extended with partition and amplitude lines:
///   partition: q -> +1
///   amp: p a -> q b D re im
/// States without a partition line default to the positive class.
inline QtmSpec parse_qtm(const std::string &text) {
    std::vector<std::string> states, symbols;
    std::string blank, start;
    bool have_states = false, have_symbols = false, have_blank = false, have_start = false;
    std::vector<TextLine> partition_lines, amp_lines;

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
        } else if (line.directive == "partition") {
            partition_lines.push_back(std::move(line));
        } else if (line.directive == "amp") {
            amp_lines.push_back(std::move(line));
        } else {
            throw ParseError(line.number, "unknown directive '" + line.directive + ":'");
        }
    }
    if (!have_states || !have_symbols || !have_blank || !have_start) {
        throw ParseError(0, "missing one of the required lines: states, alphabet, blank, start");
    }

    TmSpec names;
    try {
        names = make_tm_spec(states, symbols, blank, start);
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
    QtmSpec spec;
    spec.state_names = names.state_names;
    spec.symbol_names = names.symbol_names;
    spec.blank = names.blank;
    spec.start = names.start;
    spec.partition.direction.assign(spec.num_states(), 0);
    spec.delta.resize((size_t)spec.num_states() * spec.num_symbols());

    for (const auto &line : partition_lines) {
        if (line.tokens.size() != 3 || line.tokens[1] != "->") {
            throw ParseError(line.number, "expected 'partition: q -> +1|-1'");
        }
        auto q = spec.find_state(line.tokens[0]);
        if (!q) {
            throw ParseError(line.number, "partition line references an undeclared state");
        }
        if (spec.partition.direction[*q] != 0) {
            throw ParseError(line.number, "duplicate partition line for " + line.tokens[0]);
        }
        if (line.tokens[2] == "+1") {
            spec.partition.direction[*q] = +1;
        } else if (line.tokens[2] == "-1") {
            spec.partition.direction[*q] = -1;
        } else {
            throw ParseError(line.number, "partition class must be +1 or -1");
        }
    }
    for (int &d : spec.partition.direction) {
        if (d == 0) {
            d = +1;
        }
    }

    for (const auto &line : amp_lines) {
        if (line.tokens.size() != 8 || line.tokens[2] != "->") {
            throw ParseError(line.number, "expected 'amp: p a -> q b D re im'");
        }
        auto p = spec.find_state(line.tokens[0]);
        auto a = spec.find_symbol(line.tokens[1]);
        auto q = spec.find_state(line.tokens[3]);
        auto b = spec.find_symbol(line.tokens[4]);
        if (!p || !a || !q || !b) {
            throw ParseError(line.number, "amplitude line references an undeclared state or symbol");
        }
        int direction;
        if (line.tokens[5] == "+1") {
            direction = +1;
        } else if (line.tokens[5] == "-1") {
            direction = -1;
        } else {
            throw ParseError(line.number, "direction must be +1 or -1");
        }
        double re, im;
        try {
            re = std::stod(line.tokens[6]);
            im = std::stod(line.tokens[7]);
        } catch (const std::exception &) {
            throw ParseError(line.number, "cannot parse the amplitude's real or imaginary part");
        }
        auto &entries = spec.delta[*p * spec.num_symbols() + *a];
        for (const AmpEntry &e : entries) {
            if (e.state == *q && e.symbol == *b && e.direction == direction) {
                throw ParseError(line.number, "duplicate amplitude entry");
            }
        }
        entries.push_back({*q, *b, direction, {re, im}});
    }
    return spec;
}

/// Inverse of parse_qtm, deterministic: header, partition lines for every
/// state, then amplitude lines grouped by (state, symbol) in declaration order.
inline std::string serialize_qtm(const QtmSpec &spec) {
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
    for (uint32_t q = 0; q < spec.num_states(); q++) {
        out << "partition: " << spec.state_names[q] << " -> " << (spec.partition.direction[q] == +1 ? "+1" : "-1")
            << '\n';
    }
    for (uint32_t p = 0; p < spec.num_states(); p++) {
        for (uint32_t a = 0; a < spec.num_symbols(); a++) {
            for (const AmpEntry &e : spec.delta_at(p, a)) {
                out << "amp: " << spec.state_names[p] << ' ' << spec.symbol_names[a] << " -> "
                    << spec.state_names[e.state] << ' ' << spec.symbol_names[e.symbol] << ' '
                    << (e.direction == +1 ? "+1" : "-1") << ' ' << format_amplitude(e.amp.real()) << ' '
                    << format_amplitude(e.amp.imag()) << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace brickwall
