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

#include <json.hpp>

#include "brickwall/quantum.hpp"
#include "brickwall/tm.hpp"

namespace brickwall {

using ordered_json = nlohmann::ordered_json;

inline ordered_json config_to_json(const TmSpec &spec, const Config &c) {
    ordered_json doc;
    doc["state"] = spec.state_names[c.state];
    doc["head"] = c.head;
    doc["tape"] = ordered_json::array();
    for (uint32_t s : c.tape) {
        doc["tape"].push_back(spec.symbol_names[s]);
    }
    return doc;
}

/// Reads {"state", "head", "tape"} with all fields optional; missing symbols
/// pad with blanks up to `width`.
inline Config config_from_json(const TmSpec &spec, const nlohmann::json &doc, uint32_t width) {
    Config c;
    c.state = spec.start;
    c.head = 0;
    c.tape.assign(width, spec.blank);
    if (doc.contains("state")) {
        auto q = spec.find_state(doc.at("state").get<std::string>());
        if (!q) {
            throw std::invalid_argument("unknown state: " + doc.at("state").get<std::string>());
        }
        c.state = *q;
    }
    if (doc.contains("head")) {
        c.head = doc.at("head").get<uint32_t>();
    }
    if (doc.contains("tape")) {
        const auto &tape = doc.at("tape");
        if (tape.size() > width) {
            throw std::invalid_argument("tape is longer than N = 2T+2 cells");
        }
        for (size_t j = 0; j < tape.size(); j++) {
            auto s = spec.find_symbol(tape[j].get<std::string>());
            if (!s) {
                throw std::invalid_argument("unknown symbol: " + tape[j].get<std::string>());
            }
            c.tape[j] = *s;
        }
    }
    require_valid_config(spec, c);
    return c;
}

inline ordered_json delta_entry_to_json(const TmSpec &spec, const DeltaEntry &e) {
    ordered_json doc;
    doc["state"] = spec.state_names[e.from_state];
    doc["scanned"] = spec.symbol_names[e.scanned];
    doc["next_state"] = spec.state_names[e.to.state];
    doc["written"] = spec.symbol_names[e.to.symbol];
    doc["direction"] = e.to.direction;
    return doc;
}

inline ordered_json reversibility_report_to_json(const TmSpec &spec, const ReversibilityReport &report) {
    ordered_json doc;
    doc["reversible"] = report.reversible();
    doc["separable"] = report.separable;
    doc["injective"] = report.injective;
    doc["witnesses"] = ordered_json::array();
    for (const auto &w : report.witnesses) {
        ordered_json wj;
        wj["property"] = w.kind == ReversibilityWitness::SEPARABILITY ? "separability" : "injectivity";
        wj["first"] = delta_entry_to_json(spec, w.first);
        wj["second"] = delta_entry_to_json(spec, w.second);
        doc["witnesses"].push_back(std::move(wj));
    }
    return doc;
}

inline ordered_json delta_property_report_to_json(const QtmSpec &spec, const DeltaPropertyReport &report) {
    auto name_pairs = [&](const std::vector<uint32_t> &idx) {
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i + 1 < idx.size(); i += 2) {
            arr.push_back(spec.state_names[idx[i]]);
            arr.push_back(spec.symbol_names[idx[i + 1]]);
        }
        return arr;
    };
    ordered_json doc;
    doc["tolerance"] = report.tolerance;
    doc["unit_length"] = {{"ok", report.unit_length()}, {"worst_deviation", report.worst_unit}};
    doc["orthogonality"] = {{"ok", report.orthogonality()}, {"worst_deviation", report.worst_orthogonality}};
    doc["separability"] = {{"ok", report.separability()}, {"worst_deviation", report.worst_separability}};
    if (!report.worst_unit_at.empty()) {
        doc["unit_length"]["at"] = name_pairs(report.worst_unit_at);
    }
    if (!report.worst_orthogonality_at.empty()) {
        doc["orthogonality"]["at"] = name_pairs(report.worst_orthogonality_at);
    }
    if (!report.worst_separability_at.empty()) {
        const auto &w = report.worst_separability_at;
        doc["separability"]["at"] = {
            spec.state_names[w[0]],
            spec.symbol_names[w[1]],
            spec.symbol_names[w[2]],
            spec.state_names[w[3]],
            spec.symbol_names[w[4]],
            spec.symbol_names[w[5]]};
    }
    return doc;
}

/// Serializes a plain-support state as sorted (state, head, tape, re, im) terms.
inline ordered_json qstate_to_json(const QtmSpec &spec, const QState &s) {
    ordered_json doc;
    doc["norm"] = s.norm();
    doc["terms"] = ordered_json::array();
    for (const auto &[key, amp] : s.amplitudes) {
        if (!is_plain_part(key.state_part, spec.num_states())) {
            throw std::invalid_argument("only plain-support states serialize to JSON");
        }
        ordered_json term;
        term["state"] = spec.state_names[base_state(key.state_part, spec.num_states())];
        term["head"] = key.head;
        term["tape"] = ordered_json::array();
        for (uint32_t sym : key.tape) {
            term["tape"].push_back(spec.symbol_names[sym]);
        }
        term["re"] = amp.real();
        term["im"] = amp.imag();
        doc["terms"].push_back(std::move(term));
    }
    return doc;
}

/// Reads either a single configuration object (amplitude 1) or
/// {"terms": [{state, head, tape, re, im}, ...]}.
inline QState qstate_from_json(const QtmSpec &spec, const nlohmann::json &doc, uint32_t width) {
    TmSpec names;  // borrow config_from_json via a name-compatible shell
    names.state_names = spec.state_names;
    names.symbol_names = spec.symbol_names;
    names.blank = spec.blank;
    names.start = spec.start;
    QState s;
    if (!doc.contains("terms")) {
        Config c = config_from_json(names, doc, width);
        s.amplitudes[basis_key(c)] = 1.0;
        return s;
    }
    for (const auto &term : doc.at("terms")) {
        Config c = config_from_json(names, term, width);
        cplx amp{term.value("re", 1.0), term.value("im", 0.0)};
        s.add(basis_key(c), amp);
    }
    return s;
}

}  // namespace brickwall
