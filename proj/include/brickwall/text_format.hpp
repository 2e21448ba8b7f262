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

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace brickwall {

struct ParseError : std::runtime_error {
    size_t line;
    ParseError(size_t line_number, const std::string &message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message), line(line_number) {
    }
};

/// One non-empty line of a machine description: "directive: tok tok ...".
struct TextLine {
    size_t number;
    std::string directive;
    std::vector<std::string> tokens;
};

inline std::vector<std::string> split_whitespace(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

/// Splits text into directive lines, dropping '#' comments and blank lines.
inline std::vector<TextLine> read_directive_lines(const std::string &text) {
    std::vector<TextLine> out;
    std::istringstream in(text);
    std::string raw;
    size_t number = 0;
    while (std::getline(in, raw)) {
        number++;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        auto tokens = split_whitespace(raw);
        if (tokens.empty()) {
            continue;
        }
        std::string &head = tokens.front();
        if (head.size() < 2 || head.back() != ':') {
            throw ParseError(number, "expected a 'directive:' prefix, got '" + head + "'");
        }
        TextLine line;
        line.number = number;
        line.directive = head.substr(0, head.size() - 1);
        line.tokens.assign(tokens.begin() + 1, tokens.end());
        out.push_back(std::move(line));
    }
    return out;
}

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace brickwall
