// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/io.hpp"

#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cfp/error.hpp"

namespace cfp::io {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

struct Line {
    std::vector<Token> tokens;
    int number;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Content lines only: comments ('#' first non-blank column) and blank
// lines vanish here, everything else is split on whitespace with column
// positions kept for error messages.
std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        ++number;
        std::string_view line(text.data() + pos, end - pos);
        std::size_t i = 0;
        while (i < line.size() && is_space(line[i])) ++i;
        if (i < line.size() && line[i] != '#') {
            Line out;
            out.number = number;
            while (i < line.size()) {
                if (is_space(line[i])) {
                    ++i;
                    continue;
                }
                std::size_t start = i;
                while (i < line.size() && !is_space(line[i])) ++i;
                out.tokens.push_back({std::string(line.substr(start, i - start)),
                                      static_cast<int>(start) + 1});
            }
            lines.push_back(std::move(out));
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::int64_t parse_int(const Token& tok, int line, const char* what,
                       std::int64_t min_value, std::int64_t max_value) {
    std::int64_t value = 0;
    std::size_t i = 0;
    if (tok.text.empty()) throw ParseError(std::string("empty ") + what, line, tok.column);
    for (; i < tok.text.size(); ++i) {
        char c = tok.text[i];
        if (c < '0' || c > '9') {
            throw ParseError(std::string("expected ") + what + ", got '" + tok.text + "'",
                             line, tok.column);
        }
        value = value * 10 + (c - '0');
        if (value > max_value) {
            throw ParseError(std::string(what) + " out of range", line, tok.column);
        }
    }
    if (value < min_value) {
        throw ParseError(std::string(what) + " out of range", line, tok.column);
    }
    return value;
}

void expect_no_more(const std::vector<Line>& lines, std::size_t next) {
    if (next < lines.size()) {
        throw ParseError("unexpected trailing content", lines[next].number,
                         lines[next].tokens[0].column);
    }
}

}  // namespace

CfpInstance parse_instance(const std::string& text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError("missing header", 1, 1);
    const Line& header = lines[0];
    if (header.tokens.size() != 2) {
        throw ParseError("header must be exactly 'm p'", header.number,
                         header.tokens.empty() ? 1 : header.tokens[0].column);
    }
    int m = static_cast<int>(parse_int(header.tokens[0], header.number,
                                       "machine count", 1, 100000));
    int p = static_cast<int>(parse_int(header.tokens[1], header.number,
                                       "part count", 1, 100000));
    if (lines.size() < static_cast<std::size_t>(m) + 1) {
        throw ParseError("expected " + std::to_string(m) + " matrix rows, got " +
                         std::to_string(lines.size() - 1), header.number, 1);
    }
    std::vector<std::uint8_t> data;
    data.reserve(static_cast<std::size_t>(m) * p);
    for (int i = 0; i < m; ++i) {
        const Line& row = lines[static_cast<std::size_t>(i) + 1];
        if (row.tokens.size() != static_cast<std::size_t>(p)) {
            throw ParseError("row has " + std::to_string(row.tokens.size()) +
                             " entries, expected " + std::to_string(p),
                             row.number, row.tokens[0].column);
        }
        for (const Token& tok : row.tokens) {
            if (tok.text == "0") {
                data.push_back(0);
            } else if (tok.text == "1") {
                data.push_back(1);
            } else {
                throw ParseError("matrix entries must be 0 or 1, got '" + tok.text + "'",
                                 row.number, tok.column);
            }
        }
    }
    expect_no_more(lines, static_cast<std::size_t>(m) + 1);
    return CfpInstance(BoolMatrix(m, p, std::move(data)));
}

std::string write_instance(const CfpInstance& instance) {
    std::string out = std::to_string(instance.m()) + " " + std::to_string(instance.p()) + "\n";
    for (int i = 0; i < instance.m(); ++i) {
        for (int j = 0; j < instance.p(); ++j) {
            out += instance.matrix().at(i, j) ? '1' : '0';
            out += j + 1 < instance.p() ? ' ' : '\n';
        }
    }
    return out;
}

CfpSolution parse_solution(const std::string& text, const CfpInstance& instance) {
    std::vector<Line> lines = content_lines(text);
    if (lines.size() < 3) throw ParseError("expected 'cells', 'machines' and 'parts' lines", 1, 1);

    auto keyword_line = [&](std::size_t idx, const char* keyword, std::size_t count) {
        const Line& line = lines[idx];
        if (line.tokens[0].text != keyword) {
            throw ParseError(std::string("expected '") + keyword + "' line",
                             line.number, line.tokens[0].column);
        }
        if (line.tokens.size() != count + 1) {
            throw ParseError(std::string("'") + keyword + "' line has " +
                             std::to_string(line.tokens.size() - 1) + " values, expected " +
                             std::to_string(count), line.number, line.tokens[0].column);
        }
        return &line;
    };

    const Line* cells = keyword_line(0, "cells", 1);
    int declared = static_cast<int>(parse_int(cells->tokens[1], cells->number,
                                              "cell count", 1, 1 << 20));
    const Line* machines = keyword_line(1, "machines", static_cast<std::size_t>(instance.m()));
    const Line* parts = keyword_line(2, "parts", static_cast<std::size_t>(instance.p()));
    expect_no_more(lines, 3);

    // Indices are only parsed here; whether they respect the instance's
    // cell bound is validate()'s question, so `verify` can report it as a
    // violation instead of a parse failure.
    auto parse_cells = [&](const Line* line, int count) {
        std::vector<std::int32_t> out(count);
        for (int i = 0; i < count; ++i) {
            out[i] = static_cast<std::int32_t>(
                parse_int(line->tokens[static_cast<std::size_t>(i) + 1], line->number,
                          "cell index", 0, std::numeric_limits<std::int32_t>::max()));
        }
        return out;
    };
    CfpSolution solution(parse_cells(machines, instance.m()),
                         parse_cells(parts, instance.p()));
    if (solution.num_cells != declared) {
        throw ParseError("'cells " + std::to_string(declared) + "' does not match the " +
                         std::to_string(solution.num_cells) + " distinct indices used",
                         cells->number, cells->tokens[1].column);
    }
    return solution;
}

std::string write_solution(const CfpSolution& solution) {
    std::string out = "cells " + std::to_string(solution.num_cells) + "\nmachines";
    for (std::int32_t c : solution.machine_cell) out += " " + std::to_string(c);
    out += "\nparts";
    for (std::int32_t c : solution.part_cell) out += " " + std::to_string(c);
    out += "\n";
    return out;
}

bgep::BgepInstance parse_edge_list(const std::string& text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError("missing header", 1, 1);
    const Line& header = lines[0];
    if (header.tokens.size() != 3) {
        throw ParseError("header must be exactly 'left right edges'", header.number,
                         header.tokens.empty() ? 1 : header.tokens[0].column);
    }
    int left = static_cast<int>(parse_int(header.tokens[0], header.number,
                                          "left vertex count", 1, 100000));
    int right = static_cast<int>(parse_int(header.tokens[1], header.number,
                                           "right vertex count", 1, 100000));
    std::int64_t count = parse_int(header.tokens[2], header.number, "edge count", 0,
                                   static_cast<std::int64_t>(left) * right);
    if (lines.size() != static_cast<std::size_t>(count) + 1) {
        throw ParseError("expected " + std::to_string(count) + " edge lines, got " +
                         std::to_string(lines.size() - 1), header.number, 1);
    }
    std::vector<bgep::Edge> edges;
    edges.reserve(static_cast<std::size_t>(count));
    std::unordered_set<std::int64_t> seen;
    for (std::int64_t i = 0; i < count; ++i) {
        const Line& line = lines[static_cast<std::size_t>(i) + 1];
        if (line.tokens.size() != 2) {
            throw ParseError("edge line must be exactly 'u v'", line.number,
                             line.tokens[0].column);
        }
        auto u = static_cast<std::int32_t>(parse_int(line.tokens[0], line.number,
                                                     "left vertex", 0, left - 1));
        auto v = static_cast<std::int32_t>(parse_int(line.tokens[1], line.number,
                                                     "right vertex", 0, right - 1));
        if (!seen.insert(static_cast<std::int64_t>(u) * right + v).second) {
            throw ParseError("duplicate edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")", line.number,
                             line.tokens[0].column);
        }
        edges.emplace_back(u, v);
    }
    return bgep::BgepInstance(left, right, std::move(edges));
}

std::string write_edge_list(const bgep::BgepInstance& graph) {
    std::string out = std::to_string(graph.left) + " " + std::to_string(graph.right) +
                      " " + std::to_string(graph.edges.size()) + "\n";
    for (const bgep::Edge& e : graph.edges) {
        out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
    }
    return out;
}

CfpInstance generate(int m, int p, const Rational& density, std::uint64_t seed) {
    if (m < 1 || p < 1) throw DomainError("matrix dimensions must be positive");
    if (density < Rational(0, 1) || Rational(1, 1) < density) {
        throw DomainError("density must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::uint64_t num = static_cast<std::uint64_t>(density.num());
    std::uint64_t den = static_cast<std::uint64_t>(density.den());
    std::vector<std::uint8_t> data(static_cast<std::size_t>(m) * p);
    for (std::uint8_t& cell : data) {
        cell = rng() % den < num ? 1 : 0;
    }
    return CfpInstance(BoolMatrix(m, p, std::move(data)));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw InputError("cannot read file: " + path);
    return buffer.str();
}

}  // namespace cfp::io
