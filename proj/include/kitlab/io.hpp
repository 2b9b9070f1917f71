// Text serialization of complexes and regions.
//
// Complex format (UTF-8, one record per line, '#' starts a comment):
//   complex d=<modulus> genus=<g>
//   v <id>
//   e <id> <tail> <head>
//   f <id> <+edge|-edge> ...      edges in traversal order, sign = face-relative
// Region format:
//   region <edge-id> <edge-id> ...
#pragma once

#include "kitlab/cell_complex.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kitlab {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

struct ValidationError : std::runtime_error {
    std::vector<std::string> issues;
    explicit ValidationError(std::vector<std::string> issues_)
        : std::runtime_error(join(issues_)), issues(std::move(issues_)) {}

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "complex failed validation:";
        for (const auto& i : v) s += "\n  " + i;
        return s;
    }
};

inline std::string save_complex(const CellComplex& c) {
    std::ostringstream out;
    out << "complex d=" << c.default_modulus << " genus=" << c.genus() << "\n";
    for (int v = 0; v < c.num_vertices; ++v) out << "v " << v << "\n";
    for (int e = 0; e < c.num_edges(); ++e)
        out << "e " << e << " " << c.edges[e].tail << " " << c.edges[e].head << "\n";
    for (int f = 0; f < c.num_faces(); ++f) {
        out << "f " << f;
        for (auto [e, s] : c.faces[f].edges) out << " " << (s > 0 ? "+" : "-") << e;
        out << "\n";
    }
    return out.str();
}

namespace detail {

struct LineTokens {
    std::vector<std::string> tokens;
    std::vector<int> columns;
};

inline LineTokens tokenize(const std::string& line) {
    LineTokens out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
        out.tokens.push_back(line.substr(start, i - start));
        out.columns.push_back(static_cast<int>(start) + 1);
    }
    return out;
}

inline int parse_int(const std::string& tok, int line, int col) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, col, "expected integer, got '" + tok + "'");
    return value;
}

} // namespace detail

inline CellComplex load_complex(const std::string& text) {
    CellComplex c;
    bool saw_header = false;
    int expected_vertices = 0;
    std::vector<std::pair<int, EdgeRec>> edge_lines;
    std::vector<std::pair<int, FaceRec>> face_lines;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto lt = detail::tokenize(line);
        if (lt.tokens.empty()) continue;
        const std::string& kind = lt.tokens[0];
        if (kind == "complex") {
            saw_header = true;
            for (size_t i = 1; i < lt.tokens.size(); ++i) {
                const std::string& t = lt.tokens[i];
                auto eq = t.find('=');
                if (eq == std::string::npos)
                    throw ParseError(lineno, lt.columns[i], "expected key=value, got '" + t + "'");
                std::string key = t.substr(0, eq), val = t.substr(eq + 1);
                int v = detail::parse_int(val, lineno, lt.columns[i] + static_cast<int>(eq) + 1);
                if (key == "d") {
                    if (v < 2) throw ParseError(lineno, lt.columns[i], "modulus must be >= 2");
                    c.default_modulus = v;
                } else if (key == "genus") {
                    c.declared_genus = v;
                } else {
                    throw ParseError(lineno, lt.columns[i], "unknown key '" + key + "'");
                }
            }
        } else if (kind == "v") {
            if (lt.tokens.size() != 2)
                throw ParseError(lineno, lt.columns[0], "vertex line needs one id");
            int id = detail::parse_int(lt.tokens[1], lineno, lt.columns[1]);
            if (id != expected_vertices)
                throw ParseError(lineno, lt.columns[1],
                                 "vertex ids must be dense from 0, expected " +
                                     std::to_string(expected_vertices));
            ++expected_vertices;
        } else if (kind == "e") {
            if (lt.tokens.size() != 4)
                throw ParseError(lineno, lt.columns[0], "edge line needs id, tail, head");
            int id = detail::parse_int(lt.tokens[1], lineno, lt.columns[1]);
            int tail = detail::parse_int(lt.tokens[2], lineno, lt.columns[2]);
            int head = detail::parse_int(lt.tokens[3], lineno, lt.columns[3]);
            if (id != static_cast<int>(edge_lines.size()))
                throw ParseError(lineno, lt.columns[1], "edge ids must be dense from 0");
            edge_lines.push_back({lineno, {tail, head}});
        } else if (kind == "f") {
            if (lt.tokens.size() < 3)
                throw ParseError(lineno, lt.columns[0], "face line needs id and edges");
            int id = detail::parse_int(lt.tokens[1], lineno, lt.columns[1]);
            if (id != static_cast<int>(face_lines.size()))
                throw ParseError(lineno, lt.columns[1], "face ids must be dense from 0");
            FaceRec f;
            for (size_t i = 2; i < lt.tokens.size(); ++i) {
                const std::string& t = lt.tokens[i];
                int sign = 1;
                std::string digits = t;
                if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
                    sign = t[0] == '-' ? -1 : 1;
                    digits = t.substr(1);
                }
                f.edges.push_back({detail::parse_int(digits, lineno, lt.columns[i]), sign});
            }
            face_lines.push_back({lineno, std::move(f)});
        } else if (kind == "region") {
            throw ParseError(lineno, lt.columns[0], "region line inside a complex file");
        } else {
            throw ParseError(lineno, lt.columns[0], "unknown record '" + kind + "'");
        }
    }
    if (!saw_header) throw ParseError(1, 1, "missing 'complex' header line");

    c.num_vertices = expected_vertices;
    for (auto& [ln, e] : edge_lines) c.edges.push_back(e);
    for (auto& [ln, f] : face_lines) c.faces.push_back(std::move(f));
    c.finalize();

    auto issues = validate(c);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return c;
}

inline std::string save_region(const Region& r) {
    std::ostringstream out;
    out << "region";
    for (int e : r.edges) out << " " << e;
    out << "\n";
    return out.str();
}

inline Region load_region(const std::string& text, const CellComplex& c) {
    Region r;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto lt = detail::tokenize(line);
        if (lt.tokens.empty()) continue;
        if (lt.tokens[0] != "region")
            throw ParseError(lineno, lt.columns[0], "expected 'region' record");
        saw = true;
        for (size_t i = 1; i < lt.tokens.size(); ++i) {
            int e = detail::parse_int(lt.tokens[i], lineno, lt.columns[i]);
            if (e < 0 || e >= c.num_edges())
                throw ParseError(lineno, lt.columns[i],
                                 "edge id " + std::to_string(e) + " out of range");
            r.edges.insert(e);
        }
    }
    if (!saw) throw ParseError(1, 1, "missing 'region' record");
    return r;
}

} // namespace kitlab
