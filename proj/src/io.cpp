#include "dichroma/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace dichroma {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string tok;
    while (stream >> tok) tokens.push_back(tok);
    return tokens;
}

long parse_int(const std::string& tok, int line_no, const char* what) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string("expected an integer ") + what + ", got '" + tok +
                                      "'");
    return value;
}

}  // namespace

Digraph parse_digraph(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    long n = 0, m = 0, arcs_seen = 0;
    std::vector<std::pair<int, int>> arcs;

    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (header_seen) throw ParseError(line_no, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "dgr")
                throw ParseError(line_no, "header must read 'p dgr <n> <m>'");
            n = parse_int(tokens[2], line_no, "for the vertex count");
            m = parse_int(tokens[3], line_no, "for the arc count");
            if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
            header_seen = true;
            continue;
        }
        if (tokens[0] == "a") {
            if (!header_seen) throw ParseError(line_no, "arc line before the header");
            if (tokens.size() != 3) throw ParseError(line_no, "arc line must read 'a <u> <v>'");
            const long u = parse_int(tokens[1], line_no, "for the arc tail");
            const long v = parse_int(tokens[2], line_no, "for the arc head");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            if (++arcs_seen > m) throw ParseError(line_no, "more arc lines than the header declares");
            arcs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError(line_no, "unrecognised line '" + line + "'");
    }
    if (!header_seen) throw ParseError(0, "missing 'p dgr' header");
    if (arcs_seen != m)
        throw ParseError(0, "header declares " + std::to_string(m) + " arcs but the file has " +
                                std::to_string(arcs_seen));
    return Digraph(static_cast<int>(n), arcs);
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "p dgr " << d.n() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) out << "a " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Colouring parse_colouring(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    long n = 0, k = 0;
    std::vector<int> assignment;
    long assigned = 0;

    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c") continue;
        if (tokens[0] == "s") {
            if (header_seen) throw ParseError(line_no, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "dicol")
                throw ParseError(line_no, "header must read 's dicol <n> <k>'");
            n = parse_int(tokens[2], line_no, "for the vertex count");
            k = parse_int(tokens[3], line_no, "for the colour count");
            if (n < 0 || k < 0) throw ParseError(line_no, "negative count in header");
            assignment.assign(n, -1);
            header_seen = true;
            continue;
        }
        if (tokens[0] == "v") {
            if (!header_seen) throw ParseError(line_no, "vertex line before the header");
            if (tokens.size() != 3)
                throw ParseError(line_no, "vertex line must read 'v <vertex> <colour>'");
            const long v = parse_int(tokens[1], line_no, "for the vertex");
            const long c = parse_int(tokens[2], line_no, "for the colour");
            if (v < 1 || v > n)
                throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
            if (c < 0 || c >= k)
                throw ParseError(line_no, "colour out of range 0.." + std::to_string(k - 1));
            if (assignment[v - 1] != -1)
                throw ParseError(line_no, "vertex " + std::to_string(v) + " coloured twice");
            assignment[v - 1] = static_cast<int>(c);
            ++assigned;
            continue;
        }
        throw ParseError(line_no, "unrecognised line '" + line + "'");
    }
    if (!header_seen) throw ParseError(0, "missing 's dicol' header");
    if (assigned != n)
        throw ParseError(0, "header declares " + std::to_string(n) + " vertices but only " +
                                std::to_string(assigned) + " are coloured");
    return Colouring(static_cast<int>(n), assignment);
}

std::string serialize_colouring(const Colouring& col) {
    if (!col.total()) throw ContractViolation("cannot serialize a partial colouring");
    std::ostringstream out;
    out << "s dicol " << col.size() << ' ' << col.max_colour() + 1 << '\n';
    for (int v = 0; v < col.size(); ++v) out << "v " << v + 1 << ' ' << col.colour(v) << '\n';
    return out.str();
}

}  // namespace dichroma
