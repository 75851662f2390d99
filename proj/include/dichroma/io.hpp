#pragma once

#include <string>

#include "dichroma/colouring.hpp"
#include "dichroma/digraph.hpp"

namespace dichroma {

/// Digraph file grammar (UTF-8, newline-delimited):
///   c <text>        comment, anywhere
///   p dgr <n> <m>   exactly one header, before any arc line
///   a <u> <v>       exactly m arc lines, 1 <= u,v <= n, u != v
/// Vertex ids are 1-based in files and 0-based in memory; the shift happens
/// here and nowhere else.
Digraph parse_digraph(const std::string& text);

/// Header plus arcs sorted lexicographically. parse(serialize(d)) == d.
std::string serialize_digraph(const Digraph& d);

/// Colouring file grammar:
///   s dicol <n> <k>
///   v <vertex> <colour>   n lines, each vertex exactly once, 0 <= colour < k
Colouring parse_colouring(const std::string& text);

std::string serialize_colouring(const Colouring& col);

}  // namespace dichroma
