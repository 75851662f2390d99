#pragma once

#include <optional>
#include <vector>

#include "dichroma/digraph.hpp"

namespace dichroma {

/// Iterated out-/in-neighbourhood levels of a base set. Level 0 is the base
/// itself; level k collects the out-neighbours of the previous plus level
/// (resp. in-neighbours of the previous minus level) with every lower level
/// subtracted, so levels are pairwise disjoint. plus_levels[k] and
/// minus_levels[k] may overlap; levels[k] is their union.
///
/// Every vertex of plus_levels[k] carries a witness: a directed path from the
/// base reaching it whose i-th vertex lies in plus_levels[i]. Minus witnesses
/// run from the vertex down to the base, mirrored.
struct LevelStructure {
    VertexSet base;
    int depth = 0;
    std::vector<VertexSet> plus_levels, minus_levels, levels;  // size depth+1

    // Next hop towards the base; -1 for base vertices and vertices in no level.
    std::vector<int> plus_parent, minus_parent;

    /// k such that v is in levels[k], if any.
    std::optional<int> level_of(int v) const;

    /// For v in plus_levels[k]: path x_0 .. x_k with x_k = v, arcs forward,
    /// x_i in plus_levels[i].
    std::vector<int> plus_witness_path(int v) const;

    /// For v in minus_levels[k]: path v .. x_0 with arcs forward along the
    /// returned sequence and the vertex at distance i from the end in
    /// minus_levels[i].
    std::vector<int> minus_witness_path(int v) const;
};

/// Computes the level structure of `base` up to `depth`. Base must be
/// nonempty. Witness parents pick the lowest-numbered eligible neighbour in
/// the previous level, so results are deterministic.
LevelStructure level_sets(const Digraph& d, const VertexSet& base, int depth);

}  // namespace dichroma
