#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "dichroma/digraph.hpp"

namespace dichroma::selfcheck {

/// Independent reference implementations used as oracles by the self-test
/// suite. Deliberately plain (sets and nested loops) and kept apart from the
/// code paths they check.

struct ReferenceLevels {
    std::vector<std::set<int>> plus, minus, combined;
};

ReferenceLevels reference_level_sets(const Digraph& d, const std::set<int>& base, int depth);

std::optional<std::pair<int, int>> digon_pairwise_scan(const Digraph& d);
std::optional<std::array<int, 3>> triangle_triple_scan(const Digraph& d);
std::optional<std::array<int, 6>> p6_tuple_scan(const Digraph& d);
std::optional<std::array<int, 5>> c32_tuple_scan(const Digraph& d);

/// Minimum odd length over all simple directed cycles, by full enumeration.
std::optional<int> min_odd_cycle_by_enumeration(const Digraph& d);

/// Maximum vertex count of a directed path using only backward arcs of the
/// given order, by exhaustive path extension.
int longest_backward_path_by_enumeration(const Digraph& d, const std::vector<int>& order);

bool dipolar_by_definition(const Digraph& d, const VertexSet& s);

}  // namespace dichroma::selfcheck
