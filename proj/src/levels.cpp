#include "dichroma/levels.hpp"

#include <algorithm>

namespace dichroma {

std::optional<int> LevelStructure::level_of(int v) const {
    for (int k = 0; k <= depth; ++k)
        if (levels[k].contains(v)) return k;
    return std::nullopt;
}

std::vector<int> LevelStructure::plus_witness_path(int v) const {
    int k = -1;
    for (int i = 0; i <= depth; ++i)
        if (plus_levels[i].contains(v)) {
            k = i;
            break;
        }
    if (k < 0) throw ContractViolation("vertex " + std::to_string(v) + " has no plus level");
    std::vector<int> path{v};
    for (int i = k; i > 0; --i) path.push_back(plus_parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> LevelStructure::minus_witness_path(int v) const {
    int k = -1;
    for (int i = 0; i <= depth; ++i)
        if (minus_levels[i].contains(v)) {
            k = i;
            break;
        }
    if (k < 0) throw ContractViolation("vertex " + std::to_string(v) + " has no minus level");
    std::vector<int> path{v};
    for (int i = k; i > 0; --i) path.push_back(minus_parent[path.back()]);
    return path;
}

LevelStructure level_sets(const Digraph& d, const VertexSet& base, int depth) {
    if (base.universe() != d.n())
        throw ContractViolation("level_sets: base universe does not match digraph");
    if (base.empty()) throw ContractViolation("level_sets: base must be nonempty");
    if (depth < 0) throw ContractViolation("level_sets: depth must be >= 0");

    LevelStructure ls;
    ls.base = base;
    ls.depth = depth;
    ls.plus_levels.assign(depth + 1, VertexSet(d.n()));
    ls.minus_levels.assign(depth + 1, VertexSet(d.n()));
    ls.levels.assign(depth + 1, VertexSet(d.n()));
    ls.plus_levels[0] = ls.minus_levels[0] = ls.levels[0] = base;
    ls.plus_parent.assign(d.n(), -1);
    ls.minus_parent.assign(d.n(), -1);

    VertexSet assigned = base;  // union of levels 0..k-1
    for (int k = 1; k <= depth; ++k) {
        VertexSet plus(d.n());
        ls.plus_levels[k - 1].for_each([&](int u) {
            for (int v : d.out(u))
                if (!assigned.contains(v)) plus.add(v);
        });
        VertexSet minus(d.n());
        ls.minus_levels[k - 1].for_each([&](int u) {
            for (int v : d.in(u))
                if (!assigned.contains(v)) minus.add(v);
        });
        plus.for_each([&](int v) {
            for (int u : d.in(v))
                if (ls.plus_levels[k - 1].contains(u)) {
                    ls.plus_parent[v] = u;
                    break;
                }
        });
        minus.for_each([&](int v) {
            for (int u : d.out(v))
                if (ls.minus_levels[k - 1].contains(u)) {
                    ls.minus_parent[v] = u;
                    break;
                }
        });
        ls.plus_levels[k] = plus;
        ls.minus_levels[k] = minus;
        ls.levels[k] = plus | minus;
        assigned |= ls.levels[k];
    }
    return ls;
}

}  // namespace dichroma
