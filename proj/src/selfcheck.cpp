#include "dichroma/selfcheck.hpp"

#include <algorithm>

namespace dichroma::selfcheck {

ReferenceLevels reference_level_sets(const Digraph& d, const std::set<int>& base, int depth) {
    ReferenceLevels r;
    r.plus.resize(depth + 1);
    r.minus.resize(depth + 1);
    r.combined.resize(depth + 1);
    r.plus[0] = r.minus[0] = r.combined[0] = base;
    for (int k = 1; k <= depth; ++k) {
        std::set<int> lower;
        for (int i = 0; i < k; ++i) lower.insert(r.combined[i].begin(), r.combined[i].end());
        for (int u : r.plus[k - 1])
            for (int v : d.out(u))
                if (lower.count(v) == 0) r.plus[k].insert(v);
        for (int u : r.minus[k - 1])
            for (int v : d.in(u))
                if (lower.count(v) == 0) r.minus[k].insert(v);
        r.combined[k] = r.plus[k];
        r.combined[k].insert(r.minus[k].begin(), r.minus[k].end());
    }
    return r;
}

std::optional<std::pair<int, int>> digon_pairwise_scan(const Digraph& d) {
    for (int u = 0; u < d.n(); ++u)
        for (int v = u + 1; v < d.n(); ++v)
            if (d.has_arc(u, v) && d.has_arc(v, u)) return std::make_pair(u, v);
    return std::nullopt;
}

std::optional<std::array<int, 3>> triangle_triple_scan(const Digraph& d) {
    for (int a = 0; a < d.n(); ++a)
        for (int b = a + 1; b < d.n(); ++b)
            for (int c = b + 1; c < d.n(); ++c)
                if (d.adjacent(a, b) && d.adjacent(a, c) && d.adjacent(b, c))
                    return std::array<int, 3>{a, b, c};
    return std::nullopt;
}

namespace {

bool induced_path_tuple(const Digraph& d, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (i == j) continue;
            const bool want = j == i + 1;
            if (d.has_arc(vs[i], vs[j]) != want) return false;
        }
    return true;
}

}  // namespace

namespace {

bool all_distinct(const int* vs, int count) {
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (vs[i] == vs[j]) return false;
    return true;
}

}  // namespace

std::optional<std::array<int, 6>> p6_tuple_scan(const Digraph& d) {
    const int n = d.n();
    int vs[6];
    for (vs[0] = 0; vs[0] < n; ++vs[0])
        for (vs[1] = 0; vs[1] < n; ++vs[1]) {
            if (!d.has_arc(vs[0], vs[1])) continue;
            for (vs[2] = 0; vs[2] < n; ++vs[2]) {
                if (!d.has_arc(vs[1], vs[2])) continue;
                for (vs[3] = 0; vs[3] < n; ++vs[3]) {
                    if (!d.has_arc(vs[2], vs[3])) continue;
                    for (vs[4] = 0; vs[4] < n; ++vs[4]) {
                        if (!d.has_arc(vs[3], vs[4])) continue;
                        for (vs[5] = 0; vs[5] < n; ++vs[5]) {
                            if (!d.has_arc(vs[4], vs[5])) continue;
                            if (!all_distinct(vs, 6)) continue;
                            const std::vector<int> tuple(vs, vs + 6);
                            if (induced_path_tuple(d, tuple))
                                return std::array<int, 6>{vs[0], vs[1], vs[2],
                                                          vs[3], vs[4], vs[5]};
                        }
                    }
                }
            }
        }
    return std::nullopt;
}

std::optional<std::array<int, 5>> c32_tuple_scan(const Digraph& d) {
    const int n = d.n();
    int vs[5];
    for (vs[0] = 0; vs[0] < n; ++vs[0])
        for (vs[1] = 0; vs[1] < n; ++vs[1]) {
            if (!d.has_arc(vs[0], vs[1])) continue;
            for (vs[2] = 0; vs[2] < n; ++vs[2]) {
                if (!d.has_arc(vs[1], vs[2])) continue;
                for (vs[3] = 0; vs[3] < n; ++vs[3]) {
                    if (!d.has_arc(vs[0], vs[3])) continue;
                    for (vs[4] = 0; vs[4] < n; ++vs[4]) {
                        if (!d.has_arc(vs[3], vs[4]) || !d.has_arc(vs[2], vs[4])) continue;
                        if (!all_distinct(vs, 5)) continue;
                        bool ok = true;
                        static const std::pair<int, int> wanted[] = {
                            {0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
                        for (int i = 0; i < 5 && ok; ++i)
                            for (int j = 0; j < 5 && ok; ++j) {
                                if (i == j) continue;
                                bool want = false;
                                for (const auto& [a, b] : wanted)
                                    if (a == i && b == j) want = true;
                                if (d.has_arc(vs[i], vs[j]) != want) ok = false;
                            }
                        if (ok)
                            return std::array<int, 5>{vs[0], vs[1], vs[2], vs[3], vs[4]};
                    }
                }
            }
        }
    return std::nullopt;
}

namespace {

// Enumerate simple cycles whose smallest vertex is the start, extending paths
// through larger-or-equal vertices only.
void cycle_dfs(const Digraph& d, int start, int current, std::vector<bool>& on_path, int length,
               std::optional<int>& best_odd) {
    for (int w : d.out(current)) {
        if (w == start) {
            if (length % 2 == 1 && (!best_odd || length < *best_odd)) best_odd = length;
            continue;
        }
        if (w < start || on_path[w]) continue;
        on_path[w] = true;
        cycle_dfs(d, start, w, on_path, length + 1, best_odd);
        on_path[w] = false;
    }
}

}  // namespace

std::optional<int> min_odd_cycle_by_enumeration(const Digraph& d) {
    std::optional<int> best;
    std::vector<bool> on_path(d.n(), false);
    for (int s = 0; s < d.n(); ++s) {
        on_path[s] = true;
        cycle_dfs(d, s, s, on_path, 1, best);
        on_path[s] = false;
    }
    return best;
}

namespace {

int backward_dfs(const Digraph& d, const std::vector<int>& pos, int v) {
    int best = 1;
    for (int w : d.out(v))
        if (pos[v] > pos[w]) best = std::max(best, 1 + backward_dfs(d, pos, w));
    return best;
}

}  // namespace

int longest_backward_path_by_enumeration(const Digraph& d, const std::vector<int>& order) {
    if (d.n() == 0) return 0;
    std::vector<int> pos(d.n());
    for (int i = 0; i < d.n(); ++i) pos[order[i]] = i;
    int best = 1;
    for (int v = 0; v < d.n(); ++v) best = std::max(best, backward_dfs(d, pos, v));
    return best;
}

bool dipolar_by_definition(const Digraph& d, const VertexSet& s) {
    for (int x : s.members()) {
        bool out_inside = true, in_inside = true;
        for (int y : d.out(x))
            if (!s.contains(y)) out_inside = false;
        for (int y : d.in(x))
            if (!s.contains(y)) in_inside = false;
        if (!out_inside && !in_inside) return false;
    }
    return true;
}

}  // namespace dichroma::selfcheck
