#include "dichroma/witness.hpp"

#include <algorithm>
#include <climits>
#include <queue>

namespace dichroma {

std::string to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::Digon: return "digon";
        case WitnessKind::Triangle: return "triangle";
        case WitnessKind::InducedP6: return "p6";
        case WitnessKind::InducedC32: return "c32";
    }
    return "?";
}

std::string to_string(P4Shape shape) {
    switch (shape) {
        case P4Shape::OutPath: return "out-path";
        case P4Shape::InPath: return "in-path";
        case P4Shape::C4: return "c4";
    }
    return "?";
}

std::optional<ForbiddenWitness> find_digon(const Digraph& d) {
    for (int u = 0; u < d.n(); ++u)
        for (int v : d.out(u))
            if (v > u && d.has_arc(v, u))
                return ForbiddenWitness{WitnessKind::Digon, {u, v}};
    return std::nullopt;
}

std::optional<ForbiddenWitness> find_triangle(const Digraph& d) {
    for (int u = 0; u < d.n(); ++u) {
        const VertexSet adj_u = d.underlying_mask(u);
        for (int v = u + 1; v < d.n(); ++v) {
            if (!adj_u.contains(v)) continue;
            VertexSet common = adj_u & d.underlying_mask(v);
            int w = -1;
            common.for_each([&](int x) {
                if (x > v && w == -1) w = x;
            });
            if (w != -1) return ForbiddenWitness{WitnessKind::Triangle, {u, v, w}};
        }
    }
    return std::nullopt;
}

namespace {

struct P6Dfs {
    const Digraph& d;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exceeded = false;
    std::vector<int> path;

    bool on_path(int w) const {
        return std::find(path.begin(), path.end(), w) != path.end();
    }

    bool extend() {
        if (path.size() == 6) return true;
        const int tail = path.back();
        for (int w : d.out(tail)) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            if (on_path(w)) continue;
            if (d.has_arc(w, tail)) continue;  // anti-parallel arc breaks inducedness
            bool clean = true;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (d.adjacent(w, path[i])) {
                    clean = false;
                    break;
                }
            if (!clean) continue;
            path.push_back(w);
            if (extend()) return true;
            if (exceeded) return false;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

PatternSearch find_induced_p6(const Digraph& d, std::uint64_t node_budget) {
    if (d.n() < 6) return {SearchOutcome::Absent, std::nullopt};
    P6Dfs dfs{d, node_budget};
    for (int v = 0; v < d.n(); ++v) {
        dfs.path.assign(1, v);
        if (dfs.extend())
            return {SearchOutcome::Found, ForbiddenWitness{WitnessKind::InducedP6, dfs.path}};
        if (dfs.exceeded) return {SearchOutcome::BudgetExceeded, std::nullopt};
    }
    return {SearchOutcome::Absent, std::nullopt};
}

std::optional<ForbiddenWitness> find_induced_c32(const Digraph& d) {
    for (int u = 0; u < d.n(); ++u) {
        for (int v1 : d.out(u)) {
            if (d.has_arc(v1, u)) continue;
            for (int v2 : d.out(v1)) {
                if (v2 == u || d.has_arc(v2, v1) || d.adjacent(u, v2)) continue;
                for (int w1 : d.out(u)) {
                    if (w1 == v1 || w1 == v2 || d.has_arc(w1, u)) continue;
                    if (d.adjacent(w1, v1) || d.adjacent(w1, v2)) continue;
                    for (int w2 : d.out(w1)) {
                        if (w2 == u || w2 == v1 || w2 == v2) continue;
                        if (!d.has_arc(v2, w2)) continue;
                        if (d.has_arc(w2, w1) || d.has_arc(w2, v2)) continue;
                        if (d.adjacent(w2, u) || d.adjacent(w2, v1)) continue;
                        return ForbiddenWitness{WitnessKind::InducedC32, {u, v1, v2, w1, w2}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// Shortest walk lengths from (start, parity 0) over states (vertex, parity).
// Returns dist indexed [v * 2 + parity]; -1 when unreachable.
std::vector<int> parity_bfs(const Digraph& d, int start, std::vector<int>* parent) {
    std::vector<int> dist(d.n() * 2, -1);
    if (parent) parent->assign(d.n() * 2, -1);
    std::queue<int> queue;
    dist[start * 2] = 0;
    queue.push(start * 2);
    while (!queue.empty()) {
        const int state = queue.front();
        queue.pop();
        const int v = state / 2, parity = state % 2;
        for (int w : d.out(v)) {
            const int next = w * 2 + (1 - parity);
            if (dist[next] == -1) {
                dist[next] = dist[state] + 1;
                if (parent) (*parent)[next] = state;
                queue.push(next);
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<OddCycle> min_odd_cycle(const Digraph& d) {
    const int n = d.n();
    int best_len = INT_MAX, best_start = -1;
    for (int s = 0; s < n; ++s) {
        const std::vector<int> dist = parity_bfs(d, s, nullptr);
        const int odd = dist[s * 2 + 1];
        if (odd != -1 && odd < best_len) {
            best_len = odd;
            best_start = s;
            if (best_len == 3) break;  // nothing shorter is possible without loops
        }
    }
    if (best_start == -1) return std::nullopt;

    // Recover a closed odd walk of minimum length, then peel repeated
    // vertices off it. Every excised even loop is discarded; the odd piece
    // that remains is a directed cycle and cannot be shorter than the walk,
    // because it would itself be a shorter odd closed walk.
    std::vector<int> parent;
    parity_bfs(d, best_start, &parent);
    std::vector<int> walk;
    for (int state = best_start * 2 + 1; state != -1; state = parent[state])
        walk.push_back(state / 2);
    std::reverse(walk.begin(), walk.end());  // w_0 = start ... w_L = start

    std::vector<int> stack{walk[0]};
    std::vector<int> pos(n, -1);
    pos[walk[0]] = 0;
    for (std::size_t t = 1; t < walk.size(); ++t) {
        const int v = walk[t];
        if (pos[v] != -1) {
            const int p = pos[v];
            const int len = static_cast<int>(stack.size()) - p;
            if (len % 2 == 1) {
                std::vector<int> cycle(stack.begin() + p, stack.end());
                if (len != best_len)
                    throw InternalError("odd piece of a minimum odd closed walk has length " +
                                        std::to_string(len) + ", expected " +
                                        std::to_string(best_len));
                return OddCycle{std::move(cycle), true};
            }
            while (static_cast<int>(stack.size()) > p + 1) {
                pos[stack.back()] = -1;
                stack.pop_back();
            }
        } else {
            pos[v] = static_cast<int>(stack.size());
            stack.push_back(v);
        }
    }
    throw InternalError("odd closed walk decomposed into even cycles only");
}

namespace {

// Core of the induced-P4 search: `a` has at least one arc into the cycle.
// Rotate so the earliest in-cycle target of `a` is first, take the furthest
// odd position the arcs of `a` reach, and read off the next three vertices.
P4Certificate certificate_with_arc_into_cycle(const Digraph& d, const std::vector<int>& cyc,
                                              int a) {
    const int len = static_cast<int>(cyc.size());
    int anchor = -1;
    for (int i = 0; i < len; ++i)
        if (d.has_arc(a, cyc[i])) {
            anchor = i;
            break;
        }
    auto rot = [&](int offset) { return cyc[(anchor + offset) % len]; };

    const int k = (len - 1) / 2;
    int best_p = 0;
    for (int p = k - 1; p >= 1; --p)
        if (d.has_arc(a, rot(2 * p))) {
            best_p = p;
            break;
        }
    const int b = rot(2 * best_p), c = rot(2 * best_p + 1), dd = rot(2 * best_p + 2);
    const P4Shape shape = d.has_arc(dd, a) ? P4Shape::C4 : P4Shape::OutPath;
    return P4Certificate{shape, a, b, c, dd};
}

std::string vertex_list(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += std::to_string(v) + " ";
    if (!s.empty()) s.pop_back();
    return s;
}

}  // namespace

P4Certificate find_p4_certificate(const Digraph& d, const OddCycle& c, int a) {
    if (auto digon = find_digon(d))
        throw ContractViolation("digraph has a digon: " + vertex_list(digon->vertices));
    if (auto tri = find_triangle(d))
        throw ContractViolation("digraph has a triangle: " + vertex_list(tri->vertices));
    if (!cycle_holds(d, c))
        throw ContractViolation("not an odd directed cycle: " + vertex_list(c.vertices));
    if (std::find(c.vertices.begin(), c.vertices.end(), a) != c.vertices.end())
        throw ContractViolation("vertex " + std::to_string(a) + " lies on the cycle");

    bool sends = false, receives = false;
    for (int x : c.vertices) {
        sends = sends || d.has_arc(a, x);
        receives = receives || d.has_arc(x, a);
    }
    if (!sends && !receives)
        throw ContractViolation("vertex " + std::to_string(a) + " is not adjacent to the cycle");

    P4Certificate cert;
    if (sends) {
        cert = certificate_with_arc_into_cycle(d, c.vertices, a);
    } else {
        // Only arcs from the cycle to `a`: run the same search on the
        // reverse digraph and map the roles back.
        Digraph rd = reverse(d);
        std::vector<int> rcyc;
        rcyc.push_back(c.vertices[0]);
        for (int i = static_cast<int>(c.vertices.size()) - 1; i >= 1; --i)
            rcyc.push_back(c.vertices[i]);
        const P4Certificate rcert = certificate_with_arc_into_cycle(rd, rcyc, a);
        cert.a = a;
        cert.b = rcert.d;
        cert.c = rcert.c;
        cert.d = rcert.b;
        cert.shape = rcert.shape == P4Shape::C4 ? P4Shape::C4 : P4Shape::InPath;
    }
    if (!certificate_holds(d, c, a, cert))
        throw InternalError("constructed certificate failed re-verification (a=" +
                            std::to_string(a) + ", cycle " + vertex_list(c.vertices) + ")");
    return cert;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

bool distinct(const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool in_range(const Digraph& d, const std::vector<int>& vs) {
    return std::all_of(vs.begin(), vs.end(), [&](int v) { return v >= 0 && v < d.n(); });
}

// The subdigraph induced on `vs` consists of exactly `arcs` (role indices).
bool exact_arcs(const Digraph& d, const std::vector<int>& vs,
                const std::vector<std::pair<int, int>>& arcs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (i == j) continue;
            const bool want =
                std::find(arcs.begin(), arcs.end(),
                          std::make_pair(static_cast<int>(i), static_cast<int>(j))) != arcs.end();
            if (d.has_arc(vs[i], vs[j]) != want) return false;
        }
    return true;
}

}  // namespace

bool witness_holds(const Digraph& d, const ForbiddenWitness& w) {
    if (!in_range(d, w.vertices) || !distinct(w.vertices)) return false;
    const auto& v = w.vertices;
    switch (w.kind) {
        case WitnessKind::Digon:
            return v.size() == 2 && d.has_arc(v[0], v[1]) && d.has_arc(v[1], v[0]);
        case WitnessKind::Triangle:
            return v.size() == 3 && d.adjacent(v[0], v[1]) && d.adjacent(v[0], v[2]) &&
                   d.adjacent(v[1], v[2]);
        case WitnessKind::InducedP6:
            return v.size() == 6 &&
                   exact_arcs(d, v, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
        case WitnessKind::InducedC32:
            return v.size() == 5 &&
                   exact_arcs(d, v, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    }
    return false;
}

bool cycle_holds(const Digraph& d, const OddCycle& c) {
    const auto& v = c.vertices;
    if (v.size() < 3 || v.size() % 2 == 0) return false;
    if (!in_range(d, v) || !distinct(v)) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!d.has_arc(v[i], v[(i + 1) % v.size()])) return false;
    return true;
}

bool certificate_holds(const Digraph& d, const OddCycle& c, int a, const P4Certificate& cert) {
    if (cert.a != a) return false;
    const auto& cyc = c.vertices;
    const auto it = std::find(cyc.begin(), cyc.end(), cert.b);
    if (it == cyc.end()) return false;
    const std::size_t i = static_cast<std::size_t>(it - cyc.begin());
    if (cyc[(i + 1) % cyc.size()] != cert.c || cyc[(i + 2) % cyc.size()] != cert.d) return false;

    const int b = cert.b, cc = cert.c, dd = cert.d;
    switch (cert.shape) {
        case P4Shape::OutPath:
            return exact_arcs(d, {a, b, cc, dd}, {{0, 1}, {1, 2}, {2, 3}});
        case P4Shape::InPath:
            return exact_arcs(d, {b, cc, dd, a}, {{0, 1}, {1, 2}, {2, 3}});
        case P4Shape::C4:
            return d.has_arc(a, b) && d.has_arc(b, cc) && d.has_arc(cc, dd) && d.has_arc(dd, a);
    }
    return false;
}

}  // namespace dichroma
