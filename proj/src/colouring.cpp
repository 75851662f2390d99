#include "dichroma/colouring.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dichroma {

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += std::to_string(v) + " ";
    if (!s.empty()) s.pop_back();
    return s;
}

}  // namespace

Colouring::Colouring(int n, std::vector<int> assignment) : colour_(std::move(assignment)) {
    if (static_cast<int>(colour_.size()) != n)
        throw ContractViolation("colouring covers " + std::to_string(colour_.size()) +
                                " vertices, digraph has " + std::to_string(n));
    for (int c : colour_)
        if (c < -1) throw ContractViolation("negative colour in assignment");
}

int Colouring::colour(int v) const {
    if (colour_[v] < 0)
        throw ContractViolation("vertex " + std::to_string(v) + " is uncoloured");
    return colour_[v];
}

void Colouring::set(int v, int c) {
    if (c < 0) throw ContractViolation("colours must be non-negative");
    colour_.at(v) = c;
}

bool Colouring::total() const {
    return std::all_of(colour_.begin(), colour_.end(), [](int c) { return c >= 0; });
}

int Colouring::colours_used() const {
    std::set<int> used;
    for (int c : colour_)
        if (c >= 0) used.insert(c);
    return static_cast<int>(used.size());
}

int Colouring::max_colour() const {
    int best = -1;
    for (int c : colour_) best = std::max(best, c);
    return best;
}

VertexSet Colouring::domain() const {
    VertexSet s(size());
    for (int v = 0; v < size(); ++v)
        if (colour_[v] >= 0) s.add(v);
    return s;
}

VertexSet Colouring::colour_class(int c) const {
    VertexSet s(size());
    for (int v = 0; v < size(); ++v)
        if (colour_[v] == c) s.add(v);
    return s;
}

std::optional<MonochromaticCycle> verify_colouring(const Digraph& d, const Colouring& col) {
    if (col.size() != d.n())
        throw ContractViolation("colouring size does not match digraph");
    if (!col.total()) throw ContractViolation("colouring is not total");

    std::set<int> used;
    for (int v = 0; v < d.n(); ++v) used.insert(col.colour(v));
    for (int c : used) {
        const InducedSubdigraph sub = induced_subdigraph(d, col.colour_class(c));
        auto result = topological_order(sub.graph);
        if (auto* cycle = std::get_if<DirectedCycle>(&result)) {
            MonochromaticCycle mono{c, {}};
            for (int v : cycle->vertices) mono.vertices.push_back(sub.to_global[v]);
            return mono;
        }
    }
    return std::nullopt;
}

std::variant<Colouring, OddCycle> two_colour_no_odd(const Digraph& d) {
    Colouring col(d.n());
    for (const auto& comp : strong_components(d)) {
        if (comp.size() == 1) {
            col.set(comp[0], 0);
            continue;
        }
        const InducedSubdigraph sub = induced_subdigraph(d, VertexSet(d.n(), comp));

        // The component is strongly connected, so its underlying graph is
        // connected; try to 2-colour it by breadth-first search.
        const int m = sub.graph.n();
        std::vector<int> side(m, -1);
        std::vector<int> queue{0};
        side[0] = 0;
        bool bipartite = true;
        for (std::size_t head = 0; head < queue.size() && bipartite; ++head) {
            const int v = queue[head];
            const VertexSet nb = sub.graph.underlying_mask(v);
            nb.for_each([&](int w) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    bipartite = false;
                }
            });
        }
        if (!bipartite) {
            // An odd cycle in the underlying graph of a strong component
            // forces an odd directed cycle within it.
            if (auto odd = min_odd_cycle(sub.graph)) {
                OddCycle global;
                for (int v : odd->vertices) global.vertices.push_back(sub.to_global[v]);
                global.minimal = false;  // other components may hold shorter ones
                return global;
            }
            throw InternalError("strong component is not bipartite yet has no odd directed cycle");
        }
        for (int v = 0; v < m; ++v) col.set(sub.to_global[v], side[v]);
    }
    return col;
}

OrderColouring order_to_colouring(const Digraph& d, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != d.n())
        throw ContractViolation("order does not cover all vertices");
    std::vector<int> pos(d.n(), -1);
    for (int i = 0; i < d.n(); ++i) {
        const int v = order[i];
        if (v < 0 || v >= d.n() || pos[v] != -1)
            throw ContractViolation("order is not a permutation of the vertices");
        pos[v] = i;
    }

    // f(v) = max vertices on a directed path of backward arcs ending at v.
    // Backward arcs strictly decrease position, so scanning positions from
    // last to first sees every predecessor's value before it is needed.
    std::vector<int> f(d.n(), 1);
    int k = d.n() == 0 ? 0 : 1;
    for (int i = d.n() - 1; i >= 0; --i) {
        const int v = order[i];
        for (int u : d.in(v))
            if (pos[u] > i) f[v] = std::max(f[v], f[u] + 1);
        k = std::max(k, f[v]);
    }
    Colouring col(d.n());
    for (int v = 0; v < d.n(); ++v) col.set(v, f[v] - 1);
    return OrderColouring{std::move(col), d.n() == 0 ? 0 : k};
}

std::vector<int> colouring_to_order(const Digraph& d, const Colouring& col) {
    if (auto mono = verify_colouring(d, col))
        throw ContractViolation("colouring is invalid: monochromatic cycle " +
                                vertex_list(mono->vertices) + " in colour " +
                                std::to_string(mono->colour));
    std::set<int> used;
    for (int v = 0; v < d.n(); ++v) used.insert(col.colour(v));

    std::vector<int> order;
    order.reserve(d.n());
    for (int c : used) {
        const InducedSubdigraph sub = induced_subdigraph(d, col.colour_class(c));
        const auto topo = std::get<std::vector<int>>(topological_order(sub.graph));
        for (int v : topo) order.push_back(sub.to_global[v]);
    }
    return order;
}

std::variant<DipolarCertificate, int> is_dipolar(const Digraph& d, const VertexSet& s) {
    if (s.universe() != d.n())
        throw ContractViolation("set universe does not match digraph");
    DipolarCertificate cert{s, VertexSet(d.n()), VertexSet(d.n())};
    int violator = -1;
    s.for_each([&](int x) {
        if (violator != -1) return;
        const bool in_inside = d.in_mask(x).subset_of(s);
        const bool out_inside = d.out_mask(x).subset_of(s);
        if (!in_inside && !out_inside) {
            violator = x;
            return;
        }
        if (in_inside) cert.s_plus.add(x);
        if (out_inside) cert.s_minus.add(x);
    });
    if (violator != -1) return violator;
    return cert;
}

Colouring peel(const Digraph& d, const LayerOracle& oracle, int budget) {
    if (budget <= 0) throw ContractViolation("peel budget must be positive");

    Colouring result(d.n());
    VertexSet remaining = d.full_set();
    int layer = 0;
    while (!remaining.empty()) {
        ++layer;
        const InducedSubdigraph sub = induced_subdigraph(d, remaining);
        const LayerPlan plan = oracle(sub.graph, sub.to_global);

        const std::string where = "peel layer " + std::to_string(layer) + ": ";
        if (plan.s.universe() != sub.graph.n())
            throw ContractViolation(where + "layer set universe mismatch");
        if (plan.s.empty()) throw ContractViolation(where + "oracle returned an empty set");
        const auto dip = is_dipolar(sub.graph, plan.s);
        if (auto* bad = std::get_if<int>(&dip))
            throw ContractViolation(where + "layer set is not dipolar, violating vertex " +
                                    std::to_string(sub.to_global[*bad]));
        if (plan.colouring.size() != sub.graph.n() || !(plan.colouring.domain() == plan.s))
            throw ContractViolation(where + "layer colouring does not cover exactly the layer set");
        if (plan.colouring.max_colour() >= budget)
            throw ContractViolation(where + "layer colouring exceeds budget " +
                                    std::to_string(budget));
        const InducedSubdigraph layer_sub = induced_subdigraph(sub.graph, plan.s);
        Colouring layer_col(layer_sub.graph.n());
        for (int v = 0; v < layer_sub.graph.n(); ++v)
            layer_col.set(v, plan.colouring.colour(layer_sub.to_global[v]));
        if (verify_colouring(layer_sub.graph, layer_col))
            throw ContractViolation(where + "layer colouring is not valid");

        // Members with their whole in-neighbourhood (within the current
        // subdigraph) inside the layer keep the layer colour; the rest shift
        // into the upper half of the palette. A directed cycle crossing the
        // layer boundary must visit both halves, so classes stay acyclic.
        const auto& cert = std::get<DipolarCertificate>(dip);
        VertexSet removed(d.n());
        plan.s.for_each([&](int local) {
            const int global = sub.to_global[local];
            const int base = plan.colouring.colour(local);
            result.set(global, cert.s_plus.contains(local) ? base : base + budget);
            removed.add(global);
        });
        remaining -= removed;
    }

    if (!result.total())
        throw InternalError("peel finished with uncoloured vertices");
    if (auto mono = verify_colouring(d, result))
        throw InternalError("peel produced an invalid colouring: cycle " +
                            vertex_list(mono->vertices));
    if (result.colours_used() > 2 * budget)
        throw InternalError("peel exceeded twice its budget");
    return result;
}

}  // namespace dichroma
