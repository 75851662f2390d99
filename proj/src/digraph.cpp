#include "dichroma/digraph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace dichroma {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int universe) : universe_(universe), bits_((universe + 63) / 64, 0) {
    if (universe < 0) throw ContractViolation("vertex set universe must be non-negative");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) add(v);
}

VertexSet::VertexSet(int universe, const std::vector<int>& members) : VertexSet(universe) {
    for (int v : members) add(v);
}

void VertexSet::check_member(int v) const {
    if (v < 0 || v >= universe_)
        throw ContractViolation("vertex " + std::to_string(v) + " out of range for universe " +
                                std::to_string(universe_));
}

void VertexSet::check_same_universe(const VertexSet& o) const {
    if (universe_ != o.universe_)
        throw ContractViolation("vertex sets over different universes");
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= universe_) return false;
    return (bits_[v / 64] >> (v % 64)) & 1u;
}

void VertexSet::add(int v) {
    check_member(v);
    bits_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::remove(int v) {
    check_member(v);
    bits_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::size() const {
    int total = 0;
    for (std::uint64_t w : bits_) total += __builtin_popcountll(w);
    return total;
}

int VertexSet::first() const {
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] != 0) return static_cast<int>(w * 64) + __builtin_ctzll(bits_[w]);
    return -1;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & o.bits_[i]) return true;
    return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : n_(n) {
    if (n < 0) throw ContractViolation("vertex count must be non-negative");
    std::set<std::pair<int, int>> arc_set;
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ContractViolation("arc (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for " + std::to_string(n) + " vertices");
        if (u == v) throw ContractViolation("loop at vertex " + std::to_string(u));
        arc_set.emplace(u, v);
    }
    out_.assign(n, {});
    in_.assign(n, {});
    out_mask_.assign(n, VertexSet(n));
    in_mask_.assign(n, VertexSet(n));
    for (auto [u, v] : arc_set) {
        out_[u].push_back(v);
        in_[v].push_back(u);
        out_mask_[u].add(v);
        in_mask_[v].add(u);
    }
    for (auto& nb : in_) std::sort(nb.begin(), nb.end());
    arc_count_ = arc_set.size();
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return out_mask_[u].contains(v);
}

bool Digraph::adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) result.emplace_back(u, v);
    return result;
}

VertexSet Digraph::full_set() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) s.add(v);
    return s;
}

bool Digraph::operator==(const Digraph& o) const {
    return n_ == o.n_ && out_ == o.out_;
}

// ---------------------------------------------------------------------------
// Basic operations

int InducedSubdigraph::to_local(int global_id) const {
    auto it = std::lower_bound(to_global.begin(), to_global.end(), global_id);
    if (it == to_global.end() || *it != global_id)
        throw ContractViolation("vertex " + std::to_string(global_id) + " not in induced set");
    return static_cast<int>(it - to_global.begin());
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& x) {
    if (x.universe() != d.n())
        throw ContractViolation("induced set universe does not match digraph");
    InducedSubdigraph result;
    result.to_global = x.members();
    std::vector<int> local(d.n(), -1);
    for (std::size_t i = 0; i < result.to_global.size(); ++i)
        local[result.to_global[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> arcs;
    for (int u : result.to_global)
        for (int v : d.out(u))
            if (local[v] >= 0) arcs.emplace_back(local[u], local[v]);
    result.graph = Digraph(static_cast<int>(result.to_global.size()), arcs);
    return result;
}

Digraph reverse(const Digraph& d) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.arc_count());
    for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
    return Digraph(d.n(), arcs);
}

namespace {

// Iterative Tarjan; components complete in reverse topological order.
struct TarjanState {
    const Digraph& d;
    std::vector<int> index, low;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    std::vector<std::vector<int>> components;

    explicit TarjanState(const Digraph& d_)
        : d(d_), index(d_.n(), -1), low(d_.n(), 0), on_stack(d_.n(), false) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t child = 0;
        };
        std::vector<Frame> frames{{root}};
        visit(root);
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& succ = d.out(f.v);
            if (f.child < succ.size()) {
                const int w = succ[f.child++];
                if (index[w] == -1) {
                    visit(w);
                    frames.push_back({w});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) pop_component(f.v);
                const int finished = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
            }
        }
    }

    void visit(int v) {
        index[v] = low[v] = next_index++;
        on_stack[v] = true;
        stack.push_back(v);
    }

    void pop_component(int root) {
        std::vector<int> comp;
        while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == root) break;
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
};

}  // namespace

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    TarjanState state(d);
    for (int v = 0; v < d.n(); ++v)
        if (state.index[v] == -1) state.run(v);
    std::reverse(state.components.begin(), state.components.end());
    return state.components;
}

std::variant<std::vector<int>, DirectedCycle> topological_order(const Digraph& d) {
    const int n = d.n();
    std::vector<int> in_degree(n, 0);
    for (int v = 0; v < n; ++v) in_degree[v] = static_cast<int>(d.in(v).size());

    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (in_degree[v] == 0) ready.push(v);

    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : d.out(v))
            if (--in_degree[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) == n) return order;

    // Some vertices remain, each with an in-neighbour among the remainder.
    // Walk predecessors until a vertex repeats, then cut out the loop.
    std::vector<bool> remaining(n, false);
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (in_degree[v] > 0) {
            remaining[v] = true;
            if (start == -1) start = v;
        }
    std::vector<int> seen_at(n, -1);
    std::vector<int> walk;
    int v = start;
    while (seen_at[v] == -1) {
        seen_at[v] = static_cast<int>(walk.size());
        walk.push_back(v);
        for (int u : d.in(v))
            if (remaining[u]) {
                v = u;
                break;
            }
    }
    // walk[p..] followed the in-arcs back to v = walk[p]; reading the slice
    // backwards gives a forward directed cycle.
    const int p = seen_at[v];
    DirectedCycle cycle;
    cycle.vertices.push_back(walk[p]);
    for (int i = static_cast<int>(walk.size()) - 1; i > p; --i) cycle.vertices.push_back(walk[i]);
    return cycle;
}

bool is_acyclic(const Digraph& d) {
    return std::holds_alternative<std::vector<int>>(topological_order(d));
}

}  // namespace dichroma
