#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <variant>
#include <vector>

#include "dichroma/errors.hpp"

namespace dichroma {

/// Dense subset of a fixed vertex universe 0..n-1, stored as a bitmask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);
    VertexSet(int universe, const std::vector<int>& members);

    int universe() const { return universe_; }
    bool contains(int v) const;
    void add(int v);
    void remove(int v);
    int size() const;
    bool empty() const { return size() == 0; }
    int first() const;  // smallest member, -1 when empty
    std::vector<int> members() const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    bool operator==(const VertexSet&) const = default;

    bool intersects(const VertexSet& o) const;
    bool subset_of(const VertexSet& o) const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word != 0) {
                const int bit = __builtin_ctzll(word);
                f(static_cast<int>(w * 64) + bit);
                word &= word - 1;
            }
        }
    }

private:
    void check_member(int v) const;
    void check_same_universe(const VertexSet& o) const;

    int universe_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// A directed cycle given as its vertex sequence; arc v[i] -> v[i+1] for each
/// i and v.back() -> v.front().
struct DirectedCycle {
    std::vector<int> vertices;
};

/// Digraph on vertices 0..n-1. No loops; parallel arcs collapse; digons (both
/// (u,v) and (v,u)) are representable. Immutable once constructed.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

    int n() const { return n_; }
    std::size_t arc_count() const { return arc_count_; }
    bool has_arc(int u, int v) const;
    bool adjacent(int u, int v) const;  // arc in either direction

    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    const VertexSet& out_mask(int v) const { return out_mask_[v]; }
    const VertexSet& in_mask(int v) const { return in_mask_[v]; }
    VertexSet underlying_mask(int v) const { return out_mask_[v] | in_mask_[v]; }

    std::vector<std::pair<int, int>> arcs() const;  // lexicographically sorted
    VertexSet full_set() const;

    bool operator==(const Digraph& o) const;

private:
    int n_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<std::vector<int>> out_, in_;       // sorted ascending
    std::vector<VertexSet> out_mask_, in_mask_;
};

struct InducedSubdigraph {
    Digraph graph;
    std::vector<int> to_global;  // local id -> original id, ascending
    int to_local(int global_id) const;
};

/// D[X]: the subdigraph induced by X, relabelled to 0..|X|-1 in increasing
/// order of the original ids.
InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& x);

/// Arc (u,v) present iff (v,u) is present in the input. Involution.
Digraph reverse(const Digraph& d);

/// Maximal strongly connected classes, in a topological order of the
/// condensation (sources first). Members ascending within each class.
std::vector<std::vector<int>> strong_components(const Digraph& d);

/// A total order with every arc forward when the digraph is acyclic,
/// otherwise a directed cycle as evidence.
std::variant<std::vector<int>, DirectedCycle> topological_order(const Digraph& d);

bool is_acyclic(const Digraph& d);

}  // namespace dichroma
