#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/witness.hpp"

namespace dichroma {

/// Vertex -> colour map over a digraph's vertices. Colours are small
/// non-negative integers; -1 marks a vertex not (yet) coloured. A colouring
/// is valid when every colour class induces an acyclic subdigraph.
class Colouring {
public:
    Colouring() = default;
    explicit Colouring(int n) : colour_(n, -1) {}
    Colouring(int n, std::vector<int> assignment);

    int size() const { return static_cast<int>(colour_.size()); }
    bool assigned(int v) const { return colour_[v] >= 0; }
    int colour(int v) const;
    void set(int v, int c);
    bool total() const;
    int colours_used() const;  // number of distinct assigned colours
    int max_colour() const;    // -1 when nothing is assigned
    const std::vector<int>& raw() const { return colour_; }
    VertexSet domain() const;
    VertexSet colour_class(int c) const;

private:
    std::vector<int> colour_;
};

struct MonochromaticCycle {
    int colour;
    std::vector<int> vertices;
};

/// Valid (nullopt) or a directed cycle inside one colour class. The colouring
/// must be total.
std::optional<MonochromaticCycle> verify_colouring(const Digraph& d, const Colouring& col);

/// When the digraph has no odd directed cycle, a valid colouring with at most
/// two colours: each strong component is 2-coloured along the bipartition of
/// its underlying graph, singleton components get colour 0. Otherwise some
/// odd directed cycle is returned instead.
std::variant<Colouring, OddCycle> two_colour_no_odd(const Digraph& d);

struct OrderColouring {
    Colouring colouring;
    int backward_path_vertices;  // max vertices on a backward-arcs-only path
};

/// Colours each vertex by the longest directed path of backward arcs ending
/// at it, minus one. Valid for any total order; the number of colours equals
/// the longest backward-only path's vertex count.
OrderColouring order_to_colouring(const Digraph& d, const std::vector<int>& order);

/// Classes in increasing colour, topologically sorted inside each class. The
/// result has no backward-only directed path on more vertices than the
/// number of colours. Invalid colourings are rejected with the offending
/// monochromatic cycle in the error message.
std::vector<int> colouring_to_order(const Digraph& d, const Colouring& col);

/// A set S is dipolar when every member keeps all its out-neighbours or all
/// its in-neighbours inside S. s_plus holds the members with all
/// in-neighbours inside, s_minus those with all out-neighbours inside.
struct DipolarCertificate {
    VertexSet s, s_plus, s_minus;
};

/// Certificate, or the first vertex of S with both an out-neighbour and an
/// in-neighbour outside S.
std::variant<DipolarCertificate, int> is_dipolar(const Digraph& d, const VertexSet& s);

/// One peeling step: a nonempty dipolar set of the handed subdigraph together
/// with a valid colouring of it using colours 0..budget-1. Vertex ids are
/// local to the subdigraph; `to_global` maps them back for diagnostics.
struct LayerPlan {
    VertexSet s;
    Colouring colouring;  // assigned exactly on s
};

using LayerOracle = std::function<LayerPlan(const Digraph& sub, const std::vector<int>& to_global)>;

/// Repeatedly removes the oracle's dipolar set until nothing remains, then
/// colours each layer: members whose in-neighbourhood stayed inside the layer
/// set keep their layer colour, the rest shift up by `budget`. Uses at most
/// 2*budget colours. Every layer is checked (nonempty, dipolar, valid,
/// within budget) and the final colouring is re-verified before returning.
Colouring peel(const Digraph& d, const LayerOracle& oracle, int budget);

}  // namespace dichroma
