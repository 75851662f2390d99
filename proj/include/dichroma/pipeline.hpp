#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dichroma/colouring.hpp"
#include "dichroma/levels.hpp"
#include "dichroma/witness.hpp"

namespace dichroma {

/// Outer mode handles triangle-free digon-free inputs with no induced P6;
/// inner mode additionally assumes no induced C32, which tightens the budget
/// of the second-level core and drops the recursion.
enum class PipelineMode { Outer, Inner };

enum class Side { Out, In };

/// Per-part colour budgets for one peeled layer. Two figures exist for the
/// recursive second-level core and everything derived from it: the guaranteed
/// ones follow the doubling arithmetic (2 x 77 = 154, layers of 201, final
/// 402), the nominal ones keep the smaller headline constants (144, 191,
/// 382). The pipeline asserts the guaranteed figures and only reports whether
/// the nominal ones also held.
struct BudgetTable {
    static constexpr int kCycle = 3;
    static constexpr int kFirstOut = 4;
    static constexpr int kFirstIn = 4;
    static constexpr int kFirstCore = 30;
    static constexpr int kSecondOut = 2;
    static constexpr int kSecondIn = 2;
    static constexpr int kSecondCoreInner = 30;
    static constexpr int kSecondCoreOuter = 154;
    static constexpr int kSecondCoreOuterNominal = 144;
    static constexpr int kThirdOut = 1;
    static constexpr int kThirdIn = 1;

    static int second_core(PipelineMode m) {
        return m == PipelineMode::Inner ? kSecondCoreInner : kSecondCoreOuter;
    }
    // 77 inner, 201 outer
    static int layer_total(PipelineMode m) {
        return kCycle + kFirstOut + kFirstIn + kFirstCore + kSecondOut + kSecondIn +
               second_core(m) + kThirdOut + kThirdIn;
    }
    // 154 inner, 402 outer
    static int final_bound(PipelineMode m) { return 2 * layer_total(m); }
    // 77 inner, 191 outer
    static int layer_total_nominal(PipelineMode m) {
        return m == PipelineMode::Inner
                   ? layer_total(m)
                   : layer_total(m) - kSecondCoreOuter + kSecondCoreOuterNominal;
    }
    // 144 inner, 382 outer
    static int final_nominal(PipelineMode m) {
        return m == PipelineMode::Inner ? kSecondCoreOuterNominal
                                        : 2 * layer_total_nominal(m);
    }
};

/// The nine disjoint parts of the peeled set around a minimum odd cycle:
/// the cycle itself, then for each level the one-sided parts and the
/// two-sided core. Level-3 plus vertices all land in third_out.
struct ZonePartition {
    VertexSet cycle_part;
    VertexSet first_out, first_in, first_core;
    VertexSet second_out, second_in, second_core;
    VertexSet third_out, third_in;
    VertexSet all() const;
};

ZonePartition build_zone(const Digraph& d, const OddCycle& c);

/// Labels driving the core part colouring. Vertices of the target set either
/// carry a cover tag (they sit in the exact-level set of one of the first six
/// cycle vertices) or two cycle positions out/in with exact-length witness
/// paths towards and from the cycle; for length-2 witnesses the middle
/// vertices are recorded too.
struct CoreLabels {
    int ell = 1;
    std::vector<int> target;       // members of the level-ell core, ascending
    std::vector<int> cover_index;  // per vertex: 1-based cycle position, 0 = none
    std::vector<int> cover_sign;   // +1 = out-level of that cycle vertex, -1 = in-level
    std::vector<int> out_index;    // per residual vertex: 1-based cycle positions
    std::vector<int> in_index;
    std::vector<int> mid_out;      // ell = 2 witness middles, -1 otherwise
    std::vector<int> mid_in;
};

struct CoreColouring {
    Colouring colouring;  // assigned exactly on the level-ell core, colours < 30
    CoreLabels labels;
};

struct PipelineStats {
    int outer_layers = 0, inner_layers = 0;
    int outer_layer_colours_max = 0, inner_layer_colours_max = 0;
    int cycle_max = 0;
    int first_out_max = 0, first_in_max = 0, first_core_max = 0;
    int second_out_max = 0, second_in_max = 0;
    int second_core_recursive_max = 0;  // outer mode: recursive inner colouring
    int second_core_direct_max = 0;     // inner mode: direct core colouring
    int third_out_max = 0, third_in_max = 0;
    int escalations = 0;
    int final_colours = 0;
};

/// Cycle vertices: 2-colour the cycle minus its first vertex (no odd directed
/// cycle remains when the cycle is minimum), first vertex gets colour 2.
Colouring colour_cycle_part(const Digraph& d, const OddCycle& c);

/// One-sided first level: two stable out-neighbourhood slices of the first
/// two cycle vertices, then a 2-colouring of the odd-cycle-free remainder.
/// At most 4 colours. The In side runs the same construction on the reverse
/// digraph.
Colouring colour_one_sided_first(const Digraph& d, const OddCycle& c, const VertexSet& part,
                                 Side side);

/// One-sided second level carries no odd directed cycle; 2 colours.
Colouring colour_one_sided_second(const Digraph& d, const VertexSet& part);

/// Two-sided core at level ell (1 or 2): 12 cover palettes plus 6 buckets of
/// 2+1 colours; at most 30 in total. Requires the exact-level sets of every
/// cycle vertex to be stable on both sides, which is asserted.
CoreColouring colour_core(const Digraph& d, const OddCycle& c, int ell,
                          PipelineStats* stats = nullptr);

/// Third level: both parts are independent sets (asserted); 2 colours.
Colouring colour_third(const Digraph& d, const ZonePartition& zone);

/// Colours the whole zone on disjoint per-part palettes within the mode's
/// layer budget (77 inner, 201 outer). In outer mode the second-level core is
/// handed to a full inner-mode pipeline after checking it has no induced C32.
Colouring colour_zone(const Digraph& d, const OddCycle& c, PipelineMode mode,
                      PipelineStats* stats = nullptr);

struct PipelineOptions {
    bool trust_class = false;  // skip the up-front pattern searches
    std::uint64_t p6_budget = kNoBudget;
};

struct PipelineOutcome {
    std::variant<Colouring, ForbiddenWitness> result;
    PipelineStats stats;
};

/// Top-level entry: either a verified colouring within the mode's final bound
/// (402 outer, 154 inner) or a certified forbidden subdigraph. Inputs outside
/// the class are caught up front by the pattern searches, or -- when those
/// are skipped -- by the structural assertions, which trigger a witness
/// search before anything is reported.
PipelineOutcome colour_or_witness(const Digraph& d, PipelineMode mode,
                                  const PipelineOptions& options = {});

}  // namespace dichroma
