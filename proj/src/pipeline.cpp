#include "dichroma/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dichroma {

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += std::to_string(v) + " ";
    if (!s.empty()) s.pop_back();
    return s;
}

// First arc found with both ends inside the set, if any.
std::optional<std::pair<int, int>> arc_inside(const Digraph& d, const VertexSet& set) {
    std::optional<std::pair<int, int>> found;
    set.for_each([&](int u) {
        if (found) return;
        for (int v : d.out(u))
            if (set.contains(v)) {
                found = {u, v};
                return;
            }
    });
    return found;
}

void assert_stable(const Digraph& d, const VertexSet& set, const std::string& what) {
    if (auto arc = arc_inside(d, set))
        throw ClaimViolation(what + " is not a stable set: arc " + std::to_string(arc->first) +
                             "->" + std::to_string(arc->second));
}

void maximise(int* slot, int value) {
    if (slot != nullptr) *slot = std::max(*slot, value);
}

}  // namespace

VertexSet ZonePartition::all() const {
    return cycle_part | first_out | first_in | first_core | second_out | second_in |
           second_core | third_out | third_in;
}

ZonePartition build_zone(const Digraph& d, const OddCycle& c) {
    if (!cycle_holds(d, c))
        throw ContractViolation("build_zone: not an odd directed cycle: " +
                                vertex_list(c.vertices));
    const VertexSet cycle_set(d.n(), c.vertices);
    const LevelStructure ls = level_sets(d, cycle_set, 3);
    ZonePartition z;
    z.cycle_part = cycle_set;
    z.first_out = ls.plus_levels[1] - ls.minus_levels[1];
    z.first_in = ls.minus_levels[1] - ls.plus_levels[1];
    z.first_core = ls.plus_levels[1] & ls.minus_levels[1];
    z.second_out = ls.plus_levels[2] - ls.minus_levels[2];
    z.second_in = ls.minus_levels[2] - ls.plus_levels[2];
    z.second_core = ls.plus_levels[2] & ls.minus_levels[2];
    z.third_out = ls.plus_levels[3];
    z.third_in = ls.minus_levels[3] - ls.plus_levels[3];
    return z;
}

Colouring colour_cycle_part(const Digraph& d, const OddCycle& c) {
    Colouring col(d.n());
    col.set(c.vertices[0], 2);
    VertexSet rest(d.n(), c.vertices);
    rest.remove(c.vertices[0]);
    const InducedSubdigraph sub = induced_subdigraph(d, rest);
    auto res = two_colour_no_odd(sub.graph);
    if (auto* odd = std::get_if<OddCycle>(&res)) {
        std::vector<int> global;
        for (int v : odd->vertices) global.push_back(sub.to_global[v]);
        throw InternalError(
            "cycle is not of minimum length: removing its first vertex leaves the odd "
            "directed cycle " +
            vertex_list(global));
    }
    const Colouring& two = std::get<Colouring>(res);
    for (int v = 0; v < sub.graph.n(); ++v) col.set(sub.to_global[v], two.colour(v));
    return col;
}

namespace {

// Both one-sided first-level cases reduce to this: slice off the stable
// out-neighbourhoods of the first two cycle vertices, then 2-colour the
// remainder, which carries no odd directed cycle for in-class inputs.
Colouring one_sided_first_forward(const Digraph& d, const std::vector<int>& cyc,
                                  const VertexSet& part) {
    Colouring col(d.n());
    const VertexSet s1 = d.out_mask(cyc[0]) & part;
    assert_stable(d, s1, "first-level slice of the first cycle vertex");
    VertexSet rest = part - s1;
    const VertexSet s2 = d.out_mask(cyc[1]) & rest;
    assert_stable(d, s2, "first-level slice of the second cycle vertex");
    rest -= s2;

    s1.for_each([&](int v) { col.set(v, 0); });
    s2.for_each([&](int v) { col.set(v, 1); });
    if (!rest.empty()) {
        const InducedSubdigraph sub = induced_subdigraph(d, rest);
        auto res = two_colour_no_odd(sub.graph);
        if (auto* odd = std::get_if<OddCycle>(&res)) {
            std::vector<int> global;
            for (int v : odd->vertices) global.push_back(sub.to_global[v]);
            throw ClaimViolation(
                "one-sided first level keeps an odd directed cycle after removing both "
                "slices: " +
                vertex_list(global));
        }
        const Colouring& two = std::get<Colouring>(res);
        for (int v = 0; v < sub.graph.n(); ++v) col.set(sub.to_global[v], 2 + two.colour(v));
    }
    return col;
}

std::vector<int> reversed_cycle(const std::vector<int>& cyc) {
    std::vector<int> r{cyc[0]};
    for (int i = static_cast<int>(cyc.size()) - 1; i >= 1; --i) r.push_back(cyc[i]);
    return r;
}

}  // namespace

Colouring colour_one_sided_first(const Digraph& d, const OddCycle& c, const VertexSet& part,
                                 Side side) {
    if (part.empty()) return Colouring(d.n());
    if (side == Side::Out) return one_sided_first_forward(d, c.vertices, part);
    // Directional dual: colour classes stay acyclic under reversal.
    return one_sided_first_forward(reverse(d), reversed_cycle(c.vertices), part);
}

Colouring colour_one_sided_second(const Digraph& d, const VertexSet& part) {
    Colouring col(d.n());
    if (part.empty()) return col;
    const InducedSubdigraph sub = induced_subdigraph(d, part);
    auto res = two_colour_no_odd(sub.graph);
    if (auto* odd = std::get_if<OddCycle>(&res)) {
        std::vector<int> global;
        for (int v : odd->vertices) global.push_back(sub.to_global[v]);
        throw ClaimViolation("one-sided second level contains an odd directed cycle: " +
                             vertex_list(global));
    }
    const Colouring& two = std::get<Colouring>(res);
    for (int v = 0; v < sub.graph.n(); ++v) col.set(sub.to_global[v], two.colour(v));
    return col;
}

namespace {

// Smallest 1-based cycle position reachable from v by a directed path of
// exactly `ell` arcs (direction per `outgoing`), with the middle vertex of a
// length-2 witness. Returns {0, -1} when none exists.
std::pair<int, int> exact_reach(const Digraph& d, const std::vector<int>& cyc, int v, int ell,
                                bool outgoing) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const int x = cyc[i];
        if (ell == 1) {
            if (outgoing ? d.has_arc(v, x) : d.has_arc(x, v))
                return {static_cast<int>(i) + 1, -1};
        } else {
            const auto& hops = outgoing ? d.out(v) : d.in(v);
            for (int mid : hops)
                if (outgoing ? d.has_arc(mid, x) : d.has_arc(x, mid))
                    return {static_cast<int>(i) + 1, mid};
        }
    }
    return {0, -1};
}

}  // namespace

CoreColouring colour_core(const Digraph& d, const OddCycle& c, int ell, PipelineStats* stats) {
    if (ell != 1 && ell != 2) throw ContractViolation("core level must be 1 or 2");
    const int n = d.n();
    CoreColouring result{Colouring(n), {}};
    CoreLabels& labels = result.labels;
    labels.ell = ell;
    labels.cover_index.assign(n, 0);
    labels.cover_sign.assign(n, 0);
    labels.out_index.assign(n, 0);
    labels.in_index.assign(n, 0);
    labels.mid_out.assign(n, -1);
    labels.mid_in.assign(n, -1);

    const VertexSet cycle_set(n, c.vertices);
    const LevelStructure ls = level_sets(d, cycle_set, ell);
    const VertexSet target = ls.plus_levels[ell] & ls.minus_levels[ell];
    labels.target = target.members();
    if (target.empty()) return result;

    const int len = c.length();
    // Exact-level sets of every cycle vertex must be stable on both sides;
    // for level 1 this is just triangle-freeness, for level 2 it is what the
    // absence of induced C32 buys. Violations leave the class.
    std::vector<LevelStructure> per_vertex;
    per_vertex.reserve(len);
    for (int i = 0; i < len; ++i) {
        LevelStructure lx = level_sets(d, VertexSet(n, {c.vertices[i]}), ell);
        assert_stable(d, lx.plus_levels[ell],
                      "level-" + std::to_string(ell) + " out-set of cycle vertex " +
                          std::to_string(c.vertices[i]));
        assert_stable(d, lx.minus_levels[ell],
                      "level-" + std::to_string(ell) + " in-set of cycle vertex " +
                          std::to_string(c.vertices[i]));
        per_vertex.push_back(std::move(lx));
    }

    // Cover phase: up to 12 palettes, one per (cycle vertex, direction).
    // Smallest index wins, out before in. Each palette class sits inside a
    // stable set checked above.
    const int m = std::min(6, len);
    std::vector<int> residual;
    for (int v : labels.target) {
        bool covered = false;
        for (int i = 0; i < m && !covered; ++i) {
            if (per_vertex[i].plus_levels[ell].contains(v)) {
                labels.cover_index[v] = i + 1;
                labels.cover_sign[v] = +1;
                result.colouring.set(v, 2 * i);
                covered = true;
            } else if (per_vertex[i].minus_levels[ell].contains(v)) {
                labels.cover_index[v] = i + 1;
                labels.cover_sign[v] = -1;
                result.colouring.set(v, 2 * i + 1);
                covered = true;
            }
        }
        if (!covered) residual.push_back(v);
    }

    // Residual phase: label each vertex with the smallest cycle positions it
    // reaches (out) and is reached from (in) by exact-length witnesses, then
    // bucket by out mod 6 and split on out >= in.
    for (int v : residual) {
        const auto [oi, om] = exact_reach(d, c.vertices, v, ell, true);
        const auto [ii, im] = exact_reach(d, c.vertices, v, ell, false);
        if (oi == 0 || ii == 0)
            throw InternalError("core vertex " + std::to_string(v) +
                                " has no exact-length witness to the cycle");
        labels.out_index[v] = oi;
        labels.in_index[v] = ii;
        labels.mid_out[v] = om;
        labels.mid_in[v] = im;
    }

    std::array<std::vector<int>, 6> bucket_ge, bucket_lt;
    for (int v : residual) {
        const int b = labels.out_index[v] % 6;
        (labels.out_index[v] >= labels.in_index[v] ? bucket_ge : bucket_lt)[b].push_back(v);
    }

    for (int b = 0; b < 6; ++b) {
        const int palette = 12 + 3 * b;
        if (!bucket_ge[b].empty()) {
            const InducedSubdigraph sub = induced_subdigraph(d, VertexSet(n, bucket_ge[b]));
            // Order by out-position descending (the reversal of the natural
            // precedence); a backward path on three vertices would force a
            // shorter odd closed trail, so two colours must suffice.
            std::vector<int> order(sub.graph.n());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int bb) {
                const int ga = sub.to_global[a], gb = sub.to_global[bb];
                if (labels.out_index[ga] != labels.out_index[gb])
                    return labels.out_index[ga] > labels.out_index[gb];
                return ga > gb;
            });
            const OrderColouring oc = order_to_colouring(sub.graph, order);
            if (oc.backward_path_vertices > 2)
                throw ClaimViolation(
                    "core bucket admits a backward path on " +
                    std::to_string(oc.backward_path_vertices) +
                    " vertices under the out-position order; two colours do not suffice");
            for (int v = 0; v < sub.graph.n(); ++v)
                result.colouring.set(sub.to_global[v], palette + oc.colouring.colour(v));
        }
        if (!bucket_lt[b].empty()) {
            // Arcs must strictly increase the out-position here, which makes
            // the bucket acyclic and one colour enough.
            const VertexSet members(n, bucket_lt[b]);
            for (int u : bucket_lt[b])
                for (int w : d.out(u))
                    if (members.contains(w) && labels.out_index[u] >= labels.out_index[w])
                        throw ClaimViolation("core bucket arc " + std::to_string(u) + "->" +
                                             std::to_string(w) +
                                             " does not increase the out-position");
            for (int v : bucket_lt[b]) result.colouring.set(v, palette + 2);
        }
    }

    if (stats != nullptr) {
        int* slot = ell == 1 ? &stats->first_core_max : &stats->second_core_direct_max;
        maximise(slot, result.colouring.colours_used());
    }
    return result;
}

Colouring colour_third(const Digraph& d, const ZonePartition& zone) {
    if (auto arc = arc_inside(d, zone.third_out))
        throw ClaimViolation("third-level out-set contains arc " + std::to_string(arc->first) +
                             "->" + std::to_string(arc->second));
    if (auto arc = arc_inside(d, zone.third_in))
        throw ClaimViolation("third-level in-set contains arc " + std::to_string(arc->first) +
                             "->" + std::to_string(arc->second));
    Colouring col(d.n());
    zone.third_out.for_each([&](int v) { col.set(v, 0); });
    zone.third_in.for_each([&](int v) { col.set(v, 1); });
    return col;
}

namespace {

Colouring run_pipeline_peel(const Digraph& d, PipelineMode mode, PipelineStats& stats);

}  // namespace

Colouring colour_zone(const Digraph& d, const OddCycle& c, PipelineMode mode,
                      PipelineStats* stats) {
    const ZonePartition zone = build_zone(d, c);
    Colouring result(d.n());
    int offset = 0;

    const auto place = [&](const Colouring& part, int width, const char* name, int* slot) {
        if (part.max_colour() >= width)
            throw InternalError(std::string("part ") + name + " overflowed its palette");
        for (int v = 0; v < d.n(); ++v) {
            if (!part.assigned(v)) continue;
            if (result.assigned(v))
                throw InternalError(std::string("vertex coloured twice while placing part ") +
                                    name);
            result.set(v, offset + part.colour(v));
        }
        maximise(slot, part.colours_used());
        offset += width;
    };

    PipelineStats* s = stats;
    place(colour_cycle_part(d, c), BudgetTable::kCycle, "cycle", s ? &s->cycle_max : nullptr);
    place(colour_one_sided_first(d, c, zone.first_out, Side::Out), BudgetTable::kFirstOut,
          "first-out", s ? &s->first_out_max : nullptr);
    place(colour_one_sided_first(d, c, zone.first_in, Side::In), BudgetTable::kFirstIn,
          "first-in", s ? &s->first_in_max : nullptr);
    place(colour_core(d, c, 1, s).colouring, BudgetTable::kFirstCore, "first-core", nullptr);
    place(colour_one_sided_second(d, zone.second_out), BudgetTable::kSecondOut, "second-out",
          s ? &s->second_out_max : nullptr);
    place(colour_one_sided_second(d, zone.second_in), BudgetTable::kSecondIn, "second-in",
          s ? &s->second_in_max : nullptr);

    if (mode == PipelineMode::Inner) {
        place(colour_core(d, c, 2, s).colouring, BudgetTable::kSecondCoreInner, "second-core",
              nullptr);
    } else {
        // The recursion needs the second-level core to be free of induced
        // C32; a copy there means the outer input was out of class (it would
        // force a triangle or an induced P6 elsewhere).
        const InducedSubdigraph sub = induced_subdigraph(d, zone.second_core);
        if (auto w = find_induced_c32(sub.graph)) {
            std::vector<int> global;
            for (int v : w->vertices) global.push_back(sub.to_global[v]);
            throw ClaimViolation("second-level core contains an induced C32: " +
                                 vertex_list(global));
        }
        Colouring inner(d.n());
        if (sub.graph.n() > 0) {
            PipelineStats fallback;
            const Colouring local =
                run_pipeline_peel(sub.graph, PipelineMode::Inner, s ? *s : fallback);
            for (int v = 0; v < sub.graph.n(); ++v)
                inner.set(sub.to_global[v], local.colour(v));
        }
        place(inner, BudgetTable::kSecondCoreOuter, "second-core",
              s ? &s->second_core_recursive_max : nullptr);
    }

    place(colour_third(d, zone), BudgetTable::kThirdOut + BudgetTable::kThirdIn, "third",
          nullptr);
    if (s != nullptr) {
        maximise(&s->third_out_max, zone.third_out.empty() ? 0 : 1);
        maximise(&s->third_in_max, zone.third_in.empty() ? 0 : 1);
    }

    if (!(result.domain() == zone.all()))
        throw InternalError("zone colouring does not cover the zone exactly");
    return result;
}

namespace {

Colouring run_pipeline_peel(const Digraph& d, PipelineMode mode, PipelineStats& stats) {
    const int budget = BudgetTable::layer_total(mode);
    const LayerOracle oracle = [&stats, mode, budget](const Digraph& sub,
                                                      const std::vector<int>& to_global) {
        LayerPlan plan;
        const auto odd = min_odd_cycle(sub);
        if (!odd) {
            plan.s = sub.full_set();
            auto res = two_colour_no_odd(sub);
            if (std::holds_alternative<OddCycle>(res))
                throw InternalError("no minimum odd cycle, yet the two-colouring found one");
            plan.colouring = std::get<Colouring>(res);
        } else {
            plan.colouring = colour_zone(sub, *odd, mode, &stats);
            plan.s = plan.colouring.domain();
        }

        // The peeled set must be dipolar; anything else means the input left
        // the class and the caller falls back to a witness search.
        const auto dip = is_dipolar(sub, plan.s);
        if (const int* bad = std::get_if<int>(&dip))
            throw ClaimViolation("peeled set is not dipolar: vertex " +
                                 std::to_string(to_global[*bad]) +
                                 " has neighbours on both sides outside it");

        const int used = plan.colouring.colours_used();
        if (used > budget) throw InternalError("layer used more colours than its budget");
        if (mode == PipelineMode::Outer) {
            ++stats.outer_layers;
            stats.outer_layer_colours_max = std::max(stats.outer_layer_colours_max, used);
        } else {
            ++stats.inner_layers;
            stats.inner_layer_colours_max = std::max(stats.inner_layer_colours_max, used);
        }
        return plan;
    };
    return peel(d, oracle, budget);
}

}  // namespace

PipelineOutcome colour_or_witness(const Digraph& d, PipelineMode mode,
                                  const PipelineOptions& options) {
    PipelineOutcome outcome;

    if (!options.trust_class) {
        if (auto w = find_digon(d)) {
            outcome.result = *w;
            return outcome;
        }
        if (auto w = find_triangle(d)) {
            outcome.result = *w;
            return outcome;
        }
        const PatternSearch p6 = find_induced_p6(d, options.p6_budget);
        if (p6.outcome == SearchOutcome::Found) {
            outcome.result = *p6.witness;
            return outcome;
        }
        if (p6.outcome == SearchOutcome::BudgetExceeded)
            throw ContractViolation(
                "induced-path search exceeded its node budget; raise it or trust the class");
        if (mode == PipelineMode::Inner) {
            if (auto w = find_induced_c32(d)) {
                outcome.result = *w;
                return outcome;
            }
        }
    }

    try {
        Colouring col = run_pipeline_peel(d, mode, outcome.stats);
        if (col.colours_used() > BudgetTable::final_bound(mode))
            throw InternalError("final colouring exceeded the guaranteed bound");
        outcome.stats.final_colours = col.colours_used();
        outcome.result = std::move(col);
        return outcome;
    } catch (const ClaimViolation& violation) {
        // Possible only when the up-front searches were skipped or the input
        // was generated out of class: some forbidden subdigraph must explain
        // the failure.
        ++outcome.stats.escalations;
        if (auto w = find_digon(d)) {
            outcome.result = *w;
            return outcome;
        }
        if (auto w = find_triangle(d)) {
            outcome.result = *w;
            return outcome;
        }
        const PatternSearch p6 = find_induced_p6(d);
        if (p6.outcome == SearchOutcome::Found) {
            outcome.result = *p6.witness;
            return outcome;
        }
        if (mode == PipelineMode::Inner) {
            if (auto w = find_induced_c32(d)) {
                outcome.result = *w;
                return outcome;
            }
        }
        throw InternalError(std::string("assertion failed on an input with no forbidden "
                                        "subdigraph; this falsifies a guarantee: ") +
                            violation.what());
    }
}

}  // namespace dichroma
