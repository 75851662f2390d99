#include "dichroma/generate.hpp"

#include <set>
#include <vector>

#include "dichroma/rng.hpp"
#include "dichroma/witness.hpp"

namespace dichroma {

GenKind gen_kind_from_string(const std::string& name) {
    if (name == "random_oriented") return GenKind::RandomOriented;
    if (name == "in_class_p6_trianglefree") return GenKind::InClassP6TriangleFree;
    if (name == "no_odd_cycle") return GenKind::NoOddCycle;
    if (name == "odd_cycle_blowup") return GenKind::OddCycleBlowup;
    throw ContractViolation("unknown generator kind '" + name + "'");
}

std::string to_string(GenKind kind) {
    switch (kind) {
        case GenKind::RandomOriented: return "random_oriented";
        case GenKind::InClassP6TriangleFree: return "in_class_p6_trianglefree";
        case GenKind::NoOddCycle: return "no_odd_cycle";
        case GenKind::OddCycleBlowup: return "odd_cycle_blowup";
    }
    return "?";
}

namespace {

using ArcSet = std::set<std::pair<int, int>>;

ArcSet random_oriented_arcs(int n, double p, Rng& rng) {
    ArcSet arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) {
                if (rng.next() & 1)
                    arcs.emplace(u, v);
                else
                    arcs.emplace(v, u);
            }
    return arcs;
}

Digraph build(int n, const ArcSet& arcs) {
    return Digraph(n, std::vector<std::pair<int, int>>(arcs.begin(), arcs.end()));
}

void delete_random_arc(ArcSet& arcs, const std::vector<std::pair<int, int>>& candidates,
                       Rng& rng) {
    arcs.erase(candidates[rng.below(candidates.size())]);
}

// Arcs of the witness that are present: the (up to three) arcs among a
// triangle's vertices, or the five consecutive arcs of an induced path.
std::vector<std::pair<int, int>> witness_arcs(const Digraph& d, const ForbiddenWitness& w) {
    std::vector<std::pair<int, int>> arcs;
    if (w.kind == WitnessKind::Triangle) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j && d.has_arc(w.vertices[i], w.vertices[j]))
                    arcs.emplace_back(w.vertices[i], w.vertices[j]);
    } else {
        for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
            arcs.emplace_back(w.vertices[i], w.vertices[i + 1]);
    }
    return arcs;
}

// Delete one random arc of each triangle / induced-P6 witness until none
// remains. Every step removes an arc, so this ends within |arcs| rounds.
Digraph repair_to_class(int n, ArcSet arcs, Rng& rng) {
    const std::size_t cap = arcs.size() + 16;
    for (std::size_t iter = 0; iter <= cap; ++iter) {
        const Digraph d = build(n, arcs);
        if (auto tri = find_triangle(d)) {
            delete_random_arc(arcs, witness_arcs(d, *tri), rng);
            continue;
        }
        const PatternSearch p6 = find_induced_p6(d);
        if (p6.outcome == SearchOutcome::BudgetExceeded)
            throw GenError("induced-path search ran out of budget during repair");
        if (p6.outcome == SearchOutcome::Found) {
            delete_random_arc(arcs, witness_arcs(d, *p6.witness), rng);
            continue;
        }
        return d;
    }
    throw GenError("repair loop exceeded its iteration cap");
}

Digraph repair_no_odd_cycle(int n, ArcSet arcs, Rng& rng) {
    const std::size_t cap = arcs.size() + 16;
    for (std::size_t iter = 0; iter <= cap; ++iter) {
        const Digraph d = build(n, arcs);
        const auto odd = min_odd_cycle(d);
        if (!odd) return d;
        std::vector<std::pair<int, int>> cycle_arcs;
        for (std::size_t i = 0; i < odd->vertices.size(); ++i)
            cycle_arcs.emplace_back(odd->vertices[i],
                                    odd->vertices[(i + 1) % odd->vertices.size()]);
        delete_random_arc(arcs, cycle_arcs, rng);
    }
    throw GenError("repair loop exceeded its iteration cap");
}

// Blow-up base length is always 5: a chordless directed cycle of length 7 or
// more contains an induced six-vertex path, and a minimum odd cycle cannot
// carry chords without creating a shorter odd cycle, a digon or a triangle.
inline constexpr int kBlowupLength = 5;

int blowup_group(int v) { return v % kBlowupLength; }

ArcSet blowup_arcs(int n, double p, Rng& rng) {
    if (n < kBlowupLength)
        throw ContractViolation("blow-up generation needs at least 5 vertices");
    // Group v % 5; one-way arcs between consecutive groups, thinned by p. The
    // groups are stable sets and no two non-consecutive groups touch, so the
    // result is digon- and triangle-free by construction.
    ArcSet arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if ((blowup_group(u) + 1) % kBlowupLength == blowup_group(v) && rng.chance(p))
                arcs.emplace(u, v);
    // A ring through the first member of each group keeps an odd directed
    // cycle present however thin the draw came out.
    for (int g = 0; g < kBlowupLength; ++g) arcs.emplace(g, (g + 1) % kBlowupLength);
    return arcs;
}

// Blow-ups are repaired by completion, not deletion: an induced six-vertex
// path winds around the five groups, so it leaves one of its wrap arcs
// missing; re-adding one keeps the family's ring and level structure intact
// and converges because the complete blow-up has no induced six-vertex path.
Digraph repair_blowup(int n, ArcSet arcs, Rng& rng) {
    const std::size_t cap = static_cast<std::size_t>(n) * n + 16;
    for (std::size_t iter = 0; iter <= cap; ++iter) {
        const Digraph d = build(n, arcs);
        const PatternSearch p6 = find_induced_p6(d);
        if (p6.outcome == SearchOutcome::BudgetExceeded)
            throw GenError("induced-path search ran out of budget during repair");
        if (p6.outcome == SearchOutcome::Absent) return d;
        std::vector<std::pair<int, int>> completable;
        for (int x : p6.witness->vertices)
            for (int y : p6.witness->vertices)
                if (x != y && (blowup_group(x) + 1) % kBlowupLength == blowup_group(y) &&
                    !d.has_arc(x, y))
                    completable.emplace_back(x, y);
        if (completable.empty()) {
            delete_random_arc(arcs, witness_arcs(d, *p6.witness), rng);
            continue;
        }
        arcs.insert(completable[rng.below(completable.size())]);
    }
    throw GenError("repair loop exceeded its iteration cap");
}

}  // namespace

Digraph generate(const GenSpec& spec) {
    if (spec.n < 0) throw ContractViolation("generator vertex count must be non-negative");
    if (spec.p < 0.0 || spec.p > 1.0)
        throw ContractViolation("arc density must lie in [0, 1]");
    Rng rng(spec.seed);
    switch (spec.kind) {
        case GenKind::RandomOriented:
            return build(spec.n, random_oriented_arcs(spec.n, spec.p, rng));
        case GenKind::InClassP6TriangleFree:
            return repair_to_class(spec.n, random_oriented_arcs(spec.n, spec.p, rng), rng);
        case GenKind::NoOddCycle:
            return repair_no_odd_cycle(spec.n, random_oriented_arcs(spec.n, spec.p, rng), rng);
        case GenKind::OddCycleBlowup:
            return repair_blowup(spec.n, blowup_arcs(spec.n, spec.p, rng), rng);
    }
    throw ContractViolation("unknown generator kind");
}

}  // namespace dichroma
