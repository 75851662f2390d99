#pragma once

#include <cstdint>
#include <string>

#include "dichroma/digraph.hpp"

namespace dichroma {

enum class GenKind {
    RandomOriented,           // each pair: arc with probability p, fair direction
    InClassP6TriangleFree,    // oriented, repaired until triangle- and induced-P6-free
    NoOddCycle,               // oriented, repaired until no odd directed cycle remains
    OddCycleBlowup,           // odd cycle of stable sets, one-way arcs between
                              // consecutive sets kept with probability p,
                              // repaired for induced P6
};

GenKind gen_kind_from_string(const std::string& name);
std::string to_string(GenKind kind);

struct GenSpec {
    GenKind kind = GenKind::RandomOriented;
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// Deterministic: identical specs give identical digraphs. Repair-based kinds
/// delete one witness arc at a time, so they terminate within the initial arc
/// count; the iteration cap guards against bugs only.
Digraph generate(const GenSpec& spec);

}  // namespace dichroma
