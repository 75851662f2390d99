#pragma once

#include <cstdint>
#include <optional>

#include "dichroma/colouring.hpp"
#include "dichroma/digraph.hpp"

namespace dichroma {

struct ExactResult {
    int chi = 0;
    Colouring witness;
    std::uint64_t nodes_explored = 0;
};

/// Exact dichromatic number by iterative deepening: for each k, a
/// backtracking assignment in descending-degree vertex order with incremental
/// per-class acyclicity and first-fit symmetry breaking. Returns the first
/// feasible k, or nullopt when chi exceeds k_max. Intended for small
/// instances (around 20 vertices).
std::optional<ExactResult> exact_dichromatic(const Digraph& d, int k_max);
std::optional<ExactResult> exact_dichromatic(const Digraph& d);  // k_max = n

/// Deliberately naive oracle: minimum k such that some of the k^n colour
/// assignments has every class acyclic. Structurally independent of
/// exact_dichromatic. Refuses more than 8 vertices.
int brute_force_dichromatic(const Digraph& d);

/// All digraphs on n labelled vertices where each unordered pair is none /
/// forward / backward. Deterministic order, 3^(n(n-1)/2) graphs, n <= 5.
class OrientedEnumerator {
public:
    explicit OrientedEnumerator(int n);
    std::optional<Digraph> next();
    void reset();
    std::uint64_t total() const;

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> digits_;
    bool done_ = false;
};

/// Same, with digons as a fourth pair state. 4^(n(n-1)/2) graphs, n <= 4.
class DigraphEnumerator {
public:
    explicit DigraphEnumerator(int n);
    std::optional<Digraph> next();
    void reset();
    std::uint64_t total() const;

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> digits_;
    bool done_ = false;
};

}  // namespace dichroma
