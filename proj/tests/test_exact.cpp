#include "dichroma/exact.hpp"
#include "dichroma/generate.hpp"
#include "dichroma/rng.hpp"
#include "doctest.h"

using namespace dichroma;

namespace {

Digraph cycle(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, arcs);
}

}  // namespace

TEST_CASE("exact_dichromatic basics") {
    CHECK(exact_dichromatic(cycle(3))->chi == 2);
    CHECK(exact_dichromatic(cycle(5))->chi == 2);

    const Digraph acyclic(4, {{0, 1}, {1, 2}, {0, 3}});
    CHECK(exact_dichromatic(acyclic)->chi == 1);

    CHECK(exact_dichromatic(Digraph(0, {}))->chi == 0);

    // bound-exceeded is an explicit outcome
    CHECK(!exact_dichromatic(cycle(3), 1).has_value());

    // the witness is a valid colouring with exactly chi colours
    const auto result = exact_dichromatic(cycle(5));
    CHECK(result->witness.colours_used() == result->chi);
    CHECK(!verify_colouring(cycle(5), result->witness).has_value());
    CHECK(result->nodes_explored > 0);
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_dichromatic(cycle(3)) == 2);
    CHECK(brute_force_dichromatic(Digraph(1, {})) == 1);

    // two one-way-joined triangles still 2-colour: no monochromatic cycle
    // can cross the one-way arcs
    std::vector<std::pair<int, int>> arcs = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) arcs.emplace_back(u, v);
    CHECK(brute_force_dichromatic(Digraph(6, arcs)) == 2);

    // a digon forces two colours
    CHECK(brute_force_dichromatic(Digraph(2, {{0, 1}, {1, 0}})) == 2);

    CHECK_THROWS_AS(brute_force_dichromatic(Digraph(9, {})), ContractViolation);
}

TEST_CASE("exact agrees with brute force") {
    // exhaustively below the acceptance sweep's size
    for (int n = 1; n <= 4; ++n) {
        OrientedEnumerator en(n);
        while (auto d = en.next())
            CHECK(exact_dichromatic(*d)->chi == brute_force_dichromatic(*d));
    }
    DigraphEnumerator general(3);
    while (auto d = general.next())
        CHECK(exact_dichromatic(*d)->chi == brute_force_dichromatic(*d));

    // sampled at 6..8 vertices
    for (int seed = 0; seed < 150; ++seed) {
        Rng rng(88000 + seed);
        const int n = 6 + static_cast<int>(rng.below(3));
        const Digraph d =
            generate({GenKind::RandomOriented, n, 0.2 + 0.5 * rng.real01(), rng.next()});
        CHECK(exact_dichromatic(d)->chi == brute_force_dichromatic(d));
    }
}

TEST_CASE("exact chi structure") {
    for (int seed = 0; seed < 120; ++seed) {
        Rng rng(91500 + seed);
        const int n = 2 + static_cast<int>(rng.below(8));
        const Digraph d =
            generate({GenKind::RandomOriented, n, 0.2 + 0.5 * rng.real01(), rng.next()});
        const auto result = exact_dichromatic(d);
        REQUIRE(result.has_value());
        CHECK((result->chi == 1) == is_acyclic(d));
        CHECK(result->chi == exact_dichromatic(reverse(d))->chi);
        CHECK(!verify_colouring(d, result->witness).has_value());
        CHECK(result->witness.colours_used() == result->chi);
        if (!min_odd_cycle(d) && !find_digon(d)) CHECK(result->chi <= 2);
    }
}

TEST_CASE("enumerators") {
    OrientedEnumerator two(2);
    int count2 = 0;
    while (two.next()) ++count2;
    CHECK(count2 == 3);
    CHECK(two.total() == 3);

    OrientedEnumerator three(3);
    int count3 = 0;
    while (three.next()) ++count3;
    CHECK(count3 == 27);

    CHECK(OrientedEnumerator(5).total() == 59049);
    CHECK_THROWS_AS(OrientedEnumerator(6), ContractViolation);

    DigraphEnumerator g2(2);
    int g2count = 0;
    while (g2.next()) ++g2count;
    CHECK(g2count == 4);

    DigraphEnumerator g3(3);
    int g3count = 0;
    while (g3.next()) ++g3count;
    CHECK(g3count == 64);
    CHECK_THROWS_AS(DigraphEnumerator(5), ContractViolation);

    // the stream restarts identically
    OrientedEnumerator stream(3);
    std::vector<Digraph> first;
    while (auto d = stream.next()) first.push_back(*d);
    stream.reset();
    std::size_t idx = 0;
    while (auto d = stream.next()) CHECK(*d == first[idx++]);
    CHECK(idx == first.size());
}
