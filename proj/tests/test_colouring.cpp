#include <set>

#include "dichroma/colouring.hpp"
#include "dichroma/exact.hpp"
#include "dichroma/generate.hpp"
#include "dichroma/rng.hpp"
#include "dichroma/selfcheck.hpp"
#include "doctest.h"

using namespace dichroma;

namespace {

Digraph cycle(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, arcs);
}

Digraph path(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(n, arcs);
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return order;
}

}  // namespace

TEST_CASE("verify_colouring") {
    const Digraph c3 = cycle(3);
    CHECK(!verify_colouring(c3, Colouring(3, {0, 0, 1})).has_value());

    const auto mono = verify_colouring(c3, Colouring(3, {0, 0, 0}));
    REQUIRE(mono.has_value());
    CHECK(mono->colour == 0);
    CHECK(std::set<int>(mono->vertices.begin(), mono->vertices.end()) == std::set<int>{0, 1, 2});

    CHECK(!verify_colouring(path(4), Colouring(4, {0, 0, 0, 0})).has_value());

    Colouring partial(3);
    partial.set(0, 0);
    CHECK_THROWS_AS(verify_colouring(c3, partial), ContractViolation);
}

TEST_CASE("two_colour_no_odd") {
    const Digraph c4 = cycle(4);
    auto res = two_colour_no_odd(c4);
    const auto& col = std::get<Colouring>(res);
    CHECK(col.colours_used() == 2);
    CHECK(!verify_colouring(c4, col).has_value());
    CHECK(col.colour(0) == col.colour(2));
    CHECK(col.colour(1) == col.colour(3));
    CHECK(col.colour(0) != col.colour(1));

    auto acyclic = two_colour_no_odd(path(5));
    CHECK(std::get<Colouring>(acyclic).colours_used() == 1);

    auto odd = two_colour_no_odd(cycle(5));
    const auto& oc = std::get<OddCycle>(odd);
    CHECK(oc.length() == 5);
    CHECK(cycle_holds(cycle(5), oc));

    // generated odd-cycle-free instances always 2-colour
    for (int seed = 0; seed < 150; ++seed) {
        Rng rng(3100 + seed);
        const int n = 1 + static_cast<int>(rng.below(30));
        const Digraph d =
            generate({GenKind::NoOddCycle, n, 0.05 + 0.25 * rng.real01(), rng.next()});
        auto r = two_colour_no_odd(d);
        const auto* c = std::get_if<Colouring>(&r);
        REQUIRE(c != nullptr);
        CHECK(c->colours_used() <= 2);
        CHECK(!verify_colouring(d, *c).has_value());
    }
}

TEST_CASE("order_to_colouring on the documented 3-cycle") {
    const Digraph c3 = cycle(3);  // arcs 0->1->2->0, order 0 < 1 < 2
    const auto oc = order_to_colouring(c3, identity_order(3));
    CHECK(oc.backward_path_vertices == 2);
    CHECK(oc.colouring.colours_used() == 2);
    CHECK(oc.colouring.colour(0) == 1);  // backward path 2 -> 0 ends here
    CHECK(oc.colouring.colour(1) == 0);
    CHECK(oc.colouring.colour(2) == 0);
    CHECK(!verify_colouring(c3, oc.colouring).has_value());

    // no backward arcs at all: one colour
    const auto forward = order_to_colouring(path(5), identity_order(5));
    CHECK(forward.backward_path_vertices == 1);
    CHECK(forward.colouring.colours_used() == 1);
}

TEST_CASE("order_to_colouring matches the path-enumeration oracle") {
    for (int seed = 0; seed < 500; ++seed) {
        Rng rng(5200 + seed);
        const int n = 2 + static_cast<int>(rng.below(9));
        const Digraph d =
            generate({GenKind::RandomOriented, n, 0.1 + 0.6 * rng.real01(), rng.next()});
        std::vector<int> order = identity_order(n);
        rng.shuffle(order);
        const auto oc = order_to_colouring(d, order);
        CHECK(oc.backward_path_vertices ==
              selfcheck::longest_backward_path_by_enumeration(d, order));
        CHECK(!verify_colouring(d, oc.colouring).has_value());
        CHECK(oc.colouring.colours_used() == oc.backward_path_vertices);
    }
}

TEST_CASE("colouring_to_order") {
    const Digraph c3 = cycle(3);
    const auto order = colouring_to_order(c3, Colouring(3, {0, 1, 1}));
    CHECK(order.size() == 3);
    CHECK(order[0] == 0);  // colour 0 first, then the topological order of {1,2}
    CHECK(order[1] == 1);
    CHECK(order[2] == 2);
    CHECK(selfcheck::longest_backward_path_by_enumeration(c3, order) <= 2);

    const auto topo = colouring_to_order(path(4), Colouring(4, {0, 0, 0, 0}));
    CHECK(topo == std::vector<int>{0, 1, 2, 3});

    CHECK_THROWS_AS(colouring_to_order(c3, Colouring(3, {0, 0, 0})), ContractViolation);
}

TEST_CASE("order/colouring round trip never inflates the colour count") {
    for (int seed = 0; seed < 500; ++seed) {
        Rng rng(8300 + seed);
        const int n = 2 + static_cast<int>(rng.below(9));
        const Digraph d =
            generate({GenKind::RandomOriented, n, 0.1 + 0.5 * rng.real01(), rng.next()});
        const auto exact = exact_dichromatic(d);
        REQUIRE(exact.has_value());
        const auto order = colouring_to_order(d, exact->witness);
        const auto oc = order_to_colouring(d, order);
        CHECK(oc.backward_path_vertices <= exact->chi);
        CHECK(!verify_colouring(d, oc.colouring).has_value());
    }
}

TEST_CASE("both directions of the order equivalence at small scale") {
    for (int n = 1; n <= 4; ++n) {
        OrientedEnumerator en(n);
        while (auto d = en.next()) {
            const auto exact = exact_dichromatic(*d);
            REQUIRE(exact.has_value());
            // an optimal colouring converts to an order that converts back
            // to an optimal colouring
            const auto order = colouring_to_order(*d, exact->witness);
            const auto oc = order_to_colouring(*d, order);
            CHECK(oc.backward_path_vertices == exact->chi);

            // sampled random orders never do better than the optimum
            Rng rng(17);
            std::vector<int> any = identity_order(n);
            for (int trial = 0; trial < 4; ++trial) {
                rng.shuffle(any);
                CHECK(order_to_colouring(*d, any).backward_path_vertices >= exact->chi);
            }
        }
    }
}

TEST_CASE("is_dipolar") {
    const Digraph p = path(3);
    CHECK(std::holds_alternative<DipolarCertificate>(is_dipolar(p, p.full_set())));

    const auto bad = is_dipolar(p, VertexSet(3, {1}));
    REQUIRE(std::holds_alternative<int>(bad));
    CHECK(std::get<int>(bad) == 1);

    const auto cert = is_dipolar(cycle(4), VertexSet(4, {0, 1, 2, 3}));
    const auto& c = std::get<DipolarCertificate>(cert);
    CHECK(c.s_plus == cycle(4).full_set());
    CHECK(c.s_minus == cycle(4).full_set());
    CHECK((c.s_plus | c.s_minus) == c.s);
}

TEST_CASE("is_dipolar agrees with the definition, exhaustively") {
    OrientedEnumerator en(5);
    while (auto d = en.next()) {
        for (int mask = 0; mask < 32; ++mask) {
            VertexSet s(5);
            for (int v = 0; v < 5; ++v)
                if (mask >> v & 1) s.add(v);
            const bool fast = std::holds_alternative<DipolarCertificate>(is_dipolar(*d, s));
            CHECK(fast == selfcheck::dipolar_by_definition(*d, s));
        }
    }
}

TEST_CASE("peel") {
    // the whole remainder with a 2-colouring is always a legal layer when no
    // odd cycle exists
    const LayerOracle whole = [](const Digraph& sub, const std::vector<int>&) {
        auto res = two_colour_no_odd(sub);
        return LayerPlan{sub.full_set(), std::get<Colouring>(res)};
    };
    const Digraph c4 = cycle(4);
    const Colouring col = peel(c4, whole, 2);
    CHECK(col.colours_used() <= 2);
    CHECK(!verify_colouring(c4, col).has_value());

    const Digraph empty(0, {});
    CHECK(peel(empty, whole, 2).colours_used() == 0);

    // a layered run: singleton layers, one colour each
    const LayerOracle singles = [](const Digraph& sub, const std::vector<int>&) {
        // a source vertex keeps its whole in-neighbourhood (nothing) inside
        VertexSet s(sub.n());
        const auto order = topological_order(sub);
        if (const auto* topo = std::get_if<std::vector<int>>(&order))
            s.add(topo->front());
        else
            s.add(0);
        Colouring c(sub.n());
        s.for_each([&](int v) { c.set(v, 0); });
        return LayerPlan{s, c};
    };
    const Digraph p5 = path(5);
    const Colouring layered = peel(p5, singles, 1);
    CHECK(!verify_colouring(p5, layered).has_value());
    CHECK(layered.colours_used() <= 2);

    // contract errors: empty layer set
    const LayerOracle empty_layer = [](const Digraph& sub, const std::vector<int>&) {
        return LayerPlan{VertexSet(sub.n()), Colouring(sub.n())};
    };
    CHECK_THROWS_AS(peel(c4, empty_layer, 2), ContractViolation);

    // contract errors: a non-dipolar layer set
    const LayerOracle non_dipolar = [](const Digraph& sub, const std::vector<int>&) {
        VertexSet s(sub.n());
        s.add(1);
        Colouring c(sub.n());
        c.set(1, 0);
        return LayerPlan{s, c};
    };
    CHECK_THROWS_AS(peel(path(3), non_dipolar, 2), ContractViolation);

    // contract errors: over-budget layer colouring
    const LayerOracle over_budget = [](const Digraph& sub, const std::vector<int>&) {
        Colouring c(sub.n());
        for (int v = 0; v < sub.n(); ++v) c.set(v, v);
        return LayerPlan{sub.full_set(), c};
    };
    CHECK_THROWS_AS(peel(c4, over_budget, 2), ContractViolation);

    // contract errors: an invalid layer colouring
    const LayerOracle invalid = [](const Digraph& sub, const std::vector<int>&) {
        Colouring c(sub.n());
        for (int v = 0; v < sub.n(); ++v) c.set(v, 0);
        return LayerPlan{sub.full_set(), c};
    };
    CHECK_THROWS_AS(peel(c4, invalid, 2), ContractViolation);
}
