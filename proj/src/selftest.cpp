#include "dichroma/selftest.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "dichroma/cli.hpp"
#include "dichroma/exact.hpp"
#include "dichroma/generate.hpp"
#include "dichroma/io.hpp"
#include "dichroma/pipeline.hpp"
#include "dichroma/rng.hpp"
#include "dichroma/selfcheck.hpp"

namespace dichroma {

namespace {

namespace fs = std::filesystem;

struct Line {
    std::string text;
    bool pass;
};

Digraph make_triangle_free(const Digraph& input, Rng& rng) {
    const auto initial = input.arcs();
    std::set<std::pair<int, int>> arcs(initial.begin(), initial.end());
    while (true) {
        const Digraph d(input.n(), {arcs.begin(), arcs.end()});
        const auto tri = find_triangle(d);
        if (!tri) return d;
        std::vector<std::pair<int, int>> present;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j && d.has_arc(tri->vertices[i], tri->vertices[j]))
                    present.emplace_back(tri->vertices[i], tri->vertices[j]);
        arcs.erase(present[rng.below(present.size())]);
    }
}

struct Suite {
    SelftestLevel level;
    std::vector<Line> lines;

    bool full() const { return level == SelftestLevel::Full; }

    void add(int idx, bool pass, const std::string& detail) {
        lines.push_back({"criterion " + std::to_string(idx) + ": " +
                             (pass ? "PASS" : "FAIL") + " " + detail,
                         pass});
    }

    // Exact solver against the naive assignment-enumeration oracle, over the
    // whole labelled space: oriented digraphs, then 3-vertex digraphs with
    // digons allowed.
    void criterion1() {
        std::uint64_t oriented_checked = 0, mismatches = 0;
        OrientedEnumerator oriented(full() ? 5 : 4);
        while (auto d = oriented.next()) {
            ++oriented_checked;
            const auto exact = exact_dichromatic(*d);
            if (!exact || exact->chi != brute_force_dichromatic(*d)) ++mismatches;
        }
        std::uint64_t digon_checked = 0;
        DigraphEnumerator general(3);
        while (auto d = general.next()) {
            ++digon_checked;
            const auto exact = exact_dichromatic(*d);
            if (!exact || exact->chi != brute_force_dichromatic(*d)) ++mismatches;
        }
        add(1, mismatches == 0,
            "oracle equivalence: " + std::to_string(oriented_checked) + " oriented digraphs on " +
                (full() ? std::string("5") : std::string("4")) + " vertices and " +
                std::to_string(digon_checked) + " digraphs with digons on 3, mismatches=" +
                std::to_string(mismatches));
    }

    // Odd-cycle-free instances always 2-colour.
    void criterion2() {
        const int count = full() ? 10000 : 500;
        int failures = 0;
        for (int i = 0; i < count; ++i) {
            Rng rng(0xC2000000ULL + i);
            const int n = 1 + static_cast<int>(rng.below(40));
            const double p = 0.02 + 0.20 * rng.real01();
            const Digraph d = generate({GenKind::NoOddCycle, n, p, 0x77000000ULL + i});
            auto res = two_colour_no_odd(d);
            auto* col = std::get_if<Colouring>(&res);
            if (col == nullptr || col->colours_used() > 2 || verify_colouring(d, *col))
                ++failures;
        }
        add(2, failures == 0,
            "two-colouring of " + std::to_string(count) +
                " odd-cycle-free instances (n<=40), failures=" + std::to_string(failures));
    }

    // Order/colouring translations, both directions.
    void criterion3() {
        int round_trip_failures = 0;
        std::uint64_t round_trips = 0;
        for (int n = 1; n <= (full() ? 5 : 4); ++n) {
            OrientedEnumerator en(n);
            while (auto d = en.next()) {
                ++round_trips;
                const auto exact = exact_dichromatic(*d);
                const auto order = colouring_to_order(*d, exact->witness);
                const auto oc = order_to_colouring(*d, order);
                if (oc.backward_path_vertices != exact->chi ||
                    verify_colouring(*d, oc.colouring))
                    ++round_trip_failures;
            }
        }
        const int pairs = full() ? 500 : 100;
        int pair_failures = 0;
        for (int i = 0; i < pairs; ++i) {
            Rng rng(0xC3000000ULL + i);
            const int n = 2 + static_cast<int>(rng.below(9));
            const double p = 0.10 + 0.50 * rng.real01();
            const Digraph d = generate({GenKind::RandomOriented, n, p, rng.next()});
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v) order[v] = v;
            rng.shuffle(order);
            const auto oc = order_to_colouring(d, order);
            if (oc.backward_path_vertices !=
                    selfcheck::longest_backward_path_by_enumeration(d, order) ||
                verify_colouring(d, oc.colouring))
                ++pair_failures;
        }
        add(3, round_trip_failures == 0 && pair_failures == 0,
            "order/colouring translations: " + std::to_string(round_trips) +
                " exhaustive round trips (failures=" + std::to_string(round_trip_failures) +
                "), " + std::to_string(pairs) + " random order pairs (failures=" +
                std::to_string(pair_failures) + ")");
    }

    // Induced-P4 certificates from cycle neighbours.
    void criterion4() {
        const int want = full() ? 1000 : 150;
        int collected = 0, failures = 0;
        for (std::uint64_t seed = 0; collected < want && seed < static_cast<std::uint64_t>(want) * 100;
             ++seed) {
            Rng rng(0xC4000000ULL + seed);
            const int n = 8 + static_cast<int>(rng.below(9));
            const double p = 0.25 + 0.25 * rng.real01();
            const Digraph base = generate({GenKind::RandomOriented, n, p, rng.next()});
            const Digraph d = make_triangle_free(base, rng);
            const auto cycle = min_odd_cycle(d);
            if (!cycle) continue;
            const VertexSet on_cycle(d.n(), cycle->vertices);
            std::vector<int> candidates;
            for (int v = 0; v < d.n(); ++v) {
                if (on_cycle.contains(v)) continue;
                for (int x : cycle->vertices)
                    if (d.adjacent(v, x)) {
                        candidates.push_back(v);
                        break;
                    }
            }
            if (candidates.empty()) continue;
            const int a = candidates[rng.below(candidates.size())];
            ++collected;

            bool sends = false, receives = false;
            for (int x : cycle->vertices) {
                sends = sends || d.has_arc(a, x);
                receives = receives || d.has_arc(x, a);
            }
            try {
                const P4Certificate cert = find_p4_certificate(d, *cycle, a);
                if (!certificate_holds(d, *cycle, a, cert)) ++failures;
                if (sends && !receives && cert.shape != P4Shape::OutPath) ++failures;
                if (receives && !sends && cert.shape != P4Shape::InPath) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
        add(4, collected == want && failures == 0,
            "cycle-neighbour certificates: " + std::to_string(collected) + "/" +
                std::to_string(want) + " triples, failures=" + std::to_string(failures));
    }

    // The full pipeline on generated in-class instances, with the live
    // structural budgets of criterion 6 aggregated from the same runs.
    void criterion5_and_6() {
        const int in_class = full() ? 700 : 90;
        const int blowups = full() ? 300 : 30;
        int failures = 0, within_nominal = 0, max_colours = 0;
        int exact_checked = 0, exact_failures = 0;
        int escalations = 0;
        PipelineStats agg;

        const auto consume = [&](const Digraph& d) {
            const PipelineOutcome outcome = colour_or_witness(d, PipelineMode::Outer);
            escalations += outcome.stats.escalations;
            const auto* col = std::get_if<Colouring>(&outcome.result);
            if (col == nullptr) {
                ++failures;
                return;
            }
            if (verify_colouring(d, *col)) {
                ++failures;
                return;
            }
            const int used = col->colours_used();
            max_colours = std::max(max_colours, used);
            if (used > BudgetTable::final_bound(PipelineMode::Outer)) ++failures;
            if (used <= BudgetTable::final_nominal(PipelineMode::Outer)) ++within_nominal;
            if (d.n() <= 10) {
                ++exact_checked;
                const auto exact = exact_dichromatic(d);
                if (!exact || exact->chi > used) ++exact_failures;
            }
            const PipelineStats& s = outcome.stats;
            agg.cycle_max = std::max(agg.cycle_max, s.cycle_max);
            agg.first_out_max = std::max(agg.first_out_max, s.first_out_max);
            agg.first_in_max = std::max(agg.first_in_max, s.first_in_max);
            agg.first_core_max = std::max(agg.first_core_max, s.first_core_max);
            agg.second_out_max = std::max(agg.second_out_max, s.second_out_max);
            agg.second_in_max = std::max(agg.second_in_max, s.second_in_max);
            agg.second_core_recursive_max =
                std::max(agg.second_core_recursive_max, s.second_core_recursive_max);
            agg.second_core_direct_max =
                std::max(agg.second_core_direct_max, s.second_core_direct_max);
            agg.third_out_max = std::max(agg.third_out_max, s.third_out_max);
            agg.third_in_max = std::max(agg.third_in_max, s.third_in_max);
            agg.outer_layer_colours_max =
                std::max(agg.outer_layer_colours_max, s.outer_layer_colours_max);
            agg.inner_layer_colours_max =
                std::max(agg.inner_layer_colours_max, s.inner_layer_colours_max);
        };

        for (int i = 0; i < in_class; ++i) {
            Rng rng(0xC5000000ULL + i);
            const int n = 5 + (i * 53) % 56;
            const double p = 0.05 + 0.15 * rng.real01();
            consume(generate({GenKind::InClassP6TriangleFree, n, p, rng.next()}));
        }
        for (int i = 0; i < blowups; ++i) {
            Rng rng(0xC5100000ULL + i);
            const int n = 5 + static_cast<int>(rng.below(56));
            const double p = 0.15 + 0.45 * rng.real01();
            consume(generate({GenKind::OddCycleBlowup, n, p, rng.next()}));
        }

        const int total = in_class + blowups;
        add(5, failures == 0 && exact_failures == 0,
            "pipeline on " + std::to_string(total) + " in-class instances (n<=60): failures=" +
                std::to_string(failures) + ", max colours=" + std::to_string(max_colours) +
                ", within nominal 382: " + std::to_string(within_nominal) + "/" +
                std::to_string(total) + ", exact<=pipeline on " + std::to_string(exact_checked) +
                " small instances (failures=" + std::to_string(exact_failures) + ")");

        const bool budgets_ok =
            agg.cycle_max <= BudgetTable::kCycle && agg.first_out_max <= BudgetTable::kFirstOut &&
            agg.first_in_max <= BudgetTable::kFirstIn &&
            agg.first_core_max <= BudgetTable::kFirstCore &&
            agg.second_out_max <= BudgetTable::kSecondOut &&
            agg.second_in_max <= BudgetTable::kSecondIn &&
            agg.second_core_recursive_max <= BudgetTable::kSecondCoreOuter &&
            agg.second_core_direct_max <= BudgetTable::kSecondCoreInner &&
            agg.third_out_max <= BudgetTable::kThirdOut &&
            agg.third_in_max <= BudgetTable::kThirdIn &&
            agg.outer_layer_colours_max <= BudgetTable::layer_total(PipelineMode::Outer) &&
            agg.inner_layer_colours_max <= BudgetTable::layer_total(PipelineMode::Inner);
        add(6, budgets_ok && escalations == 0,
            "per-layer structure: part maxima " + std::to_string(agg.cycle_max) + "/" +
                std::to_string(agg.first_out_max) + "/" + std::to_string(agg.first_in_max) + "/" +
                std::to_string(agg.first_core_max) + "/" + std::to_string(agg.second_out_max) +
                "/" + std::to_string(agg.second_in_max) + "/" +
                std::to_string(agg.second_core_recursive_max) + "|" +
                std::to_string(agg.second_core_direct_max) + "/" +
                std::to_string(agg.third_out_max) + "/" + std::to_string(agg.third_in_max) +
                " within 3/4/4/30/2/2/154|30/1/1, layer maxima " +
                std::to_string(agg.outer_layer_colours_max) + "<=201 outer " +
                std::to_string(agg.inner_layer_colours_max) + "<=77 inner, escalations=" +
                std::to_string(escalations));
    }

    // The command line rejects inputs containing a forbidden structure with
    // exit code 1 and a witness that validates.
    void criterion7() {
        const int count = full() ? 200 : 45;
        int failures = 0;
        const fs::path dir =
            fs::temp_directory_path() / ("dichroma-selftest-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        const fs::path file = dir / "case.dgr";

        for (int i = 0; i < count; ++i) {
            Rng rng(0xC7000000ULL + i);
            const int n = 8 + static_cast<int>(rng.below(20));
            const Digraph base = generate({GenKind::RandomOriented, n, 0.15, rng.next()});
            const auto base_arcs = base.arcs();
            std::set<std::pair<int, int>> arcs(base_arcs.begin(), base_arcs.end());

            std::vector<int> ids(n);
            for (int v = 0; v < n; ++v) ids[v] = v;
            rng.shuffle(ids);
            switch (i % 3) {
                case 0:
                    arcs.emplace(ids[0], ids[1]);
                    arcs.emplace(ids[1], ids[0]);
                    break;
                case 1:
                    arcs.emplace(ids[0], ids[1]);
                    arcs.emplace(ids[1], ids[2]);
                    arcs.emplace(ids[0], ids[2]);
                    break;
                case 2: {
                    for (int a = 0; a < 6; ++a)
                        for (int b = 0; b < 6; ++b)
                            if (a != b) arcs.erase({ids[a], ids[b]});
                    for (int a = 0; a < 5; ++a) arcs.emplace(ids[a], ids[a + 1]);
                    break;
                }
            }
            const Digraph d(n, {arcs.begin(), arcs.end()});
            std::ofstream(file) << serialize_digraph(d);

            std::ostringstream out, err;
            const int code = cli_dispatch({"colour", file.string()}, out, err);
            if (code != 1) {
                ++failures;
                continue;
            }
            std::istringstream first_line(out.str());
            std::string kind_name;
            first_line >> kind_name;
            std::vector<int> vertices;
            int id = 0;
            while (first_line >> id) vertices.push_back(id - 1);
            WitnessKind kind;
            if (kind_name == "digon")
                kind = WitnessKind::Digon;
            else if (kind_name == "triangle")
                kind = WitnessKind::Triangle;
            else if (kind_name == "p6")
                kind = WitnessKind::InducedP6;
            else if (kind_name == "c32")
                kind = WitnessKind::InducedC32;
            else {
                ++failures;
                continue;
            }
            if (!witness_holds(d, ForbiddenWitness{kind, vertices})) ++failures;
        }
        fs::remove_all(dir);
        add(7, failures == 0,
            "witness path: " + std::to_string(count) +
                " planted digon/triangle/p6 inputs all rejected with validating witnesses, "
                "failures=" +
                std::to_string(failures));
    }

    // Level-set semantics against the reference implementation, plus the
    // structural facts the levels promise.
    void criterion8() {
        const int count = full() ? 1000 : 150;
        int failures = 0;
        for (int i = 0; i < count; ++i) {
            Rng rng(0xC8000000ULL + i);
            const int n = 2 + static_cast<int>(rng.below(30));
            const double p = 0.05 + 0.30 * rng.real01();
            const Digraph d = generate({GenKind::RandomOriented, n, p, rng.next()});
            VertexSet base(n);
            for (int v = 0; v < n; ++v)
                if (rng.chance(0.2)) base.add(v);
            if (base.empty()) base.add(static_cast<int>(rng.below(n)));
            const int depth = 2 + static_cast<int>(rng.below(3));

            const LevelStructure ls = level_sets(d, base, depth);
            bool ok = true;

            // No arcs between the base and any level past the first.
            for (int k = 2; k <= depth && ok; ++k)
                base.for_each([&](int u) {
                    if (d.out_mask(u).intersects(ls.levels[k]) ||
                        d.in_mask(u).intersects(ls.levels[k]))
                        ok = false;
                });

            // Each vertex of a level keeps one whole neighbourhood side
            // within the next level's reach.
            for (int k = 1; k <= depth && ok; ++k) {
                VertexSet reach(n);
                for (int j = 0; j <= k; ++j) reach |= ls.levels[j];
                ls.levels[k - 1].for_each([&](int v) {
                    if (!d.out_mask(v).subset_of(reach) && !d.in_mask(v).subset_of(reach))
                        ok = false;
                });
            }

            // Witness paths are genuine directed paths through the levels.
            for (int k = 1; k <= depth && ok; ++k) {
                ls.plus_levels[k].for_each([&](int v) {
                    const auto path = ls.plus_witness_path(v);
                    if (static_cast<int>(path.size()) != k + 1) ok = false;
                    for (std::size_t j = 0; ok && j + 1 < path.size(); ++j)
                        if (!d.has_arc(path[j], path[j + 1])) ok = false;
                    for (std::size_t j = 0; ok && j < path.size(); ++j)
                        if (!ls.plus_levels[j].contains(path[j])) ok = false;
                });
                ls.minus_levels[k].for_each([&](int v) {
                    const auto path = ls.minus_witness_path(v);
                    if (static_cast<int>(path.size()) != k + 1) ok = false;
                    for (std::size_t j = 0; ok && j + 1 < path.size(); ++j)
                        if (!d.has_arc(path[j], path[j + 1])) ok = false;
                    for (std::size_t j = 0; ok && j < path.size(); ++j)
                        if (!ls.minus_levels[k - j].contains(path[j])) ok = false;
                });
            }

            // Exact agreement with the reference recursion.
            const auto base_members = base.members();
            const auto ref = selfcheck::reference_level_sets(
                d, std::set<int>(base_members.begin(), base_members.end()), depth);
            for (int k = 0; k <= depth && ok; ++k) {
                const auto plus = ls.plus_levels[k].members();
                const auto minus = ls.minus_levels[k].members();
                if (std::set<int>(plus.begin(), plus.end()) != ref.plus[k] ||
                    std::set<int>(minus.begin(), minus.end()) != ref.minus[k])
                    ok = false;
            }
            if (!ok) ++failures;
        }
        add(8, failures == 0,
            "level sets: " + std::to_string(count) +
                " random (digraph, base) pairs checked against the reference recursion, "
                "failures=" +
                std::to_string(failures));
    }
};

std::string report_of(const Suite& suite) {
    std::string text;
    for (const auto& line : suite.lines) text += line.text + "\n";
    return text;
}

}  // namespace

SelftestResult run_selftest(SelftestLevel level) {
    const auto run_once = [level] {
        Suite suite{level, {}};
        suite.criterion1();
        suite.criterion2();
        suite.criterion3();
        suite.criterion4();
        suite.criterion5_and_6();
        suite.criterion7();
        suite.criterion8();
        return suite;
    };

    const Suite first = run_once();
    const Suite second = run_once();
    const std::string r1 = report_of(first);
    const bool identical = r1 == report_of(second);

    bool all_pass = identical;
    int passed = identical ? 1 : 0;
    for (const auto& line : first.lines) {
        all_pass = all_pass && line.pass;
        passed += line.pass ? 1 : 0;
    }

    std::string report = "selftest level=" +
                         std::string(level == SelftestLevel::Full ? "full" : "quick") + "\n";
    report += r1;
    report += std::string("criterion 9: ") + (identical ? "PASS" : "FAIL") +
              " determinism: repeated run produced " +
              (identical ? "an identical report" : "a different report") + "\n";
    report += "overall: " + std::string(all_pass ? "PASS" : "FAIL") + " (" +
              std::to_string(passed) + "/9 criteria)\n";
    return SelftestResult{report, all_pass};
}

}  // namespace dichroma
