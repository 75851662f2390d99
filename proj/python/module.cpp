#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dichroma/exact.hpp"
#include "dichroma/generate.hpp"
#include "dichroma/io.hpp"
#include "dichroma/levels.hpp"
#include "dichroma/pipeline.hpp"
#include "dichroma/selftest.hpp"
#include "dichroma/witness.hpp"

namespace py = pybind11;
using namespace dichroma;

namespace {

std::vector<int> colouring_to_list(const Colouring& col) {
    std::vector<int> out(col.raw());
    return out;
}

Colouring list_to_colouring(const Digraph& d, const std::vector<int>& colours) {
    if (static_cast<int>(colours.size()) != d.n())
        throw ContractViolation("colour list length does not match the digraph");
    return Colouring(d.n(), colours);
}

std::vector<std::vector<int>> levels_to_lists(const std::vector<VertexSet>& levels) {
    std::vector<std::vector<int>> out;
    out.reserve(levels.size());
    for (const auto& level : levels) out.push_back(level.members());
    return out;
}

PipelineMode mode_from_string(const std::string& mode) {
    if (mode == "outer") return PipelineMode::Outer;
    if (mode == "inner") return PipelineMode::Inner;
    throw ContractViolation("mode must be 'outer' or 'inner'");
}

}  // namespace

PYBIND11_MODULE(dichroma, m) {
    m.doc() = "Digraph dicolouring toolkit: bounded colourings of triangle-free oriented "
              "graphs with no induced P6, witness finders, and exact solvers.";

    py::register_exception<ContractViolation>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GenError>(m, "GenError", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("arcs"))
        .def_property_readonly("n", &Digraph::n)
        .def_property_readonly("arc_count", &Digraph::arc_count)
        .def("arcs", &Digraph::arcs)
        .def("has_arc", &Digraph::has_arc)
        .def("out_neighbours", [](const Digraph& d, int v) { return d.out(v); })
        .def("in_neighbours", [](const Digraph& d, int v) { return d.in(v); })
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
        .def("__repr__", [](const Digraph& d) {
            std::ostringstream s;
            s << "Digraph(n=" << d.n() << ", arcs=" << d.arc_count() << ")";
            return s.str();
        });

    py::class_<ForbiddenWitness>(m, "Witness")
        .def_property_readonly("kind",
                               [](const ForbiddenWitness& w) { return to_string(w.kind); })
        .def_readonly("vertices", &ForbiddenWitness::vertices)
        .def("__repr__", [](const ForbiddenWitness& w) {
            std::ostringstream s;
            s << "Witness(" << to_string(w.kind) << ")";
            return s.str();
        });

    py::class_<OddCycle>(m, "OddCycle")
        .def_readonly("vertices", &OddCycle::vertices)
        .def_readonly("minimal", &OddCycle::minimal)
        .def("__len__", &OddCycle::length);

    py::class_<P4Certificate>(m, "P4Certificate")
        .def_property_readonly("shape",
                               [](const P4Certificate& c) { return to_string(c.shape); })
        .def_readonly("a", &P4Certificate::a)
        .def_readonly("b", &P4Certificate::b)
        .def_readonly("c", &P4Certificate::c)
        .def_readonly("d", &P4Certificate::d);

    py::class_<LevelStructure>(m, "LevelStructure")
        .def_property_readonly("depth", [](const LevelStructure& ls) { return ls.depth; })
        .def_property_readonly(
            "plus_levels", [](const LevelStructure& ls) { return levels_to_lists(ls.plus_levels); })
        .def_property_readonly(
            "minus_levels",
            [](const LevelStructure& ls) { return levels_to_lists(ls.minus_levels); })
        .def_property_readonly("levels",
                               [](const LevelStructure& ls) { return levels_to_lists(ls.levels); })
        .def("plus_witness_path", &LevelStructure::plus_witness_path)
        .def("minus_witness_path", &LevelStructure::minus_witness_path);

    m.def("reverse", &reverse, py::arg("digraph"));
    m.def(
        "induced_subdigraph",
        [](const Digraph& d, const std::vector<int>& vertices) {
            const auto sub = induced_subdigraph(d, VertexSet(d.n(), vertices));
            return py::make_tuple(sub.graph, sub.to_global);
        },
        py::arg("digraph"), py::arg("vertices"),
        "Returns (subdigraph, mapping) where mapping[i] is the original id of local vertex i.");
    m.def("strong_components", &strong_components, py::arg("digraph"),
          "Strongly connected classes in a topological order of the condensation.");
    m.def(
        "topological_order",
        [](const Digraph& d) -> py::object {
            const auto result = topological_order(d);
            if (const auto* order = std::get_if<std::vector<int>>(&result))
                return py::make_tuple("order", *order);
            return py::make_tuple("cycle", std::get<DirectedCycle>(result).vertices);
        },
        py::arg("digraph"), "('order', vertices) when acyclic, ('cycle', vertices) otherwise.");
    m.def(
        "level_sets",
        [](const Digraph& d, const std::vector<int>& base, int depth) {
            return level_sets(d, VertexSet(d.n(), base), depth);
        },
        py::arg("digraph"), py::arg("base"), py::arg("depth"));

    m.def("find_digon", &find_digon, py::arg("digraph"));
    m.def("find_triangle", &find_triangle, py::arg("digraph"));
    m.def(
        "find_induced_p6",
        [](const Digraph& d, std::uint64_t budget) -> std::optional<ForbiddenWitness> {
            const auto result = find_induced_p6(d, budget);
            if (result.outcome == SearchOutcome::BudgetExceeded)
                throw ContractViolation("induced-path search exceeded its node budget");
            return result.witness;
        },
        py::arg("digraph"), py::arg("node_budget") = kNoBudget);
    m.def("find_induced_c32", &find_induced_c32, py::arg("digraph"));
    m.def("min_odd_cycle", &min_odd_cycle, py::arg("digraph"));
    m.def(
        "find_p4_certificate",
        [](const Digraph& d, const std::vector<int>& cycle, int a) {
            return find_p4_certificate(d, OddCycle{cycle, false}, a);
        },
        py::arg("digraph"), py::arg("cycle"), py::arg("a"));

    m.def(
        "verify_colouring",
        [](const Digraph& d, const std::vector<int>& colours) -> py::object {
            const auto mono = verify_colouring(d, list_to_colouring(d, colours));
            if (!mono) return py::none();
            return py::make_tuple(mono->colour, mono->vertices);
        },
        py::arg("digraph"), py::arg("colours"),
        "None when valid, else (colour, monochromatic cycle vertices).");
    m.def(
        "two_colour_no_odd",
        [](const Digraph& d) -> py::object {
            const auto result = two_colour_no_odd(d);
            if (const auto* col = std::get_if<Colouring>(&result))
                return py::make_tuple("colouring", colouring_to_list(*col));
            return py::make_tuple("odd_cycle", std::get<OddCycle>(result).vertices);
        },
        py::arg("digraph"));
    m.def(
        "order_to_colouring",
        [](const Digraph& d, const std::vector<int>& order) {
            const auto oc = order_to_colouring(d, order);
            return py::make_tuple(colouring_to_list(oc.colouring), oc.backward_path_vertices);
        },
        py::arg("digraph"), py::arg("order"),
        "(colours, k) where k is the longest backward-only path's vertex count.");
    m.def(
        "colouring_to_order",
        [](const Digraph& d, const std::vector<int>& colours) {
            return colouring_to_order(d, list_to_colouring(d, colours));
        },
        py::arg("digraph"), py::arg("colours"));
    m.def(
        "is_dipolar",
        [](const Digraph& d, const std::vector<int>& members) -> py::object {
            const auto result = is_dipolar(d, VertexSet(d.n(), members));
            if (const auto* cert = std::get_if<DipolarCertificate>(&result))
                return py::make_tuple(cert->s_plus.members(), cert->s_minus.members());
            return py::int_(std::get<int>(result));
        },
        py::arg("digraph"), py::arg("members"),
        "(s_plus, s_minus) when dipolar, else the violating vertex.");

    py::class_<PipelineStats>(m, "PipelineStats")
        .def_readonly("outer_layers", &PipelineStats::outer_layers)
        .def_readonly("inner_layers", &PipelineStats::inner_layers)
        .def_readonly("escalations", &PipelineStats::escalations)
        .def_readonly("final_colours", &PipelineStats::final_colours);

    py::class_<PipelineOutcome>(m, "PipelineOutcome")
        .def_property_readonly("colours",
                               [](const PipelineOutcome& o) -> py::object {
                                   if (const auto* col = std::get_if<Colouring>(&o.result))
                                       return py::cast(colouring_to_list(*col));
                                   return py::none();
                               })
        .def_property_readonly("witness",
                               [](const PipelineOutcome& o) -> py::object {
                                   if (const auto* w = std::get_if<ForbiddenWitness>(&o.result))
                                       return py::cast(*w);
                                   return py::none();
                               })
        .def_readonly("stats", &PipelineOutcome::stats);

    m.def(
        "colour_or_witness",
        [](const Digraph& d, const std::string& mode, bool trust_class) {
            PipelineOptions options;
            options.trust_class = trust_class;
            return colour_or_witness(d, mode_from_string(mode), options);
        },
        py::arg("digraph"), py::arg("mode") = "outer", py::arg("trust_class") = false);
    m.def(
        "final_bound", [](const std::string& mode) { return BudgetTable::final_bound(mode_from_string(mode)); },
        py::arg("mode") = "outer");
    m.def(
        "final_nominal",
        [](const std::string& mode) { return BudgetTable::final_nominal(mode_from_string(mode)); },
        py::arg("mode") = "outer");

    m.def(
        "exact_dichromatic",
        [](const Digraph& d, std::optional<int> k_max) -> py::object {
            const auto result = k_max ? exact_dichromatic(d, *k_max) : exact_dichromatic(d);
            if (!result) return py::none();
            return py::make_tuple(result->chi, colouring_to_list(result->witness));
        },
        py::arg("digraph"), py::arg("k_max") = py::none(),
        "(chi, colours), or None when chi exceeds k_max.");
    m.def("brute_force_dichromatic", &brute_force_dichromatic, py::arg("digraph"));

    m.def(
        "generate",
        [](const std::string& kind, int n, double p, std::uint64_t seed) {
            return generate({gen_kind_from_string(kind), n, p, seed});
        },
        py::arg("kind"), py::arg("n"), py::arg("p"), py::arg("seed"));

    m.def("parse_digraph", &parse_digraph, py::arg("text"));
    m.def("serialize_digraph", &serialize_digraph, py::arg("digraph"));
    m.def(
        "parse_colouring",
        [](const std::string& text) { return colouring_to_list(parse_colouring(text)); },
        py::arg("text"));
    m.def(
        "serialize_colouring",
        [](const std::vector<int>& colours) {
            return serialize_colouring(Colouring(static_cast<int>(colours.size()), colours));
        },
        py::arg("colours"));

    m.def(
        "selftest",
        [](const std::string& level) {
            const auto result =
                run_selftest(level == "full" ? SelftestLevel::Full : SelftestLevel::Quick);
            return py::make_tuple(result.all_pass, result.report);
        },
        py::arg("level") = "quick", "(all_pass, report)");
}
