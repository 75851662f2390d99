#include "dichroma/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "dichroma/exact.hpp"
#include "dichroma/generate.hpp"
#include "dichroma/io.hpp"
#include "dichroma/pipeline.hpp"
#include "dichroma/selftest.hpp"

namespace dichroma {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ContractViolation("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ContractViolation("cannot write '" + path + "'");
    out << content;
}

std::string one_based(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += std::to_string(v + 1) + " ";
    if (!s.empty()) s.pop_back();
    return s;
}

std::string witness_line(const ForbiddenWitness& w) {
    return to_string(w.kind) + " " + one_based(w.vertices);
}

int run_colour(const std::string& path, bool inner, bool trust, const std::string& out_path,
               std::ostream& out) {
    const Digraph d = parse_digraph(read_file(path));
    const PipelineMode mode = inner ? PipelineMode::Inner : PipelineMode::Outer;
    PipelineOptions options;
    options.trust_class = trust;
    const PipelineOutcome outcome = colour_or_witness(d, mode, options);

    if (const auto* witness = std::get_if<ForbiddenWitness>(&outcome.result)) {
        out << witness_line(*witness) << '\n';
        return 1;
    }
    const Colouring& col = std::get<Colouring>(outcome.result);
    if (verify_colouring(d, col))
        throw InternalError("colouring failed its own re-verification");
    const int used = col.colours_used();
    const int guaranteed = BudgetTable::final_bound(mode);
    const int nominal = BudgetTable::final_nominal(mode);
    out << "colours=" << used << '\n';
    out << "bound_guaranteed=" << guaranteed << " held=" << (used <= guaranteed ? "yes" : "no")
        << '\n';
    out << "bound_nominal=" << nominal << " held=" << (used <= nominal ? "yes" : "no") << '\n';
    if (!out_path.empty()) write_file(out_path, serialize_colouring(col));
    return 0;
}

int run_verify(const std::string& digraph_path, const std::string& colouring_path,
               std::ostream& out) {
    const Digraph d = parse_digraph(read_file(digraph_path));
    const Colouring col = parse_colouring(read_file(colouring_path));
    if (col.size() != d.n())
        throw ContractViolation("colouring is over " + std::to_string(col.size()) +
                                " vertices, digraph has " + std::to_string(d.n()));
    if (const auto mono = verify_colouring(d, col)) {
        out << "invalid colour=" << mono->colour << " cycle=" << one_based(mono->vertices)
            << '\n';
        return 1;
    }
    out << "valid colours=" << col.colours_used() << '\n';
    return 0;
}

int run_detect(const std::string& path, const std::string& pattern, std::ostream& out) {
    const Digraph d = parse_digraph(read_file(path));
    std::optional<ForbiddenWitness> witness;
    if (pattern == "digon") {
        witness = find_digon(d);
    } else if (pattern == "triangle") {
        witness = find_triangle(d);
    } else if (pattern == "p6") {
        witness = find_induced_p6(d).witness;
    } else if (pattern == "c32") {
        witness = find_induced_c32(d);
    } else if (pattern == "oddcycle") {
        if (const auto cycle = min_odd_cycle(d)) {
            out << "oddcycle " << one_based(cycle->vertices) << '\n';
            return 1;
        }
        out << "absent\n";
        return 0;
    } else {
        throw ContractViolation("unknown pattern '" + pattern + "'");
    }
    if (witness) {
        out << witness_line(*witness) << '\n';
        return 1;
    }
    out << "absent\n";
    return 0;
}

int run_exact(const std::string& path, int k_max, std::ostream& out) {
    const Digraph d = parse_digraph(read_file(path));
    const int bound = k_max > 0 ? k_max : d.n();
    if (const auto result = exact_dichromatic(d, bound)) {
        out << "chi=" << result->chi << '\n';
        return 0;
    }
    out << "chi exceeds kmax=" << bound << '\n';
    return 0;
}

int run_gen(const GenSpec& spec, const std::string& out_path, std::ostream& out) {
    const std::string text = serialize_digraph(generate(spec));
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
    return 0;
}

int run_selftest_cmd(const std::string& level, std::ostream& out) {
    const SelftestResult result =
        run_selftest(level == "full" ? SelftestLevel::Full : SelftestLevel::Quick);
    out << result.report;
    return result.all_pass ? 0 : 1;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"digraph dicolouring toolkit"};
    app.require_subcommand(1);

    std::string colour_file, colour_out;
    bool colour_inner = false, colour_trust = false;
    auto* colour = app.add_subcommand(
        "colour", "colour a digraph within the class budget or print a witness");
    colour->add_option("file", colour_file, "digraph file")->required();
    colour->add_flag("--inner", colour_inner, "also assume no induced C32 (budget 154)");
    colour->add_flag("--trust-class", colour_trust, "skip the up-front pattern searches");
    colour->add_option("--out", colour_out, "write the colouring to this file");

    std::string verify_digraph, verify_colouring_path;
    auto* verify = app.add_subcommand("verify", "check a colouring file against a digraph");
    verify->add_option("digraph", verify_digraph, "digraph file")->required();
    verify->add_option("colouring", verify_colouring_path, "colouring file")->required();

    std::string detect_file, detect_pattern;
    auto* detect = app.add_subcommand("detect", "search for one forbidden pattern");
    detect->add_option("file", detect_file, "digraph file")->required();
    detect->add_option("--pattern", detect_pattern, "digon|triangle|p6|c32|oddcycle")
        ->required();

    std::string exact_file;
    int exact_kmax = 0;
    auto* exact = app.add_subcommand("exact", "exact dichromatic number (small instances)");
    exact->add_option("file", exact_file, "digraph file")->required();
    exact->add_option("--kmax", exact_kmax, "stop after this many colours");

    GenSpec spec;
    std::string gen_kind = "random_oriented", gen_out;
    std::uint64_t gen_seed = 0;
    bool gen_seed_given = false;
    auto* gen = app.add_subcommand("gen", "generate a seeded digraph");
    gen->add_option("--kind", gen_kind,
                    "random_oriented|in_class_p6_trianglefree|no_odd_cycle|odd_cycle_blowup");
    gen->add_option("--n", spec.n, "vertex count")->required();
    gen->add_option("--p", spec.p, "arc density in [0,1]")->required();
    gen->add_option("--seed", gen_seed, "64-bit seed")->each([&](const std::string&) {
        gen_seed_given = true;
    });
    gen->add_option("--out", gen_out, "write to this file instead of stdout");

    std::string selftest_level = "quick";
    auto* selftest = app.add_subcommand("selftest", "run the verification suite");
    selftest->add_option("--level", selftest_level, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));

    std::vector<const char*> argv;
    argv.push_back("dichroma");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (colour->parsed())
            return run_colour(colour_file, colour_inner, colour_trust, colour_out, out);
        if (verify->parsed()) return run_verify(verify_digraph, verify_colouring_path, out);
        if (detect->parsed()) return run_detect(detect_file, detect_pattern, out);
        if (exact->parsed()) return run_exact(exact_file, exact_kmax, out);
        if (gen->parsed()) {
            spec.kind = gen_kind_from_string(gen_kind);
            if (gen_seed_given) {
                spec.seed = gen_seed;
            } else if (const char* env = std::getenv("DICHROMA_SEED")) {
                spec.seed = std::strtoull(env, nullptr, 10);
            } else {
                spec.seed = 1;
            }
            return run_gen(spec, gen_out, out);
        }
        if (selftest->parsed()) return run_selftest_cmd(selftest_level, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const GenError& e) {
        err << "generation failed: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

}  // namespace dichroma
