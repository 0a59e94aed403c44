// prismcolor: color, verify, generate and inspect square-free Berge graphs.
//
// Exit codes: 0 success, 1 invalid artifact (verify), 2 usage/parse/spec
// error, 3 not square-free, 4 not Berge, 5 internal violation.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "prismcolor/cliques.hpp"
#include "prismcolor/dimacs.hpp"
#include "prismcolor/generators.hpp"
#include "prismcolor/partition.hpp"
#include "prismcolor/serialize.hpp"
#include "prismcolor/solver.hpp"
#include "prismcolor/structure.hpp"

using namespace prismcolor;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kParse = 2, kNotSquareFree = 3, kNotBerge = 4, kInternal = 5 };

constexpr const char* kReportSchema = "prismcolor.report/1";

// Writes next to the target, then renames over it.
void write_atomic(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << data;
        if (!out.flush()) throw std::runtime_error("cannot write " + path);
    }
    std::filesystem::rename(tmp, path);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

std::vector<int> one_based(const std::vector<Vertex>& vs) {
    std::vector<int> out;
    for (Vertex v : vs) out.push_back(v + 1);
    return out;
}

json stats_json(const ColorResult& r) {
    return {{"frames_refined", r.stats.frames_refined},
            {"swaps", r.stats.swaps},
            {"free_swaps", r.stats.free_swaps},
            {"general_swaps", r.stats.general_swaps},
            {"leaves", r.tree.leaf_count()},
            {"internal_nodes", r.tree.internal_count()},
            {"tree_nodes", r.tree.node_count()},
            {"tree_depth", r.tree.depth()}};
}

struct ColorArgs {
    std::string input;
    std::string output;
    std::string json_output;
    std::string report;
    std::string tree_json;
    std::string tree_dot;
    std::string trace;
    int berge_cap = 64;
    bool trust_berge = false;
    int jobs = 1;
};

int cmd_color(const ColorArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    json report{{"schema", kReportSchema}, {"input", {{"path", a.input}}}};
    auto finish = [&](int code, const std::string& status) {
        report["status"] = status;
        report["exit_code"] = code;
        report["wall_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (!a.report.empty()) write_atomic(a.report, report.dump(2) + "\n");
        return code;
    };

    Graph g;
    try {
        g = read_dimacs_file(a.input);
    } catch (const ParseError& e) {
        std::cerr << "error: " << a.input << ": " << e.what() << '\n';
        report["error"] = e.what();
        return finish(kParse, "parse_error");
    }
    report["input"]["n"] = g.size();
    report["input"]["m"] = g.edge_count();

    std::unique_ptr<std::ostream> trace_file;
    std::ostream* trace_out = nullptr;
    if (a.trace == "-") {
        trace_out = &std::cerr;
    } else if (!a.trace.empty()) {
        trace_file = std::make_unique<std::ofstream>(a.trace);
        if (!*trace_file) {
            std::cerr << "error: cannot write " << a.trace << '\n';
            return finish(kParse, "io_error");
        }
        trace_out = trace_file.get();
    }

    SolverOptions opts;
    opts.berge_cap = a.berge_cap;
    opts.trust_berge = a.trust_berge;
    opts.jobs = a.jobs;
    if (trace_out) opts.trace = [trace_out](const json& e) { *trace_out << e.dump() << '\n'; };

    json checks{{"square_free", "checked"},
                {"berge", a.trust_berge ? "trusted" : (g.size() <= a.berge_cap ? "checked" : "trusted_above_cap")}};
    report["checks"] = checks;

    ColorResult r;
    try {
        r = color(g, opts);
    } catch (const NotSquareFree& e) {
        std::cerr << "not square-free: square " << json(one_based({e.witness().begin(), e.witness().end()})).dump()
                  << " (1-based)\n";
        report["witness"] = one_based({e.witness().begin(), e.witness().end()});
        return finish(kNotSquareFree, "not_square_free");
    } catch (const NotBerge& e) {
        const auto& v = e.verdict();
        std::cerr << "not Berge: odd " << (v.antihole ? "antihole " : "hole ") << json(one_based(v.witness)).dump()
                  << " (1-based)\n";
        report["witness"] = {{"cycle", one_based(v.witness)}, {"antihole", v.antihole}};
        return finish(kNotBerge, "not_berge");
    } catch (const std::exception& e) {
        std::cerr << "internal violation: " << e.what() << '\n';
        report["error"] = e.what();
        return finish(kInternal, "internal_violation");
    }

    report["omega"] = r.omega;
    report["colors_used"] = r.colors_used;
    report["stats"] = stats_json(r);
    report["warnings"] = r.warnings;
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';

    write_atomic(a.output.empty() ? "-" : a.output, coloring_to_text(r.coloring));
    if (!a.json_output.empty()) write_atomic(a.json_output, coloring_to_json(r.coloring).dump() + "\n");
    if (!a.tree_json.empty()) write_atomic(a.tree_json, tree_to_json(r.tree).dump(2) + "\n");
    if (!a.tree_dot.empty()) write_atomic(a.tree_dot, tree_to_dot(r.tree));
    std::cerr << "colored n=" << g.size() << " with " << r.colors_used << " colors (omega " << r.omega << ")\n";
    return finish(kOk, "success");
}

PartialColoring load_coloring(const std::string& path, int n) {
    const std::string text = read_text(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return coloring_from_json(json::parse(text));
        } catch (const json::parse_error& e) {
            throw ParseError(path + ": " + e.what(), 0);
        }
    }
    std::istringstream in(text);
    return read_coloring(in, n);
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, const std::string& partition_path) {
    Graph g = read_dimacs_file(graph_path);
    if (!coloring_path.empty()) {
        PartialColoring c = load_coloring(coloring_path, g.size());
        if (c.size() != g.size()) {
            std::cout << "invalid: coloring covers " << c.size() << " vertices, graph has " << g.size() << '\n';
            return kInvalid;
        }
        auto v = verify_coloring(g, c);
        if (!v) {
            std::cout << "invalid: " << v.message;
            if (v.conflict) std::cout << " (edge " << v.conflict->first + 1 << ' ' << v.conflict->second + 1 << ')';
            std::cout << '\n';
            return kInvalid;
        }
        std::cout << "valid coloring with " << c.colors_used() << " colors\n";
        return kOk;
    }
    GoodPartition p = partition_from_json(parse_json_file(partition_path));
    try {
        auto v = verify_good_partition(g, p);
        if (!v) {
            std::cout << "invalid: condition " << to_string(v.violated) << ": " << v.message;
            if (!v.witness.empty()) std::cout << " witness " << json(v.witness).dump();
            std::cout << '\n';
            return kInvalid;
        }
    } catch (const MalformedPartition& e) {
        std::cout << "invalid: malformed partition: " << e.what() << '\n';
        return kInvalid;
    }
    std::cout << "valid good partition\n";
    return kOk;
}

std::vector<int> parse_lengths(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw SpecError("not an integer: '" + item + "'");
        }
    }
    return out;
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed,
            const std::string& out, const std::string& sidecar) {
    auto ints = [&](std::size_t count) {
        if (params.size() != count) {
            throw SpecError(kind + " expects " + std::to_string(count) + " parameters, got " +
                            std::to_string(params.size()));
        }
        std::vector<int> v;
        for (const auto& p : params) {
            auto one = parse_lengths(p);
            if (one.size() != 1) throw SpecError("not an integer: '" + p + "'");
            v.push_back(one.front());
        }
        return v;
    };
    Instance inst;
    if (kind == "prism") {
        auto v = ints(3);
        inst = gen_prism({{v[0], v[1], v[2]}});
    } else if (kind == "hyperprism") {
        if (params.size() != 3) throw SpecError("hyperprism expects three comma-separated strips, e.g. 2,2 2 2");
        HyperprismSpec spec;
        for (int i = 0; i < 3; ++i) spec.strips[i] = parse_lengths(params[i]);
        inst = gen_hyperprism(spec);
    } else if (kind == "lk4") {
        auto v = ints(6);
        inst = gen_lk4_subdivision({v[0], v[1], v[2], v[3], v[4], v[5]});
    } else if (kind == "random") {
        auto v = ints(1);
        if (v[0] < 0) throw SpecError("n must be non-negative");
        inst = gen_square_free_berge(v[0], seed);
    } else {
        throw SpecError("unknown construction '" + kind + "' (prism, hyperprism, lk4, random)");
    }
    for (const auto& w : inst.warnings) std::cerr << "warning: " << w << '\n';
    write_atomic(out.empty() ? "-" : out, to_dimacs(inst.graph));
    std::string side = sidecar;
    if (side.empty() && !out.empty() && out != "-") side = out + ".json";
    if (!side.empty()) write_atomic(side, inst.sidecar().dump(2) + "\n");
    return kOk;
}

int cmd_analyze(const std::string& path, int berge_cap) {
    Graph g = read_dimacs_file(path);
    json r{{"schema", kReportSchema}, {"input", {{"path", path}, {"n", g.size()}, {"m", g.edge_count()}}}};
    auto sq = contains_square(g);
    r["square_free"] = !sq.has_value();
    if (sq) r["square"] = one_based({sq->begin(), sq->end()});
    if (g.size() <= berge_cap) {
        auto v = is_berge(g, {berge_cap, false});
        r["berge"] = v.berge;
        if (!v.berge) r["odd_hole"] = {{"cycle", one_based(v.witness)}, {"antihole", v.antihole}};
    } else {
        r["berge"] = nullptr;
    }
    auto cl = maximal_cliques(g);
    int w = 0;
    for (const auto& c : cl) w = std::max(w, static_cast<int>(c.size()));
    r["omega"] = w;
    r["maximal_cliques"] = cl.size();
    r["triads"] = find_triads(g).size();
    if (!sq) {
        try {
            r["good_partition"] = find_good_partition(g).has_value();
        } catch (const HypothesisViolation& e) {
            r["good_partition"] = nullptr;
            r["note"] = e.what();
        }
    } else {
        r["good_partition"] = nullptr;
    }
    std::cout << r.dump(2) << '\n';
    return kOk;
}

int cmd_partition(const std::string& path, int jobs) {
    Graph g = read_dimacs_file(path);
    if (auto sq = contains_square(g)) {
        std::cerr << "not square-free: square " << json(one_based({sq->begin(), sq->end()})).dump() << " (1-based)\n";
        return kNotSquareFree;
    }
    auto s = search_good_partition(g, {jobs});
    json r{{"frames_refined", s.frames_refined}, {"clique_pairs_pruned", s.clique_pairs_pruned}};
    if (s.partition) {
        r["partition"] = to_json(*s.partition);
        r["frame"] = to_json(*s.frame);
        r["triad"] = *s.triad;
    } else {
        r["partition"] = nullptr;
    }
    std::cout << r.dump(2) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact omega-coloring of square-free Berge graphs"};
    app.require_subcommand(1);

    ColorArgs ca;
    auto* color_cmd = app.add_subcommand("color", "Color a DIMACS graph with omega colors");
    color_cmd->add_option("graph", ca.input, "DIMACS .col file")->required();
    color_cmd->add_option("-o,--output", ca.output, "coloring as 'v <vertex> <color>' lines (default stdout)");
    color_cmd->add_option("--json-output", ca.json_output, "coloring as JSON");
    color_cmd->add_option("--report", ca.report, "run report (JSON)");
    color_cmd->add_option("--tree-json", ca.tree_json, "decomposition tree as JSON");
    color_cmd->add_option("--tree-dot", ca.tree_dot, "decomposition tree as DOT");
    color_cmd->add_option("--trace", ca.trace, "JSON-lines event stream ('-' for stderr)");
    color_cmd->add_option("--berge-cap", ca.berge_cap, "largest n for the exhaustive Berge check")
        ->check(CLI::NonNegativeNumber);
    color_cmd->add_flag("--trust-berge", ca.trust_berge, "skip the Berge check");
    color_cmd->add_option("-j,--jobs", ca.jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string vgraph, vcoloring, vpartition;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring or a good partition");
    verify_cmd->add_option("graph", vgraph, "DIMACS .col file")->required();
    auto* vc = verify_cmd->add_option("--coloring", vcoloring, "'v' lines or JSON coloring");
    auto* vp = verify_cmd->add_option("--partition", vpartition, "partition JSON");
    vc->excludes(vp);

    std::string gkind, gout, gside;
    std::vector<std::string> gparams;
    std::uint64_t gseed = 0;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a test graph");
    gen_cmd->add_option("construction", gkind, "prism | hyperprism | lk4 | random")->required();
    gen_cmd->add_option("params", gparams, "lengths (hyperprism: one comma list per strip) or n for random");
    gen_cmd->add_option("--seed", gseed, "seed for random");
    gen_cmd->add_option("-o,--output", gout, "DIMACS output (default stdout)");
    gen_cmd->add_option("--sidecar", gside, "JSON sidecar (default <output>.json)");

    std::string apath;
    int acap = 64;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report structural facts about a graph");
    analyze_cmd->add_option("graph", apath, "DIMACS .col file")->required();
    analyze_cmd->add_option("--berge-cap", acap, "largest n for the exhaustive Berge check");

    std::string ppath;
    int pjobs = 1;
    auto* partition_cmd = app.add_subcommand("partition", "Find a good partition and its frame");
    partition_cmd->add_option("graph", ppath, "DIMACS .col file")->required();
    partition_cmd->add_option("-j,--jobs", pjobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*color_cmd) return cmd_color(ca);
        if (*verify_cmd) {
            if (vcoloring.empty() && vpartition.empty()) {
                std::cerr << "verify: one of --coloring or --partition is required\n";
                return kParse;
            }
            return cmd_verify(vgraph, vcoloring, vpartition);
        }
        if (*gen_cmd) return cmd_gen(gkind, gparams, gseed, gout, gside);
        if (*analyze_cmd) return cmd_analyze(apath, acap);
        if (*partition_cmd) return cmd_partition(ppath, pjobs);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const SpecError& e) {
        std::cerr << "spec error: " << e.what() << '\n';
        return kParse;
    } catch (const SizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "internal violation: " << e.what() << '\n';
        return kInternal;
    }
    return kParse;
}
