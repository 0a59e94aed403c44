#include "prismcolor/solver.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

#include "prismcolor/cliques.hpp"

namespace prismcolor {

namespace {

std::string square_message(const Square& s) {
    std::ostringstream os;
    os << "graph contains a square " << s[0] << '-' << s[1] << '-' << s[2] << '-' << s[3];
    return os.str();
}

std::string berge_message(const BergeVerdict& v) {
    std::ostringstream os;
    os << "graph contains an odd " << (v.antihole ? "antihole" : "hole") << " of length " << v.witness.size();
    return os.str();
}

}  // namespace

NotSquareFree::NotSquareFree(Square s) : std::runtime_error(square_message(s)), witness_(s) {}

NotBerge::NotBerge(BergeVerdict v) : std::runtime_error(berge_message(v)), verdict_(std::move(v)) {}

namespace {

template <typename F>
void walk(const DecompositionNode* n, F&& f, std::size_t depth = 1) {
    if (!n) return;
    f(*n, depth);
    walk(n->without_r.get(), f, depth + 1);
    walk(n->without_l.get(), f, depth + 1);
}

}  // namespace

std::size_t DecompositionTree::node_count() const {
    std::size_t c = 0;
    walk(root.get(), [&](const DecompositionNode&, std::size_t) { ++c; });
    return c;
}

std::size_t DecompositionTree::internal_count() const {
    std::size_t c = 0;
    walk(root.get(), [&](const DecompositionNode& n, std::size_t) { c += n.leaf() ? 0 : 1; });
    return c;
}

std::size_t DecompositionTree::leaf_count() const { return node_count() - internal_count(); }

std::size_t DecompositionTree::depth() const {
    std::size_t d = 0;
    walk(root.get(), [&](const DecompositionNode&, std::size_t k) { d = std::max(d, k - 1); });
    return d;
}

PartialColoring leaf_color(const Graph& g, int target, int size_cap) {
    const int n = g.size();
    if (n > size_cap) {
        throw SizeCapExceeded("leaf with " + std::to_string(n) + " vertices exceeds cap " + std::to_string(size_cap));
    }
    PartialColoring c(n);
    if (n == 0) return c;
    if (target < 1) throw Infeasible("target below 1 for a non-empty graph");

    // seen[v][color] counts colored neighbors of v holding that color.
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(n), std::vector<int>(target + 1, 0));
    std::vector<int> saturation(static_cast<std::size_t>(n), 0);

    auto assign = [&](Vertex v, Color col) {
        c.set(v, col);
        for (Vertex w : g.neighbors(v)) {
            if (seen[w][col]++ == 0) ++saturation[w];
        }
    };
    auto unassign = [&](Vertex v) {
        const Color col = c.at(v);
        c.set(v, 0);
        for (Vertex w : g.neighbors(v)) {
            if (--seen[w][col] == 0) --saturation[w];
        }
    };
    auto pick = [&]() {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (c.has(v)) continue;
            if (best < 0 || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && g.degree(v) > g.degree(best))) {
                best = v;
            }
        }
        return best;
    };

    std::function<bool(int, Color)> place = [&](int placed, Color highest) -> bool {
        if (placed == n) return true;
        const Vertex v = pick();
        const Color limit = std::min<Color>(target, highest + 1);
        for (Color col = 1; col <= limit; ++col) {
            if (seen[v][col] != 0) continue;
            assign(v, col);
            if (place(placed + 1, std::max(highest, col))) return true;
            unassign(v);
        }
        return false;
    };
    if (!place(0, 0)) throw Infeasible("no " + std::to_string(target) + "-coloring exists");
    return c;
}

ColoringVerdict verify_coloring(const Graph& g, const PartialColoring& c) {
    if (c.size() != g.size()) return {false, "coloring size differs from graph size", std::nullopt};
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!c.has(v)) return {false, "vertex " + std::to_string(v) + " is uncolored", std::nullopt};
        if (c.at(v) < 0) return {false, "vertex " + std::to_string(v) + " has a negative color", std::nullopt};
    }
    if (auto e = find_conflict(g, c)) {
        return {false,
                "edge " + std::to_string(e->first) + "-" + std::to_string(e->second) + " is monochromatic",
                e};
    }
    const int w = omega(g);
    if (c.max_color() > w) {
        return {false, "color " + std::to_string(c.max_color()) + " exceeds omega " + std::to_string(w), std::nullopt};
    }
    return {};
}

namespace {

struct NodeResult {
    PartialColoring coloring;  // local ids
    std::unique_ptr<DecompositionNode> node;
    SolverStats stats;
};

// Children below this depth are colored on the calling thread.
constexpr int kAsyncDepth = 3;

class Recursion {
public:
    explicit Recursion(const SolverOptions& opts) : opts_(opts) {}

    NodeResult solve(const Graph& g, const VertexSet& ids, int depth) {
        NodeResult out;
        out.node = std::make_unique<DecompositionNode>();
        out.node->vertices = ids;
        const int k = omega(g);

        PartitionSearch search = search_good_partition(g, SearchOptions{opts_.jobs});
        out.stats.frames_refined += search.frames_refined;

        if (!search.partition) {
            out.coloring = leaf_color(g, k, opts_.leaf_cap);
            ++out.stats.leaves;
            emit({{"event", "leaf"}, {"depth", depth}, {"vertices", ids.items()}, {"omega", k}});
            return out;
        }

        const GoodPartition& p = *search.partition;
        auto root = [&](const VertexSet& s) {
            std::vector<Vertex> r;
            for (Vertex v : s) r.push_back(ids[v]);
            return VertexSet(std::move(r));
        };
        const Triad t = *search.triad;
        out.node->partition = GoodPartition{root(p.k1), root(p.k2), root(p.k3), root(p.l), root(p.r)};
        Triad rt{ids[t[0]], ids[t[1]], ids[t[2]]};
        std::sort(rt.begin(), rt.end());
        out.node->triad = rt;
        ++out.stats.internal_nodes;
        emit({{"event", "decompose"},
              {"depth", depth},
              {"vertices", ids.items()},
              {"K1", out.node->partition->k1.items()},
              {"K2", out.node->partition->k2.items()},
              {"K3", out.node->partition->k3.items()},
              {"L", out.node->partition->l.items()},
              {"R", out.node->partition->r.items()},
              {"triad", rt}});

        const VertexSet keepLeft = set_union(p.cutset(), p.l);   // g - R
        const VertexSet keepRight = set_union(p.cutset(), p.r);  // g - L
        const Graph gl = g.induced(keepLeft);
        const Graph gr = g.induced(keepRight);

        NodeResult left;
        NodeResult right;
        if (opts_.jobs > 1 && depth < kAsyncDepth) {
            auto fut = std::async(std::launch::async, [&] { return solve(gl, root(keepLeft), depth + 1); });
            right = solve(gr, root(keepRight), depth + 1);
            left = fut.get();
        } else {
            left = solve(gl, root(keepLeft), depth + 1);
            right = solve(gr, root(keepRight), depth + 1);
        }

        auto lift = [&](const PartialColoring& child, const VertexSet& keep) {
            PartialColoring c(g.size());
            for (std::size_t i = 0; i < keep.size(); ++i) c.set(keep[i], child.at(static_cast<Vertex>(i)));
            return c;
        };
        MergeStats ms;
        MergeOptions mo;
        mo.on_swap = [&](const SwapEvent& e) {
            emit({{"event", "swap"},
                  {"depth", depth},
                  {"side", e.swap.side},
                  {"seed", ids[e.swap.seed]},
                  {"pair", {e.swap.pair.first, e.swap.pair.second}},
                  {"kind", e.swap.kind == SwapCandidate::Kind::free_vertex ? "free" : "general"},
                  {"bad_before", e.bad_before},
                  {"bad_after", e.bad_after}});
        };
        out.coloring = merge_colorings(g, p, lift(left.coloring, keepLeft), lift(right.coloring, keepRight), k, mo, &ms);

        out.stats.frames_refined += left.stats.frames_refined + right.stats.frames_refined;
        out.stats.leaves += left.stats.leaves + right.stats.leaves;
        out.stats.internal_nodes += left.stats.internal_nodes + right.stats.internal_nodes;
        out.stats.free_swaps += ms.free_swaps + left.stats.free_swaps + right.stats.free_swaps;
        out.stats.general_swaps += ms.general_swaps + left.stats.general_swaps + right.stats.general_swaps;
        out.stats.swaps = out.stats.free_swaps + out.stats.general_swaps;
        out.node->without_r = std::move(left.node);
        out.node->without_l = std::move(right.node);
        return out;
    }

private:
    void emit(const nlohmann::json& event) {
        if (!opts_.trace) return;
        std::lock_guard<std::mutex> lock(traceMutex_);
        opts_.trace(event);
    }

    const SolverOptions& opts_;
    std::mutex traceMutex_;
};

}  // namespace

ColorResult color(const Graph& g, const SolverOptions& opts) {
    ColorResult result;
    if (auto sq = contains_square(g)) throw NotSquareFree(*sq);
    if (opts.trust_berge) {
        result.warnings.emplace_back("Berge check skipped (--trust-berge)");
    } else if (g.size() <= opts.berge_cap) {
        auto verdict = is_berge(g, BergeOptions{opts.berge_cap, false});
        if (!verdict.berge) throw NotBerge(std::move(verdict));
    } else {
        result.warnings.emplace_back("n=" + std::to_string(g.size()) + " above Berge cap " +
                                     std::to_string(opts.berge_cap) + "; input trusted to be Berge");
    }

    std::vector<Vertex> all(static_cast<std::size_t>(g.size()));
    for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
    Recursion rec(opts);
    NodeResult top = rec.solve(g, VertexSet(std::move(all)), 0);

    result.coloring = std::move(top.coloring);
    result.tree.root = std::move(top.node);
    result.stats = top.stats;
    result.omega = omega(g);
    result.colors_used = result.coloring.colors_used();

    const auto n = static_cast<std::size_t>(g.size());
    if (n > 0 && result.tree.node_count() > 3 * n * n * n) {
        throw std::logic_error("decomposition tree exceeds 3n^3 nodes");
    }
    std::set<Triad> labels;
    bool duplicate = false;
    walk(result.tree.root.get(), [&](const DecompositionNode& node, std::size_t) {
        if (!node.triad) return;
        Triad t = *node.triad;
        std::sort(t.begin(), t.end());
        if (!labels.insert(t).second) duplicate = true;
    });
    if (duplicate) throw std::logic_error("a triad labels two decomposition nodes");

    if (auto v = verify_coloring(g, result.coloring); !v) throw BergeViolation("final coloring invalid: " + v.message);
    if (result.colors_used != result.omega) {
        throw BergeViolation("used " + std::to_string(result.colors_used) + " colors, omega is " +
                             std::to_string(result.omega));
    }
    return result;
}

nlohmann::json tree_to_json(const DecompositionTree& t) {
    std::function<nlohmann::json(const DecompositionNode&)> rec = [&](const DecompositionNode& node) {
        nlohmann::json j;
        j["vertices"] = node.vertices.items();
        j["leaf"] = node.leaf();
        if (node.partition) {
            const auto& p = *node.partition;
            j["partition"] = {{"K1", p.k1.items()}, {"K2", p.k2.items()}, {"K3", p.k3.items()},
                              {"L", p.l.items()},   {"R", p.r.items()}};
            j["triad"] = *node.triad;
            j["children"] = nlohmann::json::array({rec(*node.without_r), rec(*node.without_l)});
        }
        return j;
    };
    if (!t.root) return nullptr;
    return rec(*t.root);
}

std::string tree_to_dot(const DecompositionTree& t) {
    std::ostringstream os;
    os << "digraph decomposition {\n  node [shape=box, fontname=\"monospace\"];\n";
    int next = 0;
    std::function<int(const DecompositionNode&)> rec = [&](const DecompositionNode& node) {
        const int id = next++;
        os << "  n" << id << " [label=\"n=" << node.vertices.size();
        if (node.partition) {
            const auto& p = *node.partition;
            const auto& tr = *node.triad;
            os << "\\n|K1|=" << p.k1.size() << " |K2|=" << p.k2.size() << " |K3|=" << p.k3.size()
               << "\\n|L|=" << p.l.size() << " |R|=" << p.r.size() << "\\ntriad (" << tr[0] << "," << tr[1] << ","
               << tr[2] << ")\"];\n";
            const int a = rec(*node.without_r);
            const int b = rec(*node.without_l);
            os << "  n" << id << " -> n" << a << " [label=\"G-R\"];\n";
            os << "  n" << id << " -> n" << b << " [label=\"G-L\"];\n";
        } else {
            os << "\\nleaf\", style=rounded];\n";
        }
        return id;
    };
    if (t.root) rec(*t.root);
    os << "}\n";
    return os.str();
}

}  // namespace prismcolor
