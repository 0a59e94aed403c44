#include "prismcolor/generators.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "prismcolor/structure.hpp"

namespace prismcolor {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

nlohmann::json Instance::sidecar() const {
    nlohmann::json j;
    j["construction"] = construction;
    j["params"] = params;
    j["n"] = graph.size();
    j["m"] = graph.edge_count();
    j["validation"] = {{"square_free", square_free}, {"berge", berge ? nlohmann::json(*berge) : nlohmann::json()}};
    nlohmann::json groups = nlohmann::json::object();
    for (const auto& [name, s] : parts) groups[name] = s.items();
    j["parts"] = groups;
    j["warnings"] = warnings;
    return j;
}

namespace {

void validate(Instance& inst) {
    inst.square_free = !contains_square(inst.graph).has_value();
    if (!inst.square_free) inst.warnings.emplace_back("graph contains a square");
    if (inst.graph.size() <= kGeneratorBergeCap) {
        inst.berge = is_berge(inst.graph, {kGeneratorBergeCap, false}).berge;
        if (!*inst.berge) inst.warnings.emplace_back("graph is not Berge");
    }
}

void check_parity(const std::vector<int>& lengths) {
    if (lengths.empty()) throw SpecError("no rungs given");
    for (int len : lengths) {
        if (len < 1) throw SpecError("rung lengths must be positive");
        if (len % 2 != lengths.front() % 2) throw SpecError("rung lengths must share one parity");
    }
}

// Appends a rung of `len` edges from a to b; returns its interior.
VertexSet add_rung(EdgeList& edges, int& next, Vertex a, Vertex b, int len) {
    std::vector<Vertex> interior;
    Vertex prev = a;
    for (int i = 1; i < len; ++i) {
        interior.push_back(next);
        edges.emplace_back(prev, next);
        prev = next++;
    }
    edges.emplace_back(prev, b);
    return VertexSet(std::move(interior));
}

}  // namespace

Instance gen_prism(const PrismSpec& spec) {
    check_parity({spec.lengths.begin(), spec.lengths.end()});
    HyperprismSpec h;
    for (int i = 0; i < 3; ++i) h.strips[i] = {spec.lengths[i]};
    Instance inst = gen_hyperprism(h);
    inst.construction = "prism";
    inst.params = {{"lengths", spec.lengths}};
    std::map<std::string, VertexSet> parts;
    parts["A"] = {0, 1, 2};
    parts["B"] = {3, 4, 5};
    for (int i = 1; i <= 3; ++i) parts["P" + std::to_string(i)] = inst.parts.at("C" + std::to_string(i));
    inst.parts = std::move(parts);
    if (!inst.square_free) {
        inst.warnings.insert(inst.warnings.begin(), "rungs of length 1 give a triangular prism, which has a square");
    }
    return inst;
}

Instance gen_hyperprism(const HyperprismSpec& spec) {
    std::vector<int> all;
    for (const auto& strip : spec.strips) {
        if (strip.empty()) throw SpecError("every strip needs at least one rung");
        all.insert(all.end(), strip.begin(), strip.end());
    }
    check_parity(all);

    std::array<std::vector<Vertex>, 3> as;
    std::array<std::vector<Vertex>, 3> bs;
    int next = 0;
    for (int i = 0; i < 3; ++i) {
        for (std::size_t r = 0; r < spec.strips[i].size(); ++r) as[i].push_back(next++);
    }
    for (int i = 0; i < 3; ++i) {
        for (std::size_t r = 0; r < spec.strips[i].size(); ++r) bs[i].push_back(next++);
    }
    EdgeList edges;
    std::array<VertexSet, 3> cs;
    for (int i = 0; i < 3; ++i) {
        for (std::size_t r = 0; r < spec.strips[i].size(); ++r) {
            cs[i] = set_union(cs[i], add_rung(edges, next, as[i][r], bs[i][r], spec.strips[i][r]));
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (Vertex a : as[i]) {
                for (Vertex b : as[j]) edges.emplace_back(a, b);
            }
            for (Vertex a : bs[i]) {
                for (Vertex b : bs[j]) edges.emplace_back(a, b);
            }
        }
    }

    Instance inst;
    inst.construction = "hyperprism";
    inst.params = {{"strips", spec.strips}};
    inst.graph = Graph(next, edges);
    for (int i = 0; i < 3; ++i) {
        const std::string s = std::to_string(i + 1);
        inst.parts["A" + s] = VertexSet(as[i]);
        inst.parts["B" + s] = VertexSet(bs[i]);
        inst.parts["C" + s] = cs[i];
    }
    validate(inst);
    return inst;
}

Graph line_graph(const Graph& h) {
    const auto es = h.edges();
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(h.size()));
    for (std::size_t i = 0; i < es.size(); ++i) {
        incident[es[i].first].push_back(static_cast<int>(i));
        incident[es[i].second].push_back(static_cast<int>(i));
    }
    EdgeList out;
    for (const auto& inc : incident) {
        for (std::size_t a = 0; a < inc.size(); ++a) {
            for (std::size_t b = a + 1; b < inc.size(); ++b) out.emplace_back(inc[a], inc[b]);
        }
    }
    return Graph(static_cast<int>(es.size()), out);
}

namespace {

bool is_bipartite(const Graph& h) {
    std::vector<int> side(static_cast<std::size_t>(h.size()), -1);
    for (Vertex s = 0; s < h.size(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : h.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

Instance gen_lk4_subdivision(const std::array<int, 6>& branch_lengths) {
    static constexpr std::array<std::pair<Vertex, Vertex>, 6> kK4{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    EdgeList edges;
    int next = 4;
    for (std::size_t e = 0; e < kK4.size(); ++e) {
        if (branch_lengths[e] < 1) throw SpecError("branch lengths must be positive");
        add_rung(edges, next, kK4[e].first, kK4[e].second, branch_lengths[e]);
    }
    Graph h(next, edges);
    if (!is_bipartite(h)) throw SpecError("the subdivision of K4 is not bipartite");

    Instance inst;
    inst.construction = "lk4";
    inst.params = {{"branch_lengths", branch_lengths}};
    inst.graph = line_graph(h);
    validate(inst);
    return inst;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Splits `total` into `parts` non-negative integers.
std::vector<int> random_split(Rng& rng, int total, int parts) {
    std::vector<int> out(static_cast<std::size_t>(parts), 0);
    for (int i = 0; i < total; ++i) ++out[static_cast<std::size_t>(uniform(rng, 0, parts - 1))];
    return out;
}

// Adds edge u-v to a bipartite edge set unless it closes a 4-cycle.
struct C4FreeBipartite {
    explicit C4FreeBipartite(int n) : adj(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {}

    bool try_add(Vertex u, Vertex v) {
        if (adj[u][v]) return false;
        // u-v closes a square iff some neighbor of u is adjacent to some neighbor of v.
        for (auto a = adj[u].find_first(); a != Bitset::npos; a = adj[u].find_next(a)) {
            if (adj[a].intersects(adj[v])) return false;
        }
        adj[u].set(v);
        adj[v].set(u);
        edges.emplace_back(u, v);
        return true;
    }

    std::vector<Bitset> adj;
    EdgeList edges;
};

std::optional<EdgeList> random_c4_free_bipartite(Rng& rng, int vertices, int target_edges) {
    const int left = std::max(1, vertices / 2 + uniform(rng, -vertices / 6, vertices / 6));
    if (left >= vertices) return std::nullopt;
    C4FreeBipartite b(vertices);
    for (int tries = 0; tries < 40 * target_edges && static_cast<int>(b.edges.size()) < target_edges; ++tries) {
        b.try_add(uniform(rng, 0, left - 1), uniform(rng, left, vertices - 1));
    }
    if (static_cast<int>(b.edges.size()) < target_edges) return std::nullopt;
    return b.edges;
}

Graph relabel(const Graph& g, Rng& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeList es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return Graph(g.size(), es);
}

std::optional<Graph> draw(Rng& rng, int n, const std::string& family);

std::optional<Graph> draw_bipartite(Rng& rng, int n) {
    if (n < 2) return Graph(n, EdgeList{});
    auto es = random_c4_free_bipartite(rng, n, uniform(rng, n - 1, n + n / 2));
    if (!es) es = random_c4_free_bipartite(rng, n, n / 2);
    if (!es) return std::nullopt;
    return Graph(n, *es);
}

std::optional<Graph> draw_line_graph(Rng& rng, int n) {
    if (n < 3) return std::nullopt;
    const int vertices = std::max(4, n * 3 / 4 + uniform(rng, 1, 3));
    auto es = random_c4_free_bipartite(rng, vertices, n);
    if (!es) return std::nullopt;
    return line_graph(Graph(vertices, *es));
}

std::optional<std::array<std::vector<int>, 3>> hyper_lengths(Rng& rng, int n, int extra_rungs) {
    const int rungs = 3 + extra_rungs;
    for (int parity : {uniform(rng, 0, 1), 0, 1}) {
        const int shortest = parity == 0 ? 2 : 3;  // edges
        // Each rung of length len contributes len + 1 vertices.
        const int base = rungs * (shortest + 1);
        if (n < base || (n - base) % 2 != 0) continue;
        auto add = random_split(rng, (n - base) / 2, rungs);
        std::array<std::vector<int>, 3> strips;
        for (int r = 0; r < rungs; ++r) strips[r < 1 + extra_rungs ? 0 : r - extra_rungs].push_back(shortest + 2 * add[r]);
        return strips;
    }
    return std::nullopt;
}

std::optional<Graph> draw_hyperprism(Rng& rng, int n, int extra_rungs) {
    auto strips = hyper_lengths(rng, n, extra_rungs);
    if (!strips) return std::nullopt;
    HyperprismSpec spec;
    spec.strips = *strips;
    return gen_hyperprism(spec).graph;
}

std::optional<Graph> draw_block_graph(Rng& rng, int n) {
    if (n < 1) return std::nullopt;
    EdgeList es;
    int placed = 1;
    while (placed < n) {
        const int size = std::min(uniform(rng, 2, 5), n - placed + 1);
        const Vertex anchor = uniform(rng, 0, placed - 1);
        std::vector<Vertex> block{anchor};
        for (int i = 1; i < size; ++i) block.push_back(placed++);
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) es.emplace_back(block[i], block[j]);
        }
    }
    return Graph(n, es);
}

// Identifies a clique (one vertex or one edge) of two smaller draws.
std::optional<Graph> draw_glued(Rng& rng, int n) {
    if (n < 8) return std::nullopt;
    const int shared = uniform(rng, 1, 2);
    const int n1 = uniform(rng, 4, n - 4 + shared);
    const int n2 = n - n1 + shared;
    static const std::vector<std::string> parts{"bipartite", "line", "prism", "hyperprism", "blocks"};
    auto g1 = draw(rng, n1, parts[static_cast<std::size_t>(uniform(rng, 0, 4))]);
    auto g2 = draw(rng, n2, parts[static_cast<std::size_t>(uniform(rng, 0, 4))]);
    if (!g1 || !g2) return std::nullopt;
    std::vector<Vertex> c1;
    std::vector<Vertex> c2;
    if (shared == 1) {
        c1 = {uniform(rng, 0, n1 - 1)};
        c2 = {uniform(rng, 0, n2 - 1)};
    } else {
        auto e1 = g1->edges();
        auto e2 = g2->edges();
        if (e1.empty() || e2.empty()) return std::nullopt;
        auto a = e1[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(e1.size()) - 1))];
        auto b = e2[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(e2.size()) - 1))];
        c1 = {a.first, a.second};
        c2 = {b.first, b.second};
    }
    std::vector<Vertex> map2(static_cast<std::size_t>(n2), -1);
    for (std::size_t i = 0; i < c2.size(); ++i) map2[c2[i]] = c1[i];
    int next = n1;
    for (Vertex v = 0; v < n2; ++v) {
        if (map2[v] < 0) map2[v] = next++;
    }
    EdgeList es = g1->edges();
    for (auto [u, v] : g2->edges()) es.emplace_back(map2[u], map2[v]);
    return Graph(n, es);
}

std::optional<Graph> draw(Rng& rng, int n, const std::string& family) {
    if (family == "bipartite") return draw_bipartite(rng, n);
    if (family == "line") return draw_line_graph(rng, n);
    if (family == "prism") return draw_hyperprism(rng, n, 0);
    if (family == "hyperprism") return draw_hyperprism(rng, n, uniform(rng, 1, 2));
    if (family == "blocks") return draw_block_graph(rng, n);
    if (family == "glued") return draw_glued(rng, n);
    return std::nullopt;
}

}  // namespace

Instance gen_square_free_berge(int n, std::uint64_t seed) {
    if (n < 1) throw SpecError("n must be positive");
    static const std::vector<std::string> families{"bipartite", "line", "prism", "hyperprism", "blocks", "glued"};
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
    for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
        const std::string& family = families[static_cast<std::size_t>(uniform(rng, 0, 5))];
        auto g = draw(rng, n, family);
        if (!g || g->size() != n) continue;
        Instance inst;
        inst.construction = "random";
        inst.params = {{"n", n}, {"seed", seed}, {"family", family}, {"attempt", attempt}};
        inst.graph = relabel(*g, rng);
        validate(inst);
        if (inst.square_free && inst.berge.value_or(true)) {
            inst.warnings.clear();
            return inst;
        }
    }
    throw GenerationExhausted("no valid instance for n=" + std::to_string(n) + " after " +
                              std::to_string(kGenerationRetries) + " attempts");
}

}  // namespace prismcolor
