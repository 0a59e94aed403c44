#include "prismcolor/recolor.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace prismcolor {

VertexSet PartialColoring::domain() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] != 0) out.push_back(static_cast<Vertex>(v));
    }
    return VertexSet(std::move(out));
}

Color PartialColoring::max_color() const {
    Color m = 0;
    for (Color c : colors_) m = std::max(m, c);
    return m;
}

int PartialColoring::colors_used() const {
    std::vector<Color> cs;
    for (Color c : colors_) {
        if (c != 0) cs.push_back(c);
    }
    std::sort(cs.begin(), cs.end());
    return static_cast<int>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

std::optional<std::pair<Vertex, Vertex>> find_conflict(const Graph& g, const PartialColoring& c) {
    for (auto [u, v] : g.edges()) {
        if (c.has(u) && c.at(u) == c.at(v)) return std::make_pair(u, v);
    }
    return std::nullopt;
}

PartialColoring align_colorings(const PartialColoring& c1, const PartialColoring& c2, const VertexSet& anchor) {
    const Color top = std::max(c1.max_color(), c2.max_color());
    std::vector<Color> sigma(static_cast<std::size_t>(top) + 1, 0);
    std::vector<char> taken(static_cast<std::size_t>(top) + 1, 0);
    for (Vertex a : anchor) {
        const Color from = c2.at(a);
        const Color to = c1.at(a);
        if (from == 0 || to == 0) throw std::invalid_argument("anchor vertex " + std::to_string(a) + " uncolored");
        if ((sigma[from] != 0 && sigma[from] != to) || (sigma[from] == 0 && taken[to])) {
            throw std::invalid_argument("anchor is not properly colored by both colorings");
        }
        sigma[from] = to;
        taken[to] = 1;
    }
    for (Color s = 1; s <= top; ++s) {
        if (sigma[s] == 0 && !taken[s]) {
            sigma[s] = s;
            taken[s] = 1;
        }
    }
    Color nextFree = 1;
    for (Color s = 1; s <= top; ++s) {
        if (sigma[s] != 0) continue;
        while (taken[nextFree]) ++nextFree;
        sigma[s] = nextFree;
        taken[nextFree] = 1;
    }
    PartialColoring out(c2.size());
    for (Vertex v = 0; v < c2.size(); ++v) {
        if (c2.has(v)) out.set(v, sigma[c2.at(v)]);
    }
    return out;
}

VertexSet bichromatic_component(const Graph& g, const PartialColoring& c, Vertex u, ColorPair pair) {
    auto inPair = [&](Vertex v) { return c.has(v) && (c.at(v) == pair.first || c.at(v) == pair.second); };
    if (!inPair(u)) return {};
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<Vertex> comp{u};
    std::deque<Vertex> queue{u};
    seen[u] = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (seen[w] || !inPair(w)) continue;
            seen[w] = 1;
            comp.push_back(w);
            queue.push_back(w);
        }
    }
    return VertexSet(std::move(comp));
}

void swap_colors(PartialColoring& c, const VertexSet& component, ColorPair pair) {
    for (Vertex v : component) {
        if (c.at(v) == pair.first) {
            c.set(v, pair.second);
        } else if (c.at(v) == pair.second) {
            c.set(v, pair.first);
        }
    }
}

VertexSet bad_vertices(const GoodPartition& p, const PartialColoring& c1, const PartialColoring& c2) {
    std::vector<Vertex> out;
    for (Vertex u : p.k3) {
        if (c1.at(u) != c2.at(u)) out.push_back(u);
    }
    return VertexSet(std::move(out));
}

namespace {

ColorPair make_pair_sorted(Color a, Color b) { return a < b ? ColorPair{a, b} : ColorPair{b, a}; }

bool avoids(const VertexSet& comp, const VertexSet& s) {
    return std::none_of(comp.begin(), comp.end(), [&](Vertex v) { return s.contains(v); });
}

// Bad count after swapping `pair` on the component of `seed` in side `side`,
// or nullopt when the component touches K1 ∪ K2.
std::optional<std::size_t> simulate(const Graph& g, const GoodPartition& p, const VertexSet& k12,
                                    const PartialColoring& c1, const PartialColoring& c2, int side, Vertex seed,
                                    ColorPair pair) {
    const PartialColoring& own = side == 1 ? c1 : c2;
    const VertexSet comp = bichromatic_component(g, own, seed, pair);
    if (comp.empty() || !avoids(comp, k12)) return std::nullopt;
    PartialColoring moved = own;
    swap_colors(moved, comp, pair);
    return side == 1 ? bad_vertices(p, moved, c2).size() : bad_vertices(p, c1, moved).size();
}

}  // namespace

std::optional<SwapCandidate> find_reducing_swap(const Graph& g, const GoodPartition& p, const PartialColoring& c1,
                                                const PartialColoring& c2, const VertexSet& bad, int k) {
    const VertexSet k12 = set_union(p.k1, p.k2);
    const std::size_t current = bad.size();

    for (Vertex u : bad) {
        const ColorPair pair = make_pair_sorted(c1.at(u), c2.at(u));
        for (int side : {1, 2}) {
            auto after = simulate(g, p, k12, c1, c2, side, u, pair);
            if (after && *after < current) return SwapCandidate{side, u, pair, SwapCandidate::Kind::free_vertex};
        }
    }
    for (int side : {1, 2}) {
        const PartialColoring& own = side == 1 ? c1 : c2;
        for (Vertex s : p.k3) {
            const Color mine = own.at(s);
            for (Color other = 1; other <= k; ++other) {
                if (other == mine) continue;
                const ColorPair pair = make_pair_sorted(mine, other);
                auto after = simulate(g, p, k12, c1, c2, side, s, pair);
                if (after && *after < current) return SwapCandidate{side, s, pair, SwapCandidate::Kind::general};
            }
        }
    }
    return std::nullopt;
}

namespace {

// Relabels used colors onto 1..used, preserving their order.
PartialColoring compact(const PartialColoring& c) {
    std::vector<Color> used;
    for (Color x : c.raw()) {
        if (x != 0) used.push_back(x);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    PartialColoring out(c.size());
    for (Vertex v = 0; v < c.size(); ++v) {
        if (c.has(v)) {
            out.set(v, static_cast<Color>(std::lower_bound(used.begin(), used.end(), c.at(v)) - used.begin()) + 1);
        }
    }
    return out;
}

void require_proper_on(const Graph& g, const PartialColoring& c, const VertexSet& around) {
    for (Vertex v : around) {
        for (Vertex w : g.neighbors(v)) {
            if (c.has(w) && c.at(w) == c.at(v)) {
                throw std::logic_error("swap produced a conflict on edge " + std::to_string(v) + "-" +
                                       std::to_string(w));
            }
        }
    }
}

}  // namespace

PartialColoring merge_colorings(const Graph& g, const GoodPartition& p, const PartialColoring& c1,
                                const PartialColoring& c2, int k, const MergeOptions& opts, MergeStats* stats) {
    const VertexSet k12 = set_union(p.k1, p.k2);
    if (c1.colors_used() > k || c2.colors_used() > k) {
        throw std::invalid_argument("child coloring uses more than " + std::to_string(k) + " colors");
    }
    PartialColoring left = compact(c1);
    PartialColoring right = align_colorings(left, compact(c2), k12);

    VertexSet bad = bad_vertices(p, left, right);
    const std::size_t swapLimit = p.k3.size() * static_cast<std::size_t>(std::max(k, 1));
    std::size_t swaps = 0;
    while (!bad.empty()) {
        auto swap = find_reducing_swap(g, p, left, right, bad, k);
        if (!swap) {
            throw BergeViolation("no reducing bichromatic swap for " + std::to_string(bad.size()) +
                                 " bad vertices; input is not a square-free Berge graph with a good partition");
        }
        PartialColoring& own = swap->side == 1 ? left : right;
        const VertexSet comp = bichromatic_component(g, own, swap->seed, swap->pair);
        swap_colors(own, comp, swap->pair);
        require_proper_on(g, own, comp);
        for (Vertex v : k12) {
            if (left.at(v) != right.at(v)) throw std::logic_error("swap changed a K1 ∪ K2 color");
        }
        VertexSet after = bad_vertices(p, left, right);
        if (after.size() >= bad.size()) throw std::logic_error("swap did not reduce the bad set");
        if (++swaps > swapLimit) throw std::logic_error("swap budget |K3|·k exceeded");
        if (stats) {
            (swap->kind == SwapCandidate::Kind::free_vertex ? stats->free_swaps : stats->general_swaps)++;
        }
        if (opts.on_swap) opts.on_swap(SwapEvent{*swap, bad.size(), after.size(), &left, &right});
        bad = std::move(after);
    }

    PartialColoring out(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        if (left.has(v)) {
            out.set(v, left.at(v));
        } else if (right.has(v)) {
            out.set(v, right.at(v));
        } else {
            throw std::invalid_argument("vertex " + std::to_string(v) + " colored by neither child");
        }
    }
    if (auto e = find_conflict(g, out)) {
        throw BergeViolation("merged coloring conflicts on edge " + std::to_string(e->first) + "-" +
                             std::to_string(e->second));
    }
    return out;
}

}  // namespace prismcolor
