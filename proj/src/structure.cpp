#include "prismcolor/structure.hpp"

#include <string>

namespace prismcolor {

std::optional<Square> contains_square(const Graph& g) {
    const int n = g.size();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : g.neighbors(a)) {
            for (Vertex c : g.neighbors(b)) {
                if (c == a || g.adjacent(a, c)) continue;
                for (Vertex d : g.neighbors(a)) {
                    if (d != b && g.adjacent(c, d) && !g.adjacent(b, d)) return Square{a, b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<Triad> find_triads(const Graph& g) {
    std::vector<Triad> out;
    const int n = g.size();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (Vertex c = b + 1; c < n; ++c) {
                if (!g.adjacent(a, c) && !g.adjacent(b, c)) out.push_back({a, b, c});
            }
        }
    }
    return out;
}

std::optional<Triad> triad_containing(const Graph& g, Vertex u, Vertex v) {
    if (u == v || g.adjacent(u, v)) return std::nullopt;
    for (Vertex z = 0; z < g.size(); ++z) {
        if (z != u && z != v && !g.adjacent(u, z) && !g.adjacent(v, z)) return Triad{u, v, z};
    }
    return std::nullopt;
}

namespace {

// Chordless paths s = p0, p1, ..., pk with every pi > s. `blocked` holds
// the path and the closed neighborhoods of p0..p(k-1); any extension must
// avoid it, and an extension adjacent to s closes the cycle.
class OddHoleSearch {
public:
    explicit OddHoleSearch(const Graph& g) : g_(g) {}

    std::optional<std::vector<Vertex>> run() {
        const auto n = static_cast<std::size_t>(g_.size());
        for (Vertex s = 0; s < g_.size(); ++s) {
            s_ = s;
            above_ = Bitset(n);
            for (auto v = static_cast<std::size_t>(s) + 1; v < n; ++v) above_.set(v);
            for (Vertex p1 : g_.neighbors(s)) {
                if (p1 < s) continue;
                path_ = {s, p1};
                Bitset blocked(n);
                blocked.set(static_cast<std::size_t>(s));
                blocked.set(static_cast<std::size_t>(p1));
                if (extend(blocked)) return path_;
            }
        }
        return std::nullopt;
    }

private:
    bool extend(const Bitset& blocked) {
        const Vertex last = path_.back();
        const auto& ns = g_.neighbors_bits(s_);
        Bitset next = (g_.neighbors_bits(last) & above_) - blocked;
        Bitset closing = next & ns;
        if (closing.any() && path_.size() >= 4 && path_.size() % 2 == 0) {
            path_.push_back(static_cast<Vertex>(closing.find_first()));
            return true;
        }
        next -= ns;
        if (next.none()) return false;
        // Interior vertices other than the newest one may not touch the rest of the cycle.
        Bitset nextBlocked = blocked | g_.neighbors_bits(last);
        if (path_.size() >= 2) nextBlocked.set(static_cast<std::size_t>(last));
        for (auto w = next.find_first(); w != Bitset::npos; w = next.find_next(w)) {
            if (!can_return(static_cast<Vertex>(w), nextBlocked)) continue;
            path_.push_back(static_cast<Vertex>(w));
            Bitset b = nextBlocked;
            b.set(w);
            if (extend(b)) return true;
            path_.pop_back();
        }
        return false;
    }

    // Is some neighbor of s reachable from w through unblocked vertices above s?
    bool can_return(Vertex w, const Bitset& blocked) const {
        const auto& ns = g_.neighbors_bits(s_);
        Bitset open = above_ - blocked;
        open.reset(static_cast<std::size_t>(w));
        Bitset frontier(open.size());
        frontier.set(static_cast<std::size_t>(w));
        Bitset seen = frontier;
        while (frontier.any()) {
            Bitset reach(open.size());
            for (auto u = frontier.find_first(); u != Bitset::npos; u = frontier.find_next(u)) {
                reach |= g_.neighbors_bits(static_cast<Vertex>(u));
            }
            reach &= open;
            reach -= seen;
            if (reach.intersects(ns)) return true;
            seen |= reach;
            frontier = reach;
        }
        return false;
    }

    const Graph& g_;
    Vertex s_ = 0;
    Bitset above_;
    std::vector<Vertex> path_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g) { return OddHoleSearch(g).run(); }

BergeVerdict is_berge(const Graph& g, const BergeOptions& opts) {
    if (g.size() > opts.size_cap && !opts.force) {
        throw SizeCapExceeded("Berge check refused: n=" + std::to_string(g.size()) + " exceeds cap " +
                              std::to_string(opts.size_cap));
    }
    if (auto hole = find_odd_hole(g)) return {false, *hole, false};
    if (auto anti = find_odd_hole(g.complement())) return {false, *anti, true};
    return {};
}

Bitset component_of(const Graph& g, const Bitset& allowed, Vertex start) {
    Bitset comp(allowed.size());
    if (!allowed.test(static_cast<std::size_t>(start))) return comp;
    comp.set(static_cast<std::size_t>(start));
    Bitset frontier = comp;
    while (frontier.any()) {
        Bitset reach(allowed.size());
        for (auto u = frontier.find_first(); u != Bitset::npos; u = frontier.find_next(u)) {
            reach |= g.neighbors_bits(static_cast<Vertex>(u));
        }
        reach &= allowed;
        reach -= comp;
        comp |= reach;
        frontier = std::move(reach);
    }
    return comp;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    Bitset left = g.bits(s);
    while (left.any()) {
        auto start = static_cast<Vertex>(left.find_first());
        Bitset comp = component_of(g, left, start);
        left -= comp;
        out.push_back(VertexSet::from_bits(comp));
    }
    return out;
}

std::size_t lemma_c4_clique_index(const Graph& g, const VertexSet& k, const std::vector<VertexSet>& xs) {
    VertexSet all = k;
    for (const auto& x : xs) all = set_union(all, x);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (g.is_clique(set_difference(all, xs[i]))) return i;
    }
    throw HypothesisViolation("no X_i whose removal leaves a clique; input is not square-free or the "
                              "completeness hypotheses fail");
}

}  // namespace prismcolor
