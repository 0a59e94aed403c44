#include "prismcolor/cliques.hpp"

#include <algorithm>

namespace prismcolor {

namespace {

void extend(const Graph& g, std::vector<Vertex>& current, Bitset candidates, Bitset excluded,
            std::vector<Clique>& out) {
    if (candidates.none()) {
        if (excluded.none()) out.emplace_back(current);
        return;
    }
    // Pivot on the vertex of P ∪ X covering most of P.
    std::size_t pivot = Bitset::npos;
    std::size_t best = 0;
    Bitset pool = candidates | excluded;
    for (auto u = pool.find_first(); u != Bitset::npos; u = pool.find_next(u)) {
        std::size_t cover = (candidates & g.neighbors_bits(static_cast<Vertex>(u))).count();
        if (pivot == Bitset::npos || cover > best) {
            pivot = u;
            best = cover;
        }
    }
    Bitset branch = candidates - g.neighbors_bits(static_cast<Vertex>(pivot));
    for (auto v = branch.find_first(); v != Bitset::npos; v = branch.find_next(v)) {
        const auto& nv = g.neighbors_bits(static_cast<Vertex>(v));
        current.push_back(static_cast<Vertex>(v));
        extend(g, current, candidates & nv, excluded & nv, out);
        current.pop_back();
        candidates.reset(v);
        excluded.set(v);
    }
}

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g, const Bitset& allowed) {
    std::vector<Clique> out;
    if (allowed.none()) return out;
    std::vector<Vertex> current;
    extend(g, current, allowed, g.empty_bits(), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Clique> maximal_cliques(const Graph& g) { return maximal_cliques(g, g.all_bits()); }

int omega(const Graph& g) {
    int best = 0;
    for (const auto& q : maximal_cliques(g)) best = std::max(best, static_cast<int>(q.size()));
    return best;
}

}  // namespace prismcolor
