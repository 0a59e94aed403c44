#include "prismcolor/graph.hpp"

#include <iterator>

namespace prismcolor {

void VertexSet::normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::from_bits(const Bitset& bits) {
    VertexSet s;
    s.items_.reserve(bits.count());
    for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
        s.items_.push_back(static_cast<Vertex>(i));
    }
    return s;
}

void VertexSet::insert(Vertex v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) items_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it != items_.end() && *it == v) items_.erase(it);
}

Bitset VertexSet::to_bits(std::size_t n) const {
    Bitset b(n);
    for (Vertex v : items_) b.set(static_cast<std::size_t>(v));
    return b;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        }
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        rows_[u].set(v);
        rows_[v].set(u);
    }
    lists_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& row = rows_[v];
        for (auto w = row.find_first(); w != Bitset::npos; w = row.find_next(w)) {
            lists_[v].push_back(static_cast<Vertex>(w));
        }
        m_ += lists_[v].size();
    }
    m_ /= 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (Vertex v : lists_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Bitset Graph::all_bits() const {
    Bitset b(static_cast<std::size_t>(n_));
    b.set();
    return b;
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<int> local(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (Vertex w : lists_[keep[i]]) {
            if (local[w] > static_cast<int>(i)) es.emplace_back(static_cast<Vertex>(i), local[w]);
        }
    }
    return Graph(static_cast<int>(keep.size()), es);
}

Graph Graph::without(const VertexSet& drop) const {
    std::vector<Vertex> keep;
    for (int v = 0; v < n_; ++v) {
        if (!drop.contains(v)) keep.push_back(v);
    }
    return induced(VertexSet(std::move(keep)));
}

Graph Graph::complement() const {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!rows_[u][v]) es.emplace_back(u, v);
        }
    }
    return Graph(n_, es);
}

bool Graph::is_clique(const VertexSet& s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!rows_[s[i]][s[j]]) return false;
        }
    }
    return true;
}

bool Graph::complete_to(const VertexSet& a, const VertexSet& b) const {
    for (Vertex u : a) {
        for (Vertex v : b) {
            if (u != v && !rows_[u][v]) return false;
        }
    }
    return true;
}

bool Graph::anticomplete_to(const VertexSet& a, const VertexSet& b) const {
    for (Vertex u : a) {
        for (Vertex v : b) {
            if (rows_[u][v]) return false;
        }
    }
    return true;
}

}  // namespace prismcolor
