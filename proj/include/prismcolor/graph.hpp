#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace prismcolor {

using Vertex = int;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Raised when graph input is malformed (self-loops, out-of-range ids).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : items_(vs) { normalize(); }
    explicit VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) { normalize(); }

    static VertexSet from_bits(const Bitset& bits);

    bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    Vertex front() const { return items_.front(); }
    Vertex operator[](std::size_t i) const { return items_[i]; }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    const std::vector<Vertex>& items() const { return items_; }
    Bitset to_bits(std::size_t n) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    void normalize();
    std::vector<Vertex> items_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held both as bitset rows (for set algebra in the
/// partition search) and as sorted neighbor lists.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges and either
    /// orientation are accepted; self-loops and out-of-range endpoints
    /// throw GraphError.
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
        : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

    int size() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u][v]; }
    const Bitset& neighbors_bits(Vertex v) const { return rows_[v]; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return lists_[v]; }
    int degree(Vertex v) const { return static_cast<int>(lists_[v].size()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    Bitset empty_bits() const { return Bitset(static_cast<std::size_t>(n_)); }
    Bitset all_bits() const;
    Bitset bits(const VertexSet& s) const { return s.to_bits(static_cast<std::size_t>(n_)); }

    /// Subgraph induced by `keep`; vertex i of the result is keep[i].
    Graph induced(const VertexSet& keep) const;
    Graph without(const VertexSet& drop) const;
    Graph complement() const;

    bool is_clique(const VertexSet& s) const;
    /// Every vertex of `a` is adjacent to every vertex of `b` (sets disjoint).
    bool complete_to(const VertexSet& a, const VertexSet& b) const;
    bool anticomplete_to(const VertexSet& a, const VertexSet& b) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<Bitset> rows_;
    std::vector<std::vector<Vertex>> lists_;
};

}  // namespace prismcolor
