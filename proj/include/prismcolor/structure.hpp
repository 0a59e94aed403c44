#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prismcolor/graph.hpp"

namespace prismcolor {

using Square = std::array<Vertex, 4>;
using Triad = std::array<Vertex, 3>;

/// Lexicographically first (a,b,c,d) inducing the chordless cycle a-b-c-d-a.
std::optional<Square> contains_square(const Graph& g);

/// All triads (pairwise non-adjacent triples), each sorted, in lexicographic order.
std::vector<Triad> find_triads(const Graph& g);

/// First triad containing both u and v, as (u, v, z) with the smallest z.
std::optional<Triad> triad_containing(const Graph& g, Vertex u, Vertex v);

struct BergeOptions {
    int size_cap = 64;
    bool force = false;
};

class SizeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BergeVerdict {
    bool berge = true;
    /// Cycle order of the odd hole (or odd antihole) found.
    std::vector<Vertex> witness;
    /// The witness is a hole of the complement, i.e. an antihole of g.
    bool antihole = false;
};

/// Exhaustive search for an odd hole in g and in its complement.
/// Refuses graphs above `size_cap` unless `force` is set.
BergeVerdict is_berge(const Graph& g, const BergeOptions& opts = {});

/// A chordless odd cycle of length >= 5, in cycle order, if one exists.
std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g);

/// Connected components of g[s], each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);

/// Component of g[allowed] containing `start` (empty if start not allowed).
Bitset component_of(const Graph& g, const Bitset& allowed, Vertex start);

class HypothesisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// For a clique k and pairwise-complete disjoint sets xs (with each vertex
/// of k complete to all but one xs[i]), returns the smallest 0-based index
/// i for which (k ∪ xs) minus xs[i] is a clique. In a square-free graph
/// such an index always exists; otherwise HypothesisViolation is thrown.
std::size_t lemma_c4_clique_index(const Graph& g, const VertexSet& k, const std::vector<VertexSet>& xs);

}  // namespace prismcolor
