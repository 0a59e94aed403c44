#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prismcolor/graph.hpp"

namespace prismcolor {

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GenerationExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generated graph plus what is needed to reproduce and audit it.
struct Instance {
    std::string construction;
    nlohmann::json params;
    Graph graph;
    /// Named vertex groups of the construction (e.g. "A1", "C2").
    std::map<std::string, VertexSet> parts;
    bool square_free = false;
    /// Unset when the graph is above the Berge-check cap.
    std::optional<bool> berge;
    std::vector<std::string> warnings;

    /// Construction name, parameters and validation results.
    nlohmann::json sidecar() const;
};

/// Instances up to this size are Berge-checked by the generators.
inline constexpr int kGeneratorBergeCap = 64;

/// Three rung lengths (edges per rung), all of one parity.
struct PrismSpec {
    std::array<int, 3> lengths{};
};

/// Rung lengths per strip; every length shares one parity.
struct HyperprismSpec {
    std::array<std::vector<int>, 3> strips;
};

/// Triangles a1a2a3 (ids 0..2) and b1b2b3 (ids 3..5); rung i runs from a_i
/// to b_i and its interior vertices follow in rung order, rung 1 first.
Instance gen_prism(const PrismSpec& spec);

/// Parallel rungs per strip. Ids: all A vertices (strip-major, rung
/// order), then all B vertices, then rung interiors. A single rung per
/// strip gives exactly gen_prism's labeling.
Instance gen_hyperprism(const HyperprismSpec& spec);

/// L(H) for the subdivision H of K4 whose branch (0,1),(0,2),(0,3),(1,2),
/// (1,3),(2,3) has the given number of edges. SpecError unless H is bipartite.
Instance gen_lk4_subdivision(const std::array<int, 6>& branch_lengths);

/// One vertex per edge of h (in h.edges() order); adjacency = shared end.
Graph line_graph(const Graph& h);

/// Random square-free Berge graph on exactly n vertices, deterministic in
/// (n, seed). Draws from bipartite graphs without 4-cycles, their line
/// graphs, prisms, hyperprisms, and clique-glued combinations of these;
/// each draw is re-validated and rejected until valid.
Instance gen_square_free_berge(int n, std::uint64_t seed);

inline constexpr int kGenerationRetries = 200;

}  // namespace prismcolor
