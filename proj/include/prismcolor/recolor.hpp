#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prismcolor/graph.hpp"
#include "prismcolor/partition.hpp"

namespace prismcolor {

using Color = int;

/// Vertex -> color map over part of a graph. Colors are 1..k; 0 marks a
/// vertex outside the domain.
class PartialColoring {
public:
    PartialColoring() = default;
    explicit PartialColoring(int n) : colors_(static_cast<std::size_t>(n), 0) {}
    explicit PartialColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    int size() const { return static_cast<int>(colors_.size()); }
    bool has(Vertex v) const { return colors_[v] != 0; }
    Color at(Vertex v) const { return colors_[v]; }
    void set(Vertex v, Color c) { colors_[v] = c; }

    VertexSet domain() const;
    Color max_color() const;
    /// Number of distinct colors in use.
    int colors_used() const;
    const std::vector<Color>& raw() const { return colors_; }

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    std::vector<Color> colors_;
};

/// First edge of g with both ends colored alike, if any.
std::optional<std::pair<Vertex, Vertex>> find_conflict(const Graph& g, const PartialColoring& c);

using ColorPair = std::pair<Color, Color>;  // first < second

struct SwapCandidate {
    enum class Kind { free_vertex, general };
    int side = 1;  // 1: coloring of G - R, 2: coloring of G - L
    Vertex seed = -1;
    ColorPair pair{0, 0};
    Kind kind = Kind::free_vertex;

    friend bool operator==(const SwapCandidate&, const SwapCandidate&) = default;
};

class BergeViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Permutes c2's colors so it agrees with c1 on the clique `anchor`.
/// Forced classes come from the anchor; every other color keeps its
/// value when free and otherwise takes the smallest unused value.
PartialColoring align_colorings(const PartialColoring& c1, const PartialColoring& c2, const VertexSet& anchor);

/// Component of u in the subgraph induced by vertices colored pair.first
/// or pair.second.
VertexSet bichromatic_component(const Graph& g, const PartialColoring& c, Vertex u, ColorPair pair);

/// Exchanges the two colors on `component`.
void swap_colors(PartialColoring& c, const VertexSet& component, ColorPair pair);

/// K3 vertices colored differently by the two children.
VertexSet bad_vertices(const GoodPartition& p, const PartialColoring& c1, const PartialColoring& c2);

/// First swap, in deterministic order, that keeps every K1 ∪ K2 color and
/// strictly lowers the number of bad vertices. Free-vertex swaps (seed a
/// bad vertex, its own color pair, side 1 then 2) are tried first; then
/// any K3-seeded swap by (side, seed, pair).
std::optional<SwapCandidate> find_reducing_swap(const Graph& g, const GoodPartition& p, const PartialColoring& c1,
                                                const PartialColoring& c2, const VertexSet& bad, int k);

struct SwapEvent {
    SwapCandidate swap;
    std::size_t bad_before = 0;
    std::size_t bad_after = 0;
    /// Both working colorings right after the swap (aligned palettes).
    const PartialColoring* side1 = nullptr;
    const PartialColoring* side2 = nullptr;
};

struct MergeStats {
    std::size_t free_swaps = 0;
    std::size_t general_swaps = 0;
};

struct MergeOptions {
    std::function<void(const SwapEvent&)> on_swap;
};

/// Combines an ω-coloring of G - R (c1) and of G - L (c2) into a proper
/// coloring of g with colors 1..k. Throws BergeViolation if bad vertices
/// remain and no reducing swap exists.
PartialColoring merge_colorings(const Graph& g, const GoodPartition& p, const PartialColoring& c1,
                                const PartialColoring& c2, int k, const MergeOptions& opts = {},
                                MergeStats* stats = nullptr);

}  // namespace prismcolor
