#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prismcolor/graph.hpp"
#include "prismcolor/partition.hpp"
#include "prismcolor/recolor.hpp"
#include "prismcolor/structure.hpp"

namespace prismcolor {

class NotSquareFree : public std::runtime_error {
public:
    explicit NotSquareFree(Square s);
    const Square& witness() const { return witness_; }

private:
    Square witness_;
};

class NotBerge : public std::runtime_error {
public:
    explicit NotBerge(BergeVerdict v);
    const BergeVerdict& verdict() const { return verdict_; }

private:
    BergeVerdict verdict_;
};

class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One node of the decomposition; vertex ids are in root coordinates.
struct DecompositionNode {
    VertexSet vertices;
    std::optional<GoodPartition> partition;
    std::optional<Triad> triad;
    std::unique_ptr<DecompositionNode> without_r;  // child on vertices \ R
    std::unique_ptr<DecompositionNode> without_l;  // child on vertices \ L

    bool leaf() const { return !partition.has_value(); }
};

struct DecompositionTree {
    std::unique_ptr<DecompositionNode> root;

    std::size_t node_count() const;
    std::size_t internal_count() const;
    std::size_t leaf_count() const;
    std::size_t depth() const;
};

struct SolverStats {
    std::size_t frames_refined = 0;
    std::size_t swaps = 0;
    std::size_t free_swaps = 0;
    std::size_t general_swaps = 0;
    std::size_t leaves = 0;
    std::size_t internal_nodes = 0;
};

struct ColorResult {
    PartialColoring coloring;
    int colors_used = 0;
    int omega = 0;
    DecompositionTree tree;
    SolverStats stats;
    std::vector<std::string> warnings;
};

struct SolverOptions {
    /// Largest n for the exhaustive Berge check; larger inputs are trusted
    /// with a warning.
    int berge_cap = 64;
    bool trust_berge = false;
    /// Leaves larger than this are refused by the backtracking colorer.
    int leaf_cap = 400;
    /// >1 colors the two children of a node concurrently and sweeps frames
    /// with several workers. Output is identical to the sequential run.
    int jobs = 1;
    /// Receives decomposition and swap events as JSON objects.
    std::function<void(const nlohmann::json&)> trace;
};

/// Colors a square-free Berge graph with exactly ω(g) colors.
///
/// Recursion: a good partition (K1, K2, K3, L, R) splits g into g - R and
/// g - L, whose colorings are merged by bichromatic swaps; graphs without
/// one are colored exactly by leaf_color. Throws NotSquareFree, NotBerge,
/// or BergeViolation.
ColorResult color(const Graph& g, const SolverOptions& opts = {});

/// Exact coloring with at most `target` colors by DSATUR-ordered
/// backtracking. Throws Infeasible when none exists.
PartialColoring leaf_color(const Graph& g, int target, int size_cap = 400);

struct ColoringVerdict {
    bool ok = true;
    std::string message;
    std::optional<std::pair<Vertex, Vertex>> conflict;
    explicit operator bool() const { return ok; }
};

/// Total, proper, and no color above ω(g).
ColoringVerdict verify_coloring(const Graph& g, const PartialColoring& c);

nlohmann::json tree_to_json(const DecompositionTree& t);
std::string tree_to_dot(const DecompositionTree& t);

}  // namespace prismcolor
