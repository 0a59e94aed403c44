#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prismcolor/cliques.hpp"
#include "prismcolor/graph.hpp"
#include "prismcolor/structure.hpp"

namespace prismcolor {

/// Five-way vertex partition (K1, K2, K3, L, R). The cutset K1 ∪ K2 ∪ K3
/// separates L from R; K1 ∪ K2 and K2 ∪ K3 are cliques.
struct GoodPartition {
    VertexSet k1, k2, k3, l, r;

    VertexSet cutset() const { return set_union(set_union(k1, k2), k3); }
    friend bool operator==(const GoodPartition&, const GoodPartition&) = default;
};

/// Seed of the refinement search: two maximal cliques of G - {x, y}, a pair
/// x, y lying in a common triad, and optional pivot vertices c1 ∈ Q1 \ Q3,
/// c3 ∈ Q3 \ Q1.
struct Frame {
    Clique q1, q3;
    Vertex x = -1;
    Vertex y = -1;
    std::optional<Vertex> c1, c3;

    friend bool operator==(const Frame&, const Frame&) = default;
};

class MalformedPartition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Condition { none, i, ii, iii, iv, v };

const char* to_string(Condition c);

struct PartitionVerdict {
    Condition violated = Condition::none;
    std::string message;
    /// Condition (iii): the chordless path u, interior..., v. Other
    /// conditions: the offending vertices.
    std::vector<Vertex> witness;

    bool ok() const { return violated == Condition::none; }
    explicit operator bool() const { return ok(); }
};

/// Checks the five good-partition conditions in order and reports the
/// first one that fails. Condition (iii) is decided by a BFS certificate:
/// a shortest path through the non-K1-complete part of L from a neighbor
/// of K3 to a neighbor of K1 is exactly a chordless violating path.
/// Throws MalformedPartition when the sets do not partition V(g).
PartitionVerdict verify_good_partition(const Graph& g, const GoodPartition& p);

/// Vertices of `side` ordered by non-increasing neighborhood in `other`,
/// ties broken by ascending id. Throws HypothesisViolation when two
/// neighborhoods are incomparable (only possible when g has a square).
std::vector<Vertex> neighborhood_order(const Graph& g, const VertexSet& side, const VertexSet& other);

/// Checks the frame definition directly.
bool is_frame(const Graph& g, const Frame& f);

/// Visits every frame in canonical order: (x, y) ascending over ordered
/// pairs in a common triad, then (Q1, Q3) over ordered pairs of maximal
/// cliques of G - {x, y} in their sorted order, then C1 and C3 with the
/// empty choice first followed by singletons in ascending id. Returning
/// false from `visit` stops the enumeration.
void for_each_frame(const Graph& g, const std::function<bool(const Frame&)>& visit);
std::vector<Frame> enumerate_frames(const Graph& g);

struct Connectivity {
    VertexSet l;   // component of G - cutset containing x
    VertexSet r;   // everything else outside the cutset
    VertexSet ry;  // component of G[r] containing y
};

/// Recomputes (L', R', R'_y) for the current cutset. Returns nullopt (a
/// failure, not an error) when y lands in L'.
std::optional<Connectivity> connectivity_update(const Graph& g, const VertexSet& k1, const VertexSet& k2,
                                                const VertexSet& k3, Vertex x, Vertex y);

struct RefineTrace {
    int step2_repairs = 0;
    int step3_repairs = 0;
    /// |K'1| + |K'3| after Step 1 and after every repair.
    std::vector<std::size_t> working_sizes;
    bool verifier_rejected = false;
};

/// Runs the three refinement steps on one frame. Step 1 truncates Q1 \ Q3
/// and Q3 \ Q1 above the pivots; Step 2 repairs condition (iii) by cutting
/// K'1 with the neighborhood of the last interior vertex of a shortest bad
/// path; Step 3 repairs condition (iv) by removing N(u) from K'3. After any
/// Step 3 change Step 2 runs again. Every change is followed by a
/// connectivity update; a failure there ends the frame.
///
/// A returned partition has passed verify_good_partition.
std::optional<GoodPartition> refine_frame(const Graph& g, const Frame& f, RefineTrace* trace = nullptr);

struct SearchOptions {
    /// Workers for the frame sweep; results are identical for any value.
    int jobs = 1;
};

struct PartitionSearch {
    std::optional<GoodPartition> partition;
    std::optional<Frame> frame;
    /// Triad witnessing condition (v): x ∈ L, y ∈ R, and a third vertex.
    std::optional<Triad> triad;
    std::size_t frames_refined = 0;
    std::size_t clique_pairs_pruned = 0;
};

/// Sweeps frames in canonical order and returns the first one whose
/// refinement yields a good partition. Clique pairs (Q1, Q3) whose union
/// does not separate x from y are skipped without refinement: every frame
/// built on them fails its first connectivity update.
PartitionSearch search_good_partition(const Graph& g, const SearchOptions& opts = {});

std::optional<GoodPartition> find_good_partition(const Graph& g);

}  // namespace prismcolor
