#include "prismcolor/partition.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

namespace prismcolor {

const char* to_string(Condition c) {
    switch (c) {
        case Condition::none: return "none";
        case Condition::i: return "(i)";
        case Condition::ii: return "(ii)";
        case Condition::iii: return "(iii)";
        case Condition::iv: return "(iv)";
        case Condition::v: return "(v)";
    }
    return "?";
}

namespace {

bool has_neighbor_in(const Graph& g, Vertex v, const Bitset& s) { return g.neighbors_bits(v).intersects(s); }

bool complete_to(const Graph& g, Vertex v, const Bitset& s) { return !(s - g.neighbors_bits(v)).any(); }

// Shortest path inside L'' = L minus its K1-complete vertices, from a
// vertex with a neighbor in K3 to a vertex with a neighbor in K1.
std::optional<std::vector<Vertex>> bad_path_interior(const Graph& g, const Bitset& k1, const Bitset& k3,
                                                     const Bitset& l) {
    if (k1.none() || k3.none()) return std::nullopt;
    const auto n = static_cast<std::size_t>(g.size());
    Bitset inner(n);
    for (auto v = l.find_first(); v != Bitset::npos; v = l.find_next(v)) {
        if (!complete_to(g, static_cast<Vertex>(v), k1)) inner.set(v);
    }
    std::vector<int> parent(n, -2);
    std::deque<Vertex> queue;
    for (auto v = inner.find_first(); v != Bitset::npos; v = inner.find_next(v)) {
        if (has_neighbor_in(g, static_cast<Vertex>(v), k3)) {
            parent[v] = -1;
            queue.push_back(static_cast<Vertex>(v));
        }
    }
    auto unwind = [&](Vertex t) {
        std::vector<Vertex> path;
        for (int v = t; v != -1; v = parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    };
    // Sources that already touch K1 give a one-vertex interior.
    for (Vertex s : queue) {
        if (has_neighbor_in(g, s, k1)) return unwind(s);
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (!inner.test(static_cast<std::size_t>(w)) || parent[w] != -2) continue;
            parent[w] = u;
            if (has_neighbor_in(g, w, k1)) return unwind(w);
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

Vertex first_in(const Bitset& b) { return static_cast<Vertex>(b.find_first()); }

}  // namespace

PartitionVerdict verify_good_partition(const Graph& g, const GoodPartition& p) {
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<int> owner(n, 0);
    const VertexSet* parts[] = {&p.k1, &p.k2, &p.k3, &p.l, &p.r};
    for (const VertexSet* s : parts) {
        for (Vertex v : *s) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                throw MalformedPartition("vertex " + std::to_string(v) + " out of range");
            }
            if (owner[v]++ > 0) throw MalformedPartition("vertex " + std::to_string(v) + " appears twice");
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (owner[v] == 0) throw MalformedPartition("vertex " + std::to_string(v) + " is missing");
    }

    PartitionVerdict out;
    auto fail = [&](Condition c, std::string msg, std::vector<Vertex> w) {
        out.violated = c;
        out.message = std::move(msg);
        out.witness = std::move(w);
        return out;
    };

    if (p.l.empty() || p.r.empty()) return fail(Condition::i, "L or R is empty", {});
    for (Vertex a : p.l) {
        for (Vertex b : p.r) {
            if (g.adjacent(a, b)) return fail(Condition::i, "edge between L and R", {a, b});
        }
    }

    for (const auto& s : {set_union(p.k1, p.k2), set_union(p.k2, p.k3)}) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (!g.adjacent(s[i], s[j])) {
                    return fail(Condition::ii, "K1∪K2 or K2∪K3 is not a clique", {s[i], s[j]});
                }
            }
        }
    }

    const Bitset k1 = g.bits(p.k1);
    const Bitset k3 = g.bits(p.k3);
    const Bitset l = g.bits(p.l);
    if (auto interior = bad_path_interior(g, k1, k3, l)) {
        std::vector<Vertex> path;
        path.push_back(first_in(k3 & g.neighbors_bits(interior->front())));
        path.insert(path.end(), interior->begin(), interior->end());
        path.push_back(first_in(k1 & g.neighbors_bits(interior->back())));
        std::reverse(path.begin(), path.end());
        return fail(Condition::iii, "chordless K3-K1 path through L with no K1-complete vertex", path);
    }

    bool crossEdge = false;
    for (Vertex a : p.k1) crossEdge = crossEdge || g.neighbors_bits(a).intersects(k3);
    if (crossEdge) {
        for (Vertex u : p.l) {
            if (has_neighbor_in(g, u, k1) && has_neighbor_in(g, u, k3)) {
                return fail(Condition::iv, "K1-K3 edge present and an L vertex sees both", {u});
            }
        }
    }

    for (Vertex a : p.l) {
        for (Vertex b : p.r) {
            if (triad_containing(g, a, b)) return out;
        }
    }
    return fail(Condition::v, "no triad meets both L and R", {});
}

std::vector<Vertex> neighborhood_order(const Graph& g, const VertexSet& side, const VertexSet& other) {
    const Bitset otherBits = g.bits(other);
    struct Entry {
        Vertex v;
        Bitset nbrs;
        std::size_t count;
    };
    std::vector<Entry> entries;
    entries.reserve(side.size());
    for (Vertex v : side) {
        Bitset nb = g.neighbors_bits(v) & otherBits;
        auto c = nb.count();
        entries.push_back({v, std::move(nb), c});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.count > b.count; });
    std::vector<Vertex> order;
    order.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0 && !entries[i].nbrs.is_subset_of(entries[i - 1].nbrs)) {
            throw HypothesisViolation("neighborhoods of " + std::to_string(entries[i - 1].v) + " and " +
                                      std::to_string(entries[i].v) + " are not nested: graph has a square");
        }
        order.push_back(entries[i].v);
    }
    return order;
}

bool is_frame(const Graph& g, const Frame& f) {
    const int n = g.size();
    if (f.x < 0 || f.y < 0 || f.x >= n || f.y >= n || f.x == f.y) return false;
    if (!triad_containing(g, f.x, f.y)) return false;
    Bitset allowed = g.all_bits();
    allowed.reset(static_cast<std::size_t>(f.x));
    allowed.reset(static_cast<std::size_t>(f.y));
    for (const auto* q : {&f.q1, &f.q3}) {
        if (q->empty() || !g.is_clique(*q)) return false;
        Bitset qb = g.bits(*q);
        if (!qb.is_subset_of(allowed)) return false;
        // maximal: no outside vertex of G - {x, y} is complete to q
        for (int v = 0; v < n; ++v) {
            if (allowed.test(static_cast<std::size_t>(v)) && !qb.test(static_cast<std::size_t>(v)) &&
                qb.is_subset_of(g.neighbors_bits(v))) {
                return false;
            }
        }
    }
    if (f.c1 && !(f.q1.contains(*f.c1) && !f.q3.contains(*f.c1))) return false;
    if (f.c3 && !(f.q3.contains(*f.c3) && !f.q1.contains(*f.c3))) return false;
    return true;
}

namespace {

std::vector<std::optional<Vertex>> pivot_choices(const VertexSet& s) {
    std::vector<std::optional<Vertex>> out{std::nullopt};
    for (Vertex v : s) out.emplace_back(v);
    return out;
}

Bitset without_pair(const Graph& g, Vertex x, Vertex y) {
    Bitset b = g.all_bits();
    b.reset(static_cast<std::size_t>(x));
    b.reset(static_cast<std::size_t>(y));
    return b;
}

// Ordered pairs (x, y), x != y, lying in a common triad, ascending.
std::vector<std::pair<Vertex, Vertex>> triad_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex x = 0; x < g.size(); ++x) {
        for (Vertex y = 0; y < g.size(); ++y) {
            if (x != y && triad_containing(g, x, y)) out.emplace_back(x, y);
        }
    }
    return out;
}

}  // namespace

void for_each_frame(const Graph& g, const std::function<bool(const Frame&)>& visit) {
    for (auto [x, y] : triad_pairs(g)) {
        const auto cliques = maximal_cliques(g, without_pair(g, x, y));
        for (const auto& q1 : cliques) {
            for (const auto& q3 : cliques) {
                const auto c1s = pivot_choices(set_difference(q1, q3));
                const auto c3s = pivot_choices(set_difference(q3, q1));
                for (const auto& c1 : c1s) {
                    for (const auto& c3 : c3s) {
                        if (!visit(Frame{q1, q3, x, y, c1, c3})) return;
                    }
                }
            }
        }
    }
}

std::vector<Frame> enumerate_frames(const Graph& g) {
    std::vector<Frame> out;
    for_each_frame(g, [&](const Frame& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

namespace {

struct Sides {
    Bitset l, r, ry;
};

std::optional<Sides> update(const Graph& g, const Bitset& cut, Vertex x, Vertex y) {
    Bitset outside = g.all_bits() - cut;
    Bitset l = component_of(g, outside, x);
    if (l.test(static_cast<std::size_t>(y))) return std::nullopt;
    Bitset r = outside - l;
    Bitset ry = component_of(g, r, y);
    return Sides{std::move(l), std::move(r), std::move(ry)};
}

}  // namespace

std::optional<Connectivity> connectivity_update(const Graph& g, const VertexSet& k1, const VertexSet& k2,
                                                const VertexSet& k3, Vertex x, Vertex y) {
    auto s = update(g, g.bits(k1) | g.bits(k2) | g.bits(k3), x, y);
    if (!s) return std::nullopt;
    return Connectivity{VertexSet::from_bits(s->l), VertexSet::from_bits(s->r), VertexSet::from_bits(s->ry)};
}

std::optional<GoodPartition> refine_frame(const Graph& g, const Frame& f, RefineTrace* trace) {
    RefineTrace local;
    RefineTrace& tr = trace ? *trace : local;

    const VertexSet q1only = set_difference(f.q1, f.q3);
    const VertexSet q3only = set_difference(f.q3, f.q1);
    const Bitset k2 = g.bits(set_intersection(f.q1, f.q3));

    // Step 1: keep the pivot and everything not above it in the order.
    auto truncate = [&](const VertexSet& side, const VertexSet& other, const std::optional<Vertex>& pivot) {
        Bitset kept = g.empty_bits();
        if (!pivot) return kept;
        const auto order = neighborhood_order(g, side, other);
        auto it = std::find(order.begin(), order.end(), *pivot);
        for (; it != order.end(); ++it) kept.set(static_cast<std::size_t>(*it));
        return kept;
    };
    Bitset k1 = truncate(q1only, q3only, f.c1);
    Bitset k3 = truncate(q3only, q1only, f.c3);

    tr.working_sizes.push_back(k1.count() + k3.count());
    auto sides = update(g, k1 | k2 | k3, f.x, f.y);
    if (!sides) return std::nullopt;

    auto shrunk = [&](std::size_t before) {
        const std::size_t now = k1.count() + k3.count();
        if (now >= before) throw std::logic_error("refinement did not shrink K'1 ∪ K'3");
        tr.working_sizes.push_back(now);
    };

    while (k1.any() && k3.any()) {
        // Step 2: condition (iii).
        while (auto interior = bad_path_interior(g, k1, k3, sides->l)) {
            const std::size_t before = k1.count() + k3.count();
            const Vertex last = interior->back();
            if (f.c1 && g.adjacent(last, *f.c1)) {
                k1 &= g.neighbors_bits(last);
            } else {
                k1 -= g.neighbors_bits(last);
            }
            if (f.c1 && !k1.test(static_cast<std::size_t>(*f.c1))) {
                throw std::logic_error("Step 2 removed the pivot c1");
            }
            shrunk(before);
            ++tr.step2_repairs;
            sides = update(g, k1 | k2 | k3, f.x, f.y);
            if (!sides) return std::nullopt;
        }

        // Step 3: condition (iv).
        bool crossEdge = false;
        for (auto a = k1.find_first(); a != Bitset::npos && !crossEdge; a = k1.find_next(a)) {
            crossEdge = g.neighbors_bits(static_cast<Vertex>(a)).intersects(k3);
        }
        if (!crossEdge) break;
        std::optional<Vertex> seer;
        for (auto u = sides->l.find_first(); u != Bitset::npos; u = sides->l.find_next(u)) {
            const auto& nu = g.neighbors_bits(static_cast<Vertex>(u));
            if (nu.intersects(k1) && nu.intersects(k3)) {
                seer = static_cast<Vertex>(u);
                break;
            }
        }
        if (!seer) break;
        const std::size_t before = k1.count() + k3.count();
        k3 -= g.neighbors_bits(*seer);
        shrunk(before);
        ++tr.step3_repairs;
        sides = update(g, k1 | k2 | k3, f.x, f.y);
        if (!sides) return std::nullopt;
    }

    GoodPartition p{VertexSet::from_bits(k1), VertexSet::from_bits(k2), VertexSet::from_bits(k3),
                    VertexSet::from_bits(sides->l), VertexSet::from_bits(sides->r)};
    if (!verify_good_partition(g, p)) {
        tr.verifier_rejected = true;
        return std::nullopt;
    }
    return p;
}

namespace {

// Shortest x-y path in G - blocked, as the list of its interior vertices.
std::optional<std::vector<Vertex>> shortest_interior(const Graph& g, const Bitset& blocked, Vertex x, Vertex y) {
    std::vector<int> parent(static_cast<std::size_t>(g.size()), -2);
    std::deque<Vertex> queue{x};
    parent[x] = -1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (parent[w] != -2 || blocked.test(static_cast<std::size_t>(w))) continue;
            parent[w] = u;
            if (w == y) {
                std::vector<Vertex> interior;
                for (int v = parent[y]; v != x; v = parent[v]) interior.push_back(v);
                return interior;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

struct PairOutcome {
    std::optional<GoodPartition> partition;
    std::optional<Frame> frame;
    std::size_t refined = 0;
    std::size_t pruned = 0;
};

PairOutcome sweep_pair(const Graph& g, Vertex x, Vertex y) {
    PairOutcome out;
    const auto cliques = maximal_cliques(g, without_pair(g, x, y));
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<Bitset> bits;
    std::vector<std::vector<std::size_t>> containing(n);
    bits.reserve(cliques.size());
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        bits.push_back(g.bits(cliques[i]));
        for (Vertex v : cliques[i]) containing[v].push_back(i);
    }

    for (std::size_t i = 0; i < cliques.size(); ++i) {
        // Q3 must meet a shortest x-y path of G - Q1, or Q1 already separates.
        std::vector<std::size_t> candidates;
        if (auto interior = shortest_interior(g, bits[i], x, y)) {
            for (Vertex v : *interior) candidates.insert(candidates.end(), containing[v].begin(), containing[v].end());
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        } else {
            candidates.resize(cliques.size());
            for (std::size_t j = 0; j < cliques.size(); ++j) candidates[j] = j;
        }
        out.pruned += cliques.size() - candidates.size();

        for (std::size_t j : candidates) {
            if (component_of(g, g.all_bits() - (bits[i] | bits[j]), x).test(static_cast<std::size_t>(y))) {
                ++out.pruned;
                continue;
            }
            const auto& q1 = cliques[i];
            const auto& q3 = cliques[j];
            for (const auto& c1 : pivot_choices(set_difference(q1, q3))) {
                for (const auto& c3 : pivot_choices(set_difference(q3, q1))) {
                    Frame f{q1, q3, x, y, c1, c3};
                    ++out.refined;
                    if (auto p = refine_frame(g, f)) {
                        out.partition = std::move(p);
                        out.frame = std::move(f);
                        return out;
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

PartitionSearch search_good_partition(const Graph& g, const SearchOptions& opts) {
    PartitionSearch result;
    const auto pairs = triad_pairs(g);

    auto finish = [&](const PairOutcome& o) {
        result.partition = o.partition;
        result.frame = o.frame;
        result.triad = triad_containing(g, o.frame->x, o.frame->y);
    };

    if (opts.jobs <= 1 || pairs.size() < 2) {
        for (auto [x, y] : pairs) {
            auto o = sweep_pair(g, x, y);
            result.frames_refined += o.refined;
            result.clique_pairs_pruned += o.pruned;
            if (o.partition) {
                finish(o);
                return result;
            }
        }
        return result;
    }

    // Workers claim pairs in canonical order; a success at index k cancels
    // every pair after k, so the lowest successful index wins as it would
    // sequentially. Counters cover the pairs up to the winner.
    std::vector<PairOutcome> outcomes(pairs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{pairs.size()};
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= pairs.size() || k > best.load()) return;
            outcomes[k] = sweep_pair(g, pairs[k].first, pairs[k].second);
            if (outcomes[k].partition) {
                std::size_t cur = best.load();
                while (k < cur && !best.compare_exchange_weak(cur, k)) {
                }
            }
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < opts.jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    const std::size_t winner = best.load();
    for (std::size_t k = 0; k < pairs.size() && k <= winner; ++k) {
        result.frames_refined += outcomes[k].refined;
        result.clique_pairs_pruned += outcomes[k].pruned;
    }
    if (winner < pairs.size()) finish(outcomes[winner]);
    return result;
}

std::optional<GoodPartition> find_good_partition(const Graph& g) { return search_good_partition(g).partition; }

}  // namespace prismcolor
