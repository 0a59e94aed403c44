// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "prismcolor/cliques.hpp"
#include "prismcolor/dimacs.hpp"
#include "prismcolor/generators.hpp"
#include "prismcolor/partition.hpp"
#include "prismcolor/recolor.hpp"
#include "prismcolor/serialize.hpp"
#include "prismcolor/solver.hpp"
#include "prismcolor/structure.hpp"

using namespace prismcolor;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// A corpus entry knows how to rebuild itself, so determinism can be
// checked from scratch.
struct Entry {
    std::string name;
    std::function<Instance()> make;
};

std::vector<Entry> build_corpus() {
    std::vector<Entry> out;
    for (int i = 0; i < 170; ++i) {
        const int n = 4 + (i * 7) % 57;
        const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
        out.push_back({"random n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                       [=] { return gen_square_free_berge(n, seed); }});
    }
    const std::vector<std::array<int, 3>> prisms{{2, 2, 2}, {2, 2, 4}, {2, 4, 4}, {4, 4, 4}, {2, 4, 6},
                                                 {6, 6, 6}, {2, 2, 12}, {8, 8, 8}, {3, 3, 3}, {3, 3, 5},
                                                 {3, 5, 7}, {5, 5, 5}, {7, 7, 7}, {3, 9, 11}, {13, 13, 13}};
    for (auto l : prisms) {
        out.push_back({"prism " + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]),
                       [=] { return gen_prism({l}); }});
    }
    const std::vector<std::array<std::vector<int>, 3>> hypers{
        {{{2, 2}, {2}, {2}}},       {{{2, 2, 2, 2}, {2}, {4}}}, {{{2, 4}, {2}, {4}}},
        {{{2, 2, 2}, {2}, {2}}},    {{{3}, {3, 3}, {3}}},       {{{3, 5}, {3}, {5}}},
        {{{4, 4, 4}, {4}, {4}}},    {{{2, 2, 2, 2}, {2}, {6}}}, {{{5, 5, 5}, {5}, {5}}},
        {{{2, 6, 10}, {4}, {2}}},   {{{3, 3, 3}, {3}, {3}}},    {{{7}, {3, 3}, {9}}},
    };
    for (const auto& h : hypers) {
        std::string label = "hyperprism";
        for (const auto& s : h) {
            label += " ";
            for (std::size_t i = 0; i < s.size(); ++i) label += (i ? "," : "") + std::to_string(s[i]);
        }
        out.push_back({label, [=] { return gen_hyperprism({h}); }});
    }
    // Bipartite subdivisions of K4: every cycle of branch lengths has even total of
    // at least 6 (a total of 4 is a square in the line graph).
    const std::vector<std::array<int, 6>> lk4s{{2, 2, 2, 2, 2, 2}, {1, 1, 1, 4, 4, 4}, {2, 2, 2, 4, 4, 4},
                                               {1, 1, 3, 4, 2, 2}, {3, 3, 3, 2, 2, 2}, {1, 3, 1, 2, 4, 2},
                                               {2, 4, 2, 4, 2, 4}, {4, 4, 4, 4, 4, 4}, {1, 1, 1, 4, 6, 8},
                                               {2, 2, 4, 6, 6, 6}, {3, 5, 7, 6, 6, 6}, {6, 6, 6, 6, 6, 6}};
    for (auto b : lk4s) {
        std::string label = "lk4";
        for (int x : b) label += " " + std::to_string(x);
        out.push_back({label, [=] { return gen_lk4_subdivision(b); }});
    }
    return out;
}

struct Report {
    bool pass = true;
    std::vector<std::string> failures;
    void fail(const std::string& why) {
        pass = false;
        if (failures.size() < 5) failures.push_back(why);
    }
};

bool all_pass = true;

void print(int id, const std::string& title, const Report& r, const std::string& summary) {
    all_pass = all_pass && r.pass;
    std::cout << "criterion " << id << " [" << (r.pass ? "PASS" : "FAIL") << "] " << title << ": " << summary << '\n';
    for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
}

struct Run {
    Instance inst;
    ColorResult result;
    double seconds = 0;
};

std::string fingerprint(const Instance& inst, const ColorResult& r) {
    return to_dimacs(inst.graph) + inst.sidecar().dump() + coloring_to_text(r.coloring) + tree_to_json(r.tree).dump() +
           tree_to_dot(r.tree);
}

void walk(const DecompositionNode& node, const std::function<void(const DecompositionNode&)>& f) {
    f(node);
    if (node.without_r) walk(*node.without_r, f);
    if (node.without_l) walk(*node.without_l, f);
}

// All square-free Berge graphs up to isomorphism with n <= 7: exhaustive
// for n <= 6, then one-vertex extensions (the class is hereditary).
std::vector<Graph> exhaustive_small() {
    std::vector<Graph> out;
    std::vector<Graph> prev;
    auto admissible = [](const Graph& g) { return !contains_square(g) && oracle::is_berge(g); };
    for (int n = 1; n <= 6; ++n) {
        std::vector<Graph> keep;
        for (auto& g : oracle::all_graphs(n))
            if (admissible(g)) keep.push_back(g);
        prev = oracle::iso_classes(keep);
        out.insert(out.end(), prev.begin(), prev.end());
    }
    std::vector<Graph> grown;
    for (const auto& g : prev) {
        for (std::uint32_t nb = 0; nb < 64; ++nb) {
            auto es = g.edges();
            for (Vertex v = 0; v < 6; ++v)
                if ((nb >> v) & 1u) es.emplace_back(v, 6);
            Graph h(7, es);
            if (admissible(h)) grown.push_back(h);
        }
    }
    auto seven = oracle::iso_classes(grown);
    out.insert(out.end(), seven.begin(), seven.end());
    return out;
}

PartialColoring lift(const PartialColoring& local, const VertexSet& keep, int n) {
    PartialColoring out(n);
    for (std::size_t i = 0; i < keep.size(); ++i) out.set(keep[i], local.at(static_cast<Vertex>(i)));
    return out;
}

VertexSet complement_of(int n, const VertexSet& drop) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!drop.contains(v)) keep.push_back(v);
    return VertexSet(keep);
}

// Random Kempe swaps and a random palette permutation: still proper, but
// the two sides now disagree on K3 and K1 ∪ K2.
PartialColoring scramble(const Graph& g, PartialColoring c, int k, std::mt19937_64& rng) {
    const VertexSet dom = c.domain();
    for (int i = 0; i < 6 && k >= 2 && !dom.empty(); ++i) {
        Vertex u = dom[rng() % dom.size()];
        Color other = 1 + static_cast<Color>(rng() % k);
        if (other == c.at(u)) continue;
        ColorPair pair{std::min(other, c.at(u)), std::max(other, c.at(u))};
        swap_colors(c, bichromatic_component(g, c, u, pair), pair);
    }
    std::vector<Color> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Vertex v : dom) c.set(v, perm[c.at(v) - 1]);
    return c;
}

}  // namespace

int main() {
    const auto start = Clock::now();
    const auto corpus = build_corpus();
    std::vector<Run> runs;
    runs.reserve(corpus.size());

    // 1. End-to-end optimality.
    {
        Report rep;
        std::size_t chi_checked = 0;
        int max_n = 0;
        const auto t0 = Clock::now();
        for (const auto& e : corpus) {
            Run run;
            run.inst = e.make();
            const Graph& g = run.inst.graph;
            max_n = std::max(max_n, g.size());
            if (g.size() > 60) rep.fail(e.name + ": n=" + std::to_string(g.size()) + " exceeds 60");
            const auto t = Clock::now();
            try {
                run.result = color(g);
            } catch (const std::exception& ex) {
                rep.fail(e.name + ": " + ex.what());
                runs.push_back(std::move(run));
                continue;
            }
            run.seconds = seconds_since(t);
            const auto& r = run.result;
            if (!verify_coloring(g, r.coloring).ok) rep.fail(e.name + ": coloring rejected");
            if (r.colors_used != omega(g)) rep.fail(e.name + ": colors used != omega");
            if (g.size() <= 14) {
                ++chi_checked;
                if (r.colors_used != oracle::chromatic_number(g)) rep.fail(e.name + ": colors used != chi");
            }
            runs.push_back(std::move(run));
        }
        const double secs = seconds_since(t0);
        if (corpus.size() < 200) rep.fail("corpus has fewer than 200 instances");
        if (secs > 600) rep.fail("took longer than 10 minutes");
        std::ostringstream s;
        s << corpus.size() << " instances (max n " << max_n << "), " << chi_checked << " checked against chi, "
          << static_cast<int>(secs) << "s";
        print(1, "end-to-end optimality", rep, s.str());
    }

    // 2. Clique enumeration against subset enumeration, and the n^2 bound.
    {
        Report rep;
        int compared = 0;
        for (int i = 0; compared < 100; ++i) {
            const int n = 3 + i % 10;
            auto inst = gen_square_free_berge(n, 50000 + static_cast<std::uint64_t>(i));
            if (contains_square(inst.graph)) continue;
            ++compared;
            if (maximal_cliques(inst.graph) != oracle::maximal_cliques(inst.graph)) {
                rep.fail("mismatch on n=" + std::to_string(n) + " seed=" + std::to_string(50000 + i));
            }
        }
        std::size_t worst_ratio_num = 0, worst_n = 1;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const Graph& g = runs[i].inst.graph;
            const auto n = static_cast<std::size_t>(g.size());
            const auto count = maximal_cliques(g).size();
            if (count > n * n) rep.fail(corpus[i].name + ": " + std::to_string(count) + " cliques");
            if (count * worst_n * worst_n > worst_ratio_num * n * n) {
                worst_ratio_num = count;
                worst_n = n;
            }
        }
        std::ostringstream s;
        s << compared << " instances compared exactly; largest count/n^2 = " << worst_ratio_num << "/"
          << worst_n * worst_n << " over " << runs.size() << " corpus instances";
        print(2, "clique-enumeration oracle", rep, s.str());
    }

    // 3. Partition soundness and completeness.
    {
        Report rep;
        std::size_t found = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const Graph& g = runs[i].inst.graph;
            auto p = find_good_partition(g);
            if (p) {
                ++found;
                if (!verify_good_partition(g, *p).ok()) rep.fail(corpus[i].name + ": returned partition rejected");
            }
            if (runs[i].result.tree.root) {
                walk(*runs[i].result.tree.root, [&](const DecompositionNode& node) {
                    if (!node.partition) return;
                    if (!verify_good_partition(g.induced(node.vertices), [&] {
                             // Partition in root ids; map into the node's local ids.
                             auto local = [&](const VertexSet& s) {
                                 std::vector<Vertex> out;
                                 for (Vertex v : s)
                                     out.push_back(static_cast<Vertex>(
                                         std::lower_bound(node.vertices.begin(), node.vertices.end(), v) -
                                         node.vertices.begin()));
                                 return VertexSet(out);
                             };
                             const auto& q = *node.partition;
                             return GoodPartition{local(q.k1), local(q.k2), local(q.k3), local(q.l), local(q.r)};
                         }())
                             .ok()) {
                        rep.fail(corpus[i].name + ": tree partition rejected");
                    }
                });
            }
        }
        auto small = exhaustive_small();
        std::size_t agree = 0, with_partition = 0;
        auto check = [&](const Graph& g, const std::string& label) {
            auto p = find_good_partition(g);
            auto brute = oracle::brute_good_partition(g);
            if (p.has_value() != brute.has_value()) {
                rep.fail(label + ": search " + (p ? "found" : "missed") + " a partition, brute force " +
                         (brute ? "found" : "did not"));
            } else {
                ++agree;
            }
            if (p) {
                ++with_partition;
                if (!oracle::is_good_partition(g, *p)) rep.fail(label + ": independent checker rejects result");
            }
        };
        for (std::size_t i = 0; i < small.size(); ++i) check(small[i], "small #" + std::to_string(i));
        std::size_t generated = 0;
        for (int i = 0; i < 240; ++i) {
            const int n = 8 + i % 3;
            auto inst = gen_square_free_berge(n, 70000 + static_cast<std::uint64_t>(i));
            check(inst.graph, "generated n=" + std::to_string(n) + " seed=" + std::to_string(70000 + i));
            ++generated;
        }
        std::ostringstream s;
        s << found << "/" << runs.size() << " corpus partitions verified; " << agree << "/"
          << small.size() + generated << " small graphs agree on existence (" << small.size()
          << " exhaustive n<=7 classes, " << generated << " generated n=8..10; " << with_partition
          << " with a partition)";
        print(3, "partition soundness/completeness", rep, s.str());
    }

    // 4. Merge correctness.
    {
        Report rep;
        std::mt19937_64 rng(4242);
        std::size_t planted = 0, swaps = 0, free_swaps = 0;
        for (std::size_t i = 0; i < runs.size() && planted < 100; ++i) {
            const Graph& g = runs[i].inst.graph;
            auto p = find_good_partition(g);
            if (!p) continue;
            ++planted;
            const int k = omega(g);
            const VertexSet k12 = set_union(p->k1, p->k2);
            auto keep1 = complement_of(g.size(), p->r), keep2 = complement_of(g.size(), p->l);
            PartialColoring c1, c2;
            try {
                c1 = lift(color(g.induced(keep1)).coloring, keep1, g.size());
                c2 = lift(color(g.induced(keep2)).coloring, keep2, g.size());
            } catch (const std::exception& ex) {
                rep.fail(corpus[i].name + ": child coloring failed: " + ex.what());
                continue;
            }
            c1 = scramble(g, c1, k, rng);
            c2 = scramble(g, c2, k, rng);
            std::size_t last = g.size() + 1;
            MergeOptions opts;
            opts.on_swap = [&](const SwapEvent& ev) {
                if (!(ev.bad_after < ev.bad_before) || ev.bad_before > last) {
                    rep.fail(corpus[i].name + ": bad count did not strictly decrease");
                }
                last = ev.bad_after;
                for (Vertex v : k12) {
                    if (ev.side1->at(v) != ev.side2->at(v)) rep.fail(corpus[i].name + ": K1 ∪ K2 disagreement");
                }
                if (find_conflict(g, *ev.side1) || find_conflict(g, *ev.side2))
                    rep.fail(corpus[i].name + ": swap broke properness");
            };
            MergeStats stats;
            try {
                auto m = merge_colorings(g, *p, c1, c2, k, opts, &stats);
                if (!verify_coloring(g, m).ok) rep.fail(corpus[i].name + ": merged coloring rejected");
                if (m.max_color() > k) rep.fail(corpus[i].name + ": palette exceeded");
            } catch (const std::exception& ex) {
                rep.fail(corpus[i].name + ": merge threw: " + ex.what());
            }
            swaps += stats.free_swaps + stats.general_swaps;
            free_swaps += stats.free_swaps;
        }
        if (planted < 100) rep.fail("only " + std::to_string(planted) + " planted instances");

        // Odd holes C5..C21 cut at two vertices: two colors cannot be merged.
        std::size_t corrupted = 0, raised = 0;
        for (int len = 5; len <= 21; len += 2) {
            Graph g = oracle::cycle(len);
            std::vector<Vertex> rest;
            for (Vertex v = 3; v < len; ++v) rest.push_back(v);
            GoodPartition p{{0}, {}, {2}, {1}, VertexSet(rest)};
            PartialColoring c1(len), c2(len);
            c1.set(0, 1);
            c1.set(1, 2);
            c1.set(2, 1);
            // Side 2 is the path 2, 3, ..., len-1, 0 colored from 0 = 1; an odd
            // number of edges leaves 2 with color 2.
            c2.set(0, 1);
            for (Vertex v = 2; v < len; ++v) c2.set(v, (len - v) % 2 ? 2 : 1);
            ++corrupted;
            try {
                auto m = merge_colorings(g, p, c1, c2, 2);
                rep.fail("C" + std::to_string(len) + ": merge returned a coloring");
                (void)m;
            } catch (const BergeViolation&) {
                ++raised;
            } catch (const std::exception& ex) {
                rep.fail("C" + std::to_string(len) + ": unexpected " + ex.what());
            }
        }
        // Random odd-hole gluings: any outcome but a silent improper coloring.
        std::size_t random_corrupt = 0;
        for (int t = 0; t < 100; ++t) {
            const int len = 5 + 2 * (t % 4);
            auto base = gen_square_free_berge(8 + t % 10, 90000 + static_cast<std::uint64_t>(t)).graph;
            auto es = base.edges();
            const int n0 = base.size();
            // Odd hole through vertex 0 of the base graph.
            std::vector<Vertex> hole{0};
            for (int i = 1; i < len; ++i) hole.push_back(n0 + i - 1);
            for (int i = 0; i < len; ++i) es.emplace_back(hole[i], hole[(i + 1) % len]);
            Graph g(n0 + len - 1, es);
            // Cut the hole at its neighbors of 0: hole[1] and hole[len-1] have L = the far arc.
            VertexSet k1{hole[1]}, k3{hole[len - 1]};
            std::vector<Vertex> larc, rarc;
            for (int i = 2; i < len - 1; ++i) larc.push_back(hole[i]);
            for (Vertex v = 0; v < n0; ++v) rarc.push_back(v);
            GoodPartition p{k1, {}, k3, VertexSet(larc), VertexSet(rarc)};
            auto keep1 = complement_of(g.size(), p.r), keep2 = complement_of(g.size(), p.l);
            const int k = std::max(2, omega(g));
            PartialColoring c1, c2;
            try {
                c1 = lift(leaf_color(g.induced(keep1), k), keep1, g.size());
                c2 = lift(leaf_color(g.induced(keep2), k), keep2, g.size());
            } catch (const std::exception&) {
                continue;
            }
            c1 = scramble(g, c1, k, rng);
            c2 = scramble(g, c2, k, rng);
            ++random_corrupt;
            try {
                auto m = merge_colorings(g, p, c1, c2, k);
                if (find_conflict(g, m) || m.max_color() > k) rep.fail("silent bad coloring on corrupted input");
            } catch (const BergeViolation&) {
                ++raised;
            } catch (const std::exception& ex) {
                rep.fail(std::string("corrupted input raised ") + ex.what());
            }
        }
        if (raised < corrupted) rep.fail("a forced odd-hole merge did not raise");
        std::ostringstream s;
        s << planted << " planted merges (" << swaps << " swaps, " << free_swaps << " free); " << corrupted
          << " forced odd-hole merges and " << random_corrupt << " random corrupted merges, " << raised
          << " raised BergeViolation, none silently improper";
        print(4, "merge correctness", rep, s.str());
    }

    // 5. Structural invariants.
    {
        Report rep;
        std::size_t nodes_max = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const auto& r = runs[i].result;
            if (!r.tree.root) continue;
            const auto n = static_cast<std::size_t>(runs[i].inst.graph.size());
            std::set<Triad> labels;
            bool dup = false;
            std::size_t nodes = 0;
            walk(*r.tree.root, [&](const DecompositionNode& node) {
                ++nodes;
                if (node.triad) {
                    Triad t = *node.triad;
                    std::sort(t.begin(), t.end());
                    if (!labels.insert(t).second) dup = true;
                }
                if (node.partition && !node.triad) dup = true;
            });
            if (dup) rep.fail(corpus[i].name + ": repeated or missing triad label");
            if (nodes > 3 * n * n * n) rep.fail(corpus[i].name + ": too many nodes");
            nodes_max = std::max(nodes_max, nodes);
        }
        std::size_t triad_free = 0;
        auto straight_to_leaf = [&](const Graph& g, const std::string& label) {
            ++triad_free;
            if (!enumerate_frames(g).empty()) rep.fail(label + ": has frames");
            auto r = color(g);
            if (r.tree.node_count() != 1 || r.stats.frames_refined != 0 || r.stats.leaves != 1)
                rep.fail(label + ": did not go straight to the leaf");
            if (r.colors_used != omega(g)) rep.fail(label + ": wrong color count");
        };
        straight_to_leaf(oracle::complete(4), "K4");
        for (const auto& g : exhaustive_small()) {
            if (oracle::triads(g).empty()) straight_to_leaf(g, "triad-free n=" + std::to_string(g.size()));
        }
        for (int i = 0; i < 400; ++i) {
            auto inst = gen_square_free_berge(5 + i % 20, 110000 + static_cast<std::uint64_t>(i));
            if (find_triads(inst.graph).empty()) straight_to_leaf(inst.graph, "generated triad-free");
        }
        std::ostringstream s;
        s << runs.size() << " trees checked (largest " << nodes_max << " nodes); " << triad_free
          << " triad-free graphs including K4 colored at a single leaf with no frames";
        print(5, "structural invariants", rep, s.str());
    }

    // 6. Determinism.
    {
        Report rep;
        std::size_t same = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            try {
                auto again = corpus[i].make();
                auto r2 = color(again.graph);
                SolverOptions par;
                par.jobs = 4;
                auto r3 = color(again.graph, par);
                const auto a = fingerprint(runs[i].inst, runs[i].result);
                if (a == fingerprint(again, r2) && a == fingerprint(again, r3)) {
                    ++same;
                } else {
                    rep.fail(corpus[i].name + ": outputs differ");
                }
            } catch (const std::exception& ex) {
                rep.fail(corpus[i].name + ": " + ex.what());
            }
        }
        std::ostringstream s;
        s << same << "/" << corpus.size() << " instances byte-identical across runs (sequential twice, 4 jobs once)";
        print(6, "determinism", rep, s.str());
    }

    std::cout << "total " << static_cast<int>(seconds_since(start)) << "s\n";
    return all_pass ? 0 : 1;
}
