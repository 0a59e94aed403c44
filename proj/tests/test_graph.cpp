#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "prismcolor/cliques.hpp"
#include "prismcolor/dimacs.hpp"
#include "prismcolor/generators.hpp"
#include "prismcolor/structure.hpp"

using namespace prismcolor;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

}  // namespace

TEST_CASE("graph construction normalizes and rejects bad edges") {
    Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), GraphError);
}

TEST_CASE("induced subgraph renumbers by position") {
    Graph c6 = oracle::cycle(6);
    Graph h = c6.induced(VertexSet{1, 2, 4, 5});
    CHECK(h.size() == 4);
    CHECK(h.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
    CHECK(c6.complement().edge_count() == 15 - 6);
}

TEST_CASE("contains_square") {
    auto sq = contains_square(oracle::cycle(4));
    REQUIRE(sq);
    CHECK(*sq == Square{0, 1, 2, 3});
    CHECK_FALSE(contains_square(oracle::cycle(5)));

    auto tri = gen_prism({{1, 1, 1}}).graph;
    auto w = contains_square(tri);
    REQUIRE(w);
    CHECK(w == oracle::first_square(tri));
    auto [a, b, c, d] = *w;
    CHECK((tri.adjacent(a, b) && tri.adjacent(b, c) && tri.adjacent(c, d) && tri.adjacent(d, a)));
    CHECK_FALSE(tri.adjacent(a, c));
    CHECK_FALSE(tri.adjacent(b, d));
}

TEST_CASE("contains_square matches the 4-tuple scan on random graphs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_graph(4 + t % 9, 0.2 + 0.6 * (t % 5) / 4.0, rng);
        CHECK(contains_square(g) == oracle::first_square(g));
    }
}

TEST_CASE("find_triads") {
    CHECK(find_triads(oracle::complete(4)).empty());
    CHECK(find_triads(oracle::cycle(6)) == std::vector<Triad>{{0, 2, 4}, {1, 3, 5}});
    CHECK(find_triads(oracle::cycle(5)).empty());
    auto t = triad_containing(oracle::cycle(6), 4, 0);
    REQUIRE(t);
    CHECK(*t == Triad{4, 0, 2});
    CHECK_FALSE(triad_containing(oracle::cycle(6), 0, 1));
}

TEST_CASE("maximal_cliques examples") {
    auto c5 = maximal_cliques(oracle::cycle(5));
    CHECK(c5.size() == 5);
    for (const auto& c : c5) CHECK(c.size() == 2);

    auto prism = gen_prism({{2, 2, 2}}).graph;
    auto pc = maximal_cliques(prism);
    CHECK(pc.size() == 8);
    CHECK(pc == oracle::maximal_cliques(prism));

    CHECK(maximal_cliques(oracle::complete(4)) == std::vector<Clique>{VertexSet{0, 1, 2, 3}});
    CHECK(maximal_cliques(Graph(0, {})).empty());
    CHECK(maximal_cliques(Graph(2, {})) == std::vector<Clique>{VertexSet{0}, VertexSet{1}});
}

TEST_CASE("maximal_cliques agrees with subset enumeration for n <= 12") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(1 + t % 12, 0.15 + 0.7 * (t % 7) / 6.0, rng);
        REQUIRE(maximal_cliques(g) == oracle::maximal_cliques(g));
        Bitset keep = g.all_bits();
        if (g.size() > 2) keep.reset(1);
        std::uint32_t mask = (std::uint32_t{1} << g.size()) - 1;
        if (g.size() > 2) mask &= ~2u;
        CHECK(maximal_cliques(g, keep) == oracle::maximal_cliques(g, mask));
    }
}

TEST_CASE("omega") {
    CHECK(omega(oracle::complete(4)) == 4);
    CHECK(omega(oracle::cycle(7)) == 2);
    CHECK(omega(gen_lk4_subdivision({2, 2, 2, 2, 2, 2}).graph) == 3);
    CHECK(oracle::omega(gen_lk4_subdivision({2, 2, 2, 2, 2, 2}).graph) == 3);
    CHECK(omega(Graph(0, {})) == 0);
    CHECK(omega(Graph(3, {})) == 1);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(2 + t % 15, 0.5, rng);
        CHECK(omega(g) == oracle::omega(g));
    }
}

TEST_CASE("is_berge examples") {
    auto c5 = is_berge(oracle::cycle(5));
    CHECK_FALSE(c5.berge);
    CHECK(c5.witness.size() == 5);
    CHECK_FALSE(c5.antihole);
    CHECK(is_berge(oracle::cycle(6)).berge);
    CHECK(is_berge(gen_prism({{2, 2, 2}}).graph).berge);
    CHECK(oracle::is_berge(gen_prism({{2, 2, 2}}).graph));

    auto anti = is_berge(oracle::cycle(7).complement());
    CHECK_FALSE(anti.berge);
    CHECK(anti.antihole);
    CHECK(anti.witness.size() == 7);

    CHECK_THROWS_AS(is_berge(Graph(65, {})), SizeCapExceeded);
    CHECK(is_berge(Graph(65, {}), {64, true}).berge);
}

TEST_CASE("is_berge agrees with the induced-cycle enumerator for n <= 10") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_graph(5 + t % 6, 0.25 + 0.5 * (t % 3) / 2.0, rng);
        auto v = is_berge(g);
        REQUIRE(v.berge == oracle::is_berge(g));
        if (!v.berge) {
            Graph host = v.antihole ? g.complement() : g;
            const auto& w = v.witness;
            CHECK(w.size() % 2 == 1);
            CHECK(w.size() >= 5);
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j < w.size(); ++j) {
                    bool consecutive = j == i + 1 || (i == 0 && j == w.size() - 1);
                    CHECK(host.adjacent(w[i], w[j]) == consecutive);
                }
        }
    }
}

TEST_CASE("components") {
    Graph c6 = oracle::cycle(6);
    CHECK(components(c6, VertexSet{0, 1, 2, 3, 4, 5}).size() == 1);
    CHECK(components(c6, VertexSet{1, 2, 4, 5}) == std::vector<VertexSet>{VertexSet{1, 2}, VertexSet{4, 5}});
    CHECK(components(c6, VertexSet{}).empty());
    Bitset allowed = c6.bits(VertexSet{1, 2, 4, 5});
    CHECK(VertexSet::from_bits(component_of(c6, allowed, 4)) == VertexSet{4, 5});
    CHECK(component_of(c6, allowed, 0).none());
}

TEST_CASE("lemma_c4_clique_index") {
    // a=0, b=1 non-adjacent, c=2 adjacent to both.
    Graph g1(3, {{0, 2}, {1, 2}});
    CHECK(lemma_c4_clique_index(g1, {}, {VertexSet{0, 1}, VertexSet{2}}) == 0);

    Graph g2(2, {{0, 1}});
    CHECK(lemma_c4_clique_index(g2, {}, {VertexSet{0}, VertexSet{1}}) == 0);

    // v=4 complete to X2={2,3} only; X1={0,1} non-adjacent.
    Graph g3(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 2}, {4, 3}});
    std::vector<VertexSet> xs{VertexSet{0, 1}, VertexSet{2, 3}};
    CHECK(lemma_c4_clique_index(g3, {4}, xs) == 0);
    // Brute force over every drop-one candidate: only X1 works.
    for (std::size_t i = 0; i < xs.size(); ++i) {
        VertexSet rest{4};
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) rest = set_union(rest, xs[j]);
        CHECK(g3.is_clique(rest) == (i == 0));
    }

    // Two non-adjacent sets of size two form a square: no valid index.
    Graph sq = oracle::cycle(4);
    CHECK_THROWS_AS(lemma_c4_clique_index(sq, {}, {VertexSet{0, 2}, VertexSet{1, 3}}), HypothesisViolation);
}

TEST_CASE("lemma_c4_clique_index on constructed instances") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        // Pairwise complete clique blocks plus at most one non-clique block.
        int blocks = 2 + static_cast<int>(rng() % 3);
        std::vector<VertexSet> xs;
        std::vector<std::pair<Vertex, Vertex>> e;
        Vertex next = 0;
        int loose = static_cast<int>(rng() % (blocks + 1));
        for (int b = 0; b < blocks; ++b) {
            int sz = 1 + static_cast<int>(rng() % 2);
            std::vector<Vertex> vs;
            for (int i = 0; i < sz; ++i) vs.push_back(next++);
            if (b != loose && sz == 2) e.emplace_back(vs[0], vs[1]);
            xs.emplace_back(vs);
        }
        for (int a = 0; a < blocks; ++a)
            for (int b = a + 1; b < blocks; ++b)
                for (Vertex u : xs[a])
                    for (Vertex v : xs[b]) e.emplace_back(u, v);
        std::vector<Vertex> k;
        int kn = static_cast<int>(rng() % 3);
        for (int i = 0; i < kn; ++i) {
            Vertex v = next++;
            for (Vertex w : k) e.emplace_back(v, w);
            int skip = loose < blocks ? loose : static_cast<int>(rng() % blocks);
            for (int b = 0; b < blocks; ++b) {
                if (b == skip) continue;
                for (Vertex u : xs[b]) e.emplace_back(v, u);
            }
            k.push_back(v);
        }
        Graph g(next, e);
        if (contains_square(g)) continue;
        auto i = lemma_c4_clique_index(g, VertexSet(k), xs);
        VertexSet rest(k);
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) rest = set_union(rest, xs[j]);
        CHECK(g.is_clique(rest));
    }
}

TEST_CASE("dimacs round trip and errors") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(t % 15, 0.4, rng);
        std::istringstream in(to_dimacs(g));
        CHECK(read_dimacs(in) == g);
    }
    std::istringstream ok("c hello\np edge 3 2\ne 1 2\ne 2 3\n");
    Graph g = read_dimacs(ok);
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(to_dimacs(g) == "p edge 3 2\ne 1 2\ne 2 3\n");

    auto fails_at = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_dimacs(in);
        } catch (const ParseError& e) {
            return e.line() == line;
        }
        return false;
    };
    CHECK(fails_at("p edge 3 1\ne 1 4\n", 2));
    CHECK(fails_at("p edge 3 1\ne 2 2\n", 2));
    CHECK(fails_at("e 1 2\n", 1));
    CHECK(fails_at("p edge 3 1\np edge 3 1\n", 2));
    CHECK(fails_at("p edge 3 1\nx 1 2\n", 2));
    CHECK(fails_at("p edge 3 1\ne 1\n", 2));
    CHECK(fails_at("c only comments\n", 0));
}
