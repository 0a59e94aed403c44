#pragma once

#include <vector>

#include "prismcolor/graph.hpp"

namespace prismcolor {

/// A vertex set whose members are pairwise adjacent.
using Clique = VertexSet;

/// All inclusion-maximal cliques, each sorted, the list sorted
/// lexicographically. Pivoting Bron-Kerbosch over bitset rows.
///
/// Square-free graphs have at most quadratically many maximal cliques;
/// on other inputs the result is still exact, only the bound is lost.
std::vector<Clique> maximal_cliques(const Graph& g);

/// Maximal cliques of the subgraph induced by `allowed`, in g's vertex ids.
std::vector<Clique> maximal_cliques(const Graph& g, const Bitset& allowed);

/// Size of a maximum clique; 0 for the empty graph.
int omega(const Graph& g);

}  // namespace prismcolor
