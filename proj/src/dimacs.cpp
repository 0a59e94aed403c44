#include "prismcolor/dimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace prismcolor {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        if (tag == "p") {
            std::string fmt;
            long nn = -1;
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            if (!(ls >> fmt >> nn >> declared_m) || (fmt != "edge" && fmt != "col") || nn < 0 || declared_m < 0) {
                throw ParseError("expected 'p edge <n> <m>'", lineno);
            }
            n = static_cast<int>(nn);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before problem line", lineno);
            long u = 0;
            long v = 0;
            if (!(ls >> u >> v)) throw ParseError("expected 'e <u> <v>'", lineno);
            if (u < 1 || v < 1 || u > n || v > n) {
                throw ParseError("vertex out of range 1.." + std::to_string(n), lineno);
            }
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError("unknown line tag '" + tag + "'", lineno);
        }
    }
    if (n < 0) throw ParseError("missing problem line", 0);
    return Graph(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << "p edge " << g.size() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream os;
    write_dimacs(os, g);
    return os.str();
}

}  // namespace prismcolor
