#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "prismcolor/graph.hpp"

namespace prismcolor {

/// Input could not be parsed; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// DIMACS .col: `c` comments, one `p edge <n> <m>` header, `e <u> <v>` edges
// with 1-based endpoints. `p col` is accepted as a header alias.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

/// Writes the header and the edges sorted, endpoints 1-based.
void write_dimacs(std::ostream& out, const Graph& g);
std::string to_dimacs(const Graph& g);

}  // namespace prismcolor
