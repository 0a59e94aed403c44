#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "prismcolor/partition.hpp"
#include "prismcolor/recolor.hpp"

namespace prismcolor {

// Partitions use keys "K1","K2","K3","L","R"; frames "Q1","Q3","x","y",
// "C1","C3" (C1/C3 are arrays of at most one id). All ids are 0-based.
nlohmann::json to_json(const GoodPartition& p);
nlohmann::json to_json(const Frame& f);
GoodPartition partition_from_json(const nlohmann::json& j);
Frame frame_from_json(const nlohmann::json& j);

/// `v <vertex> <color>` lines, vertices 1-based, uncolored vertices omitted.
void write_coloring(std::ostream& out, const PartialColoring& c);
std::string coloring_to_text(const PartialColoring& c);
/// Reads `v` lines; `c` lines and blanks are skipped. Throws ParseError.
PartialColoring read_coloring(std::istream& in, int n);

/// {"colors": [c(0), ..., c(n-1)]}
nlohmann::json coloring_to_json(const PartialColoring& c);
PartialColoring coloring_from_json(const nlohmann::json& j);

}  // namespace prismcolor
