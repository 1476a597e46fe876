// Text formats and JSON serializers.
//
// Graph text format: first line "n m", then m lines "u v" (0-indexed);
// '#' starts a comment anywhere. The writer emits edges sorted
// lexicographically, so write(parse(x)) is idempotent.
//
// Function text format: n space-separated B-local image ids on one line.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "fixig/fixing.hpp"
#include "fixig/functigraph.hpp"
#include "fixig/graph.hpp"
#include "fixig/group.hpp"
#include "fixig/resolving.hpp"

namespace fixig::io {

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& what);
    int line = 0;
};

Graph parse_graph(const std::string& text);
Graph read_graph(std::istream& in);
std::string write_graph(const Graph& g);

VertexFunction parse_function(const std::string& text);
std::string write_function(const VertexFunction& g);

nlohmann::json graph_json(const Graph& g);
nlohmann::json function_json(const VertexFunction& g);   // {"n":..,"images":[..]}
nlohmann::json fixing_json(const FixingResult& r);       // {"fix","witness","aut_order","lower_bound"}
nlohmann::json resolving_json(const ResolvingResult& r); // {"beta","witness"}
// {"degree","order","generators"} plus "elements" when requested.
nlohmann::json group_json(const PermGroup& g, bool with_elements = false);

} // namespace fixig::io
