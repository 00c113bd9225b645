#ifndef LAYGRAPH_JSON_IO_HPP
#define LAYGRAPH_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "laygraph/graph.hpp"
#include "laygraph/hilbert.hpp"
#include "laygraph/oracle.hpp"
#include "laygraph/series.hpp"

namespace laygraph {

/// Reads the graph object format:
///   { "name": "...", "vertices": [{"id": "...", "level": 0}, ...],
///     "edges": [{"tail": "...", "head": "..."}, ...] }
/// Unknown fields are rejected. Throws Error(Syntax) for malformed input.
RawGraph parse_raw_graph(std::string_view text);

/// parse_raw_graph followed by LayeredGraph::validate.
LayeredGraph parse_graph(std::string_view text);

std::string serialize_graph(const LayeredGraph& g);

// Result objects. Integer arrays are written with exact decimal digits, so
// coefficients beyond 64 bits survive the trip.
std::string to_json(const IntSeries& s);
std::string to_json(const HilbertResult& r);
std::string to_json(const DualResult& d);
std::string to_json(const WordCount& wc);
std::string to_json(const RationalFn& f, std::size_t truncation);

/// Parses JSON text keeping integers that overflow 64 bits as decimal
/// strings instead of rounding them to doubles.
nlohmann::json parse_exact(std::string_view text);

/// Reads an array of integers produced by to_json (number or digit string).
std::vector<Int> int_array(const nlohmann::json& j);

}  // namespace laygraph

#endif  // LAYGRAPH_JSON_IO_HPP
