#pragma once

#include <iosfwd>
#include <string>

#include "semitsp/graph.hpp"

namespace semitsp {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

// Text format: line 1 holds n, followed by the n x n weight matrix in
// whitespace-separated rows. JSON format: {"n": int, "weights": [[...]]}.
// Both round-trip the stored doubles exactly.

std::string graph_to_text(const CompleteGraph& g);
CompleteGraph graph_from_text(std::istream& in);

std::string graph_to_json_text(const CompleteGraph& g);
CompleteGraph graph_from_json_text(const std::string& text);

// Format is selected by extension: ".json" means JSON, anything else text.
CompleteGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const CompleteGraph& g);

}  // namespace semitsp
