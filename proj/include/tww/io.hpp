#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tww/embedding.hpp"
#include "tww/sequence.hpp"

namespace tww {

// Graph files are JSON objects
//   { "n": int, "edges": [[u,v],...],
//     "rotation": { "<vertex>": [neighbors in cyclic order], ... },
//     "outer_face": [vertex cycle]   (optional) }
// with 0-based vertex ids. Reading validates everything: ids in range, the
// edge list equal to the edge set the rotation implies, rotation consistency,
// and the Euler count. Violations throw std::invalid_argument.
//
// "rotation" may be omitted for commands that only need the abstract graph
// (verification, the exact solver); the result then has empty rotation lists
// and must not carry "outer_face". has_embedding tells the two apart.
PlaneGraph read_graph_json(std::istream& in);
bool has_embedding(const PlaneGraph& g);
void write_graph_json(std::ostream& out, const PlaneGraph& g);

// Sequence files are JSON objects
//   { "n": int, "steps": [ {"a": id, "b": id, "result": id}, ... ] }
// Reading checks only shape and the fresh-id discipline result = n + index;
// liveness is the replayer's business.
ContractionSequence read_sequence_json(std::istream& in);
void write_sequence_json(std::ostream& out, const ContractionSequence& seq);

PlaneGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const PlaneGraph& g);
ContractionSequence load_sequence(const std::string& path);
void save_sequence(const std::string& path, const ContractionSequence& seq);

// Graphviz text for a trigraph snapshot; red edges carry [color=red].
std::string to_dot(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& black_edges,
                   const std::vector<std::pair<int, int>>& red_edges);

}  // namespace tww
