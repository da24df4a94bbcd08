#include "tww/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tww {

namespace {

using nlohmann::json;

json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
  }
}

int get_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw std::invalid_argument(std::string("missing or non-integer field \"") + field + "\"");
  return j[field].get<int>();
}

int vertex_in(const json& v, int n, const char* where) {
  if (!v.is_number_integer()) throw std::invalid_argument(std::string(where) + ": vertex is not an integer");
  const int x = v.get<int>();
  if (x < 0 || x >= n) throw std::invalid_argument(std::string(where) + ": vertex " + std::to_string(x) + " out of range");
  return x;
}

}  // namespace

PlaneGraph read_graph_json(std::istream& in) {
  const json j = parse(in);
  if (!j.is_object()) throw std::invalid_argument("graph file: top level is not an object");

  PlaneGraph g;
  g.n = get_int(j, "n");
  if (g.n < 1) throw std::invalid_argument("graph file: n must be positive");

  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph file: missing \"edges\" array");
  std::set<std::pair<int, int>> listed;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph file: edge is not a pair");
    const int u = vertex_in(e[0], g.n, "edges");
    const int v = vertex_in(e[1], g.n, "edges");
    if (u == v) throw std::invalid_argument("graph file: self loop in edges");
    if (!listed.insert({std::min(u, v), std::max(u, v)}).second)
      throw std::invalid_argument("graph file: duplicate edge");
  }

  g.rotation.assign(g.n, {});
  if (!j.contains("rotation")) {
    // abstract graph: plain edge list, no embedding
    if (j.contains("outer_face"))
      throw std::invalid_argument("graph file: outer_face without a rotation system");
    g.edges.assign(listed.begin(), listed.end());
    return g;
  }
  if (!j["rotation"].is_object())
    throw std::invalid_argument("graph file: \"rotation\" is not an object");
  for (const auto& [key, value] : j["rotation"].items()) {
    int v;
    try {
      size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (...) {
      throw std::invalid_argument("graph file: rotation key \"" + key + "\" is not a vertex id");
    }
    if (v < 0 || v >= g.n) throw std::invalid_argument("graph file: rotation key " + key + " out of range");
    if (!value.is_array()) throw std::invalid_argument("graph file: rotation of " + key + " is not an array");
    for (const json& w : value) g.rotation[v].push_back(vertex_in(w, g.n, "rotation"));
  }

  validate_rotation(g.rotation, std::vector<char>(g.n, 1));
  g.rebuild_edges();
  if (std::set<std::pair<int, int>>(g.edges.begin(), g.edges.end()) != listed)
    throw std::invalid_argument("graph file: \"edges\" disagrees with the rotation system");
  if (!euler_ok(g))
    throw std::invalid_argument("graph file: rotation system fails the Euler check, not a plane embedding");

  if (j.contains("outer_face")) {
    if (!j["outer_face"].is_array()) throw std::invalid_argument("graph file: outer_face is not an array");
    std::vector<int> walk;
    for (const json& w : j["outer_face"]) walk.push_back(vertex_in(w, g.n, "outer_face"));
    if (find_face_matching_cycle(trace_faces(g), walk) < 0)
      throw std::invalid_argument("graph file: outer_face is not a face of the embedding");
    g.outer_face = std::move(walk);
  }
  return g;
}

bool has_embedding(const PlaneGraph& g) {
  if (g.rotation.size() != static_cast<size_t>(g.n)) return false;
  size_t arcs = 0;
  for (const auto& rot : g.rotation) arcs += rot.size();
  return arcs == 2 * g.edges.size();
}

void write_graph_json(std::ostream& out, const PlaneGraph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = json::array();
  for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
  if (has_embedding(g)) {
    j["rotation"] = json::object();
    for (int v = 0; v < g.n; ++v) j["rotation"][std::to_string(v)] = g.rotation[v];
    if (g.outer_face) j["outer_face"] = *g.outer_face;
  }
  out << j.dump(2) << "\n";
}

ContractionSequence read_sequence_json(std::istream& in) {
  const json j = parse(in);
  if (!j.is_object()) throw std::invalid_argument("sequence file: top level is not an object");

  ContractionSequence seq;
  seq.initial_count = get_int(j, "n");
  if (seq.initial_count < 1) throw std::invalid_argument("sequence file: n must be positive");
  if (!j.contains("steps") || !j["steps"].is_array())
    throw std::invalid_argument("sequence file: missing \"steps\" array");

  int expected = seq.initial_count;
  for (const json& s : j["steps"]) {
    if (!s.is_object()) throw std::invalid_argument("sequence file: step is not an object");
    ContractionStep step;
    step.a = get_int(s, "a");
    step.b = get_int(s, "b");
    step.result = get_int(s, "result");
    if (step.a < 0 || step.b < 0 || step.a >= expected || step.b >= expected)
      throw std::invalid_argument("sequence file: step references an id outside 0.." +
                                  std::to_string(expected - 1));
    if (step.result != expected)
      throw std::invalid_argument("sequence file: step result " + std::to_string(step.result) +
                                  " breaks the fresh-id rule, expected " + std::to_string(expected));
    ++expected;
    seq.steps.push_back(step);
  }
  return seq;
}

void write_sequence_json(std::ostream& out, const ContractionSequence& seq) {
  json j;
  j["n"] = seq.initial_count;
  j["steps"] = json::array();
  for (const ContractionStep& s : seq.steps)
    j["steps"].push_back({{"a", s.a}, {"b", s.b}, {"result", s.result}});
  out << j.dump(2) << "\n";
}

namespace {

template <typename T, typename F>
T with_input(const std::string& path, F f) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return f(in);
}

template <typename F>
void with_output(const std::string& path, F f) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  f(out);
}

}  // namespace

PlaneGraph load_graph(const std::string& path) {
  return with_input<PlaneGraph>(path, [](std::istream& in) { return read_graph_json(in); });
}

void save_graph(const std::string& path, const PlaneGraph& g) {
  with_output(path, [&](std::ostream& out) { write_graph_json(out, g); });
}

ContractionSequence load_sequence(const std::string& path) {
  return with_input<ContractionSequence>(path, [](std::istream& in) { return read_sequence_json(in); });
}

void save_sequence(const std::string& path, const ContractionSequence& seq) {
  with_output(path, [&](std::ostream& out) { write_sequence_json(out, seq); });
}

std::string to_dot(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& black_edges,
                   const std::vector<std::pair<int, int>>& red_edges) {
  std::ostringstream out;
  out << "graph trigraph {\n";
  for (int v : vertices) out << "  " << v << ";\n";
  for (auto [u, v] : black_edges) out << "  " << u << " -- " << v << ";\n";
  for (auto [u, v] : red_edges) out << "  " << u << " -- " << v << " [color=red];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tww
