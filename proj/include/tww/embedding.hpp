#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tww {

// Combinatorial plane embedding: per-vertex cyclic neighbor orders plus an
// optional designated outer face (given as its boundary walk). Embeddings are
// inputs here; nothing in this codebase computes one from scratch.
struct PlaneGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;      // u < v, sorted
  std::vector<std::vector<int>> rotation;      // size n, cyclic neighbor lists
  std::optional<std::vector<int>> outer_face;  // boundary vertex walk

  void rebuild_edges();  // derive `edges` from `rotation`
};

// One face of an embedding, as the cyclic sequence of directed edges produced
// by face tracing. walk[i] is the origin of the i-th directed edge.
struct FaceWalk {
  std::vector<int> walk;
  std::vector<std::pair<int, int>> arcs() const;
  int length() const { return static_cast<int>(walk.size()); }
  bool simple() const;  // boundary visits no vertex twice
};

struct FaceSet {
  std::vector<FaceWalk> faces;
  // face_of_arc[v][i] = face containing the directed edge (v -> rotation[v][i])
  std::vector<std::vector<int>> face_of_arc;

  int arc_face(int u, int v, const std::vector<std::vector<int>>& rotation) const;
};

// Throws std::invalid_argument when the rotation lists are inconsistent
// (self loops, duplicates, or a neighbor missing the back reference).
void validate_rotation(const std::vector<std::vector<int>>& rotation, const std::vector<char>& present);

// Traces all faces with the successor rule: the directed edge (u,v) is
// followed by (v,w) where w follows u in the rotation at v.
FaceSet trace_faces(const std::vector<std::vector<int>>& rotation, const std::vector<char>& present);
FaceSet trace_faces(const PlaneGraph& g);

int component_count(const std::vector<std::vector<int>>& adj, const std::vector<char>& present);

// Genus-0 certificate: V - E + F == 1 + #components (== 2 when connected).
bool euler_ok(const PlaneGraph& g);
bool euler_ok(const std::vector<std::vector<int>>& rotation, const std::vector<char>& present);

// Which side of a cycle each face is on. Exterior faces are those reachable
// from the designated outer face in the dual without crossing a cycle edge;
// interior vertices are incident to interior faces only.
struct CycleSides {
  std::vector<char> face_interior;  // by face id
  std::vector<int> interior_faces;
  std::vector<int> interior_vertices;
};
CycleSides cycle_sides(const std::vector<std::vector<int>>& rotation, const std::vector<char>& present,
                       const FaceSet& fs, const std::vector<int>& cycle, int outer_face);
CycleSides cycle_sides(const PlaneGraph& g, const std::vector<int>& cycle, int outer_face);

// Adds one fresh hub vertex inside every face, joined to the distinct
// vertices of that face's boundary walk. Input vertices keep their ids and
// stay induced.
PlaneGraph star_augment(const PlaneGraph& g);

// Repeated star augmentation (plus a connecting pre-pass for disconnected
// input) until the result is a simple 2-connected plane graph all of whose
// faces are triangles. The input graph is an induced subgraph of the result.
struct TriangulationResult {
  PlaneGraph graph;
  int rounds = 0;
};
TriangulationResult make_triangulation(const PlaneGraph& g);

bool all_faces_triangles(const PlaneGraph& g);

std::vector<int> articulation_points(const std::vector<std::vector<int>>& adj, const std::vector<char>& present);
bool is_two_connected(const std::vector<std::vector<int>>& adj, const std::vector<char>& present);
bool is_two_connected(const PlaneGraph& g);

// Locates a traced face whose boundary equals `cycle` up to rotation and
// reflection; -1 when absent.
int find_face_matching_cycle(const FaceSet& fs, const std::vector<int>& cycle);

// Same cyclic sequence read in the same direction (starting anywhere).
bool cyclic_equal_oriented(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace tww
