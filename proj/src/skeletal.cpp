#include "tww/skeletal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tww/embedding.hpp"

namespace tww {

const char* face_status_name(FaceStatus s) {
  switch (s) {
    case FaceStatus::Empty: return "empty";
    case FaceStatus::Reduced: return "reduced";
    case FaceStatus::Rich: return "rich";
    case FaceStatus::OverLimit: return "over-limit";
  }
  return "?";
}

bool SkeletalState::skeleton_empty() const {
  return skeleton_size() == 0;
}

int SkeletalState::skeleton_size() const {
  int c = 0;
  for (char p : skel_present) c += p;
  return c;
}

bool SkeletalState::in_skeleton(int v) const {
  return v >= 0 && v < static_cast<int>(skel_present.size()) && skel_present[v];
}

int SkeletalState::layer_of(int v) const {
  if (v < 0 || v >= static_cast<int>(layer.size())) return -1;
  return layer[v];
}

int SkeletalState::max_layer() const {
  int m = -1;
  for (int v : h.vertices()) m = std::max(m, layer_of(v));
  return m;
}

std::vector<int> SkeletalState::layer_members(int i) const {
  std::vector<int> out;
  for (int v : h.vertices())
    if (layer_of(v) == i) out.push_back(v);
  return out;
}

FaceStatus classify_face(const SkeletalState& st, int face) {
  const FaceRecord& f = st.faces.at(face);
  if (f.assigned.empty()) return FaceStatus::Empty;
  std::map<int, int> per_layer;
  int worst = 0;
  for (int v : f.assigned) worst = std::max(worst, ++per_layer[st.layer_of(v)]);
  if (worst <= 1) return FaceStatus::Reduced;
  if (worst <= 3) return FaceStatus::Rich;
  return FaceStatus::OverLimit;
}

std::optional<SinkResult> try_face_sink(const SkeletalState& st, int face) {
  const std::vector<int>& cyc = st.faces.at(face).cycle;
  const int n = static_cast<int>(cyc.size());
  if (n < 3) return std::nullopt;

  std::optional<SinkResult> found;
  for (int k = 0; k < n; ++k) {
    // drop the edge cyc[k]..cyc[k+1], leaving the path starting at cyc[k+1]
    std::vector<int> path(n);
    for (int i = 0; i < n; ++i) path[i] = cyc[(k + 1 + i) % n];

    // climb to the deepest common vertex, then require descent to the end
    int j = 0;
    while (j + 1 < n && st.tree.parent[path[j]] == path[j + 1]) ++j;
    bool ok = true;
    for (int i = j; i + 1 < n && ok; ++i) ok = st.tree.parent[path[i + 1]] == path[i];
    if (!ok) continue;

    SinkResult r;
    r.sink = path[j];
    r.witness_edge = {std::min(cyc[k], cyc[(k + 1) % n]), std::max(cyc[k], cyc[(k + 1) % n])};
    if (found && found->sink != r.sink) return std::nullopt;  // ambiguous, malformed tree
    if (!found) found = r;
  }
  return found;
}

SinkResult face_sink(const SkeletalState& st, int face) {
  auto r = try_face_sink(st, face);
  if (!r) throw std::invalid_argument("face_sink: no boundary edge splits the cycle into two tree-vertical paths");
  return *r;
}

SplendidReport check_splendid(const SkeletalState& st) {
  SplendidReport rep;
  auto bad = [&rep](const std::string& msg) { rep.violations.push_back(msg); };
  std::ostringstream os;
  auto flush = [&os, &bad]() { bad(os.str()); os.str(""); };

  const Trigraph& h = st.h;
  const int base = h.initial_count();
  if (static_cast<int>(st.skel_present.size()) != base ||
      static_cast<int>(st.skel_rotation.size()) != base) {
    bad("skeleton arrays do not match the base vertex count");
    return rep;
  }
  if (static_cast<int>(st.layer.size()) < h.id_bound() ||
      static_cast<int>(st.parts.size()) < h.id_bound()) {
    bad("layer or part arrays shorter than the id bound");
    return rep;
  }

  const std::vector<int> alive = h.vertices();

  for (int v : alive)
    if (st.layer_of(v) < 0) {
      os << "vertex " << v << ": alive but has no layer";
      flush();
    }

  // every edge spans at most one layer boundary
  for (int u : alive)
    for (int w : h.neighbors(u))
      if (u < w && std::abs(st.layer_of(u) - st.layer_of(w)) > 1) {
        os << "edge " << u << "-" << w << ": spans layers " << st.layer_of(u) << " and " << st.layer_of(w);
        flush();
      }

  // alive parts partition the base vertex set
  {
    std::vector<int> owner(base, -1);
    for (int v : alive) {
      if (st.parts[v].empty()) {
        os << "vertex " << v << ": empty part";
        flush();
        continue;
      }
      for (int p : st.parts[v]) {
        if (p < 0 || p >= base) {
          os << "vertex " << v << ": part member " << p << " out of range";
          flush();
        } else if (owner[p] >= 0) {
          os << "base vertex " << p << ": claimed by both " << owner[p] << " and " << v;
          flush();
        } else {
          owner[p] = v;
        }
      }
    }
    for (int p = 0; p < base; ++p)
      if (owner[p] < 0) {
        os << "base vertex " << p << ": not covered by any alive part";
        flush();
      }
  }

  if (st.skeleton_empty()) {
    if (!st.faces.empty() || st.outer_face != -1) bad("empty skeleton must carry no faces");
    for (int i = 0; i <= st.max_layer(); ++i) {
      const int c = static_cast<int>(st.layer_members(i).size());
      if (c > 4) {
        os << "layer " << i << ": " << c << " vertices with empty skeleton (limit 4)";
        flush();
      }
    }
    if (h.max_red_degree() > 11) {
      os << "max red degree " << h.max_red_degree() << " exceeds 11";
      flush();
    }
    return rep;
  }

  // skeleton vertices are uncontracted base vertices, alive in h
  for (int v = 0; v < base; ++v) {
    if (!st.skel_present[v]) {
      if (!st.skel_rotation[v].empty()) {
        os << "vertex " << v << ": rotation entries on a non-skeleton vertex";
        flush();
      }
      continue;
    }
    if (!h.alive(v)) {
      os << "vertex " << v << ": in skeleton but not alive";
      flush();
    }
    if (st.parts[v] != std::vector<int>{v}) {
      os << "vertex " << v << ": skeleton vertex is a contraction product";
      flush();
    }
  }

  try {
    validate_rotation(st.skel_rotation, st.skel_present);
  } catch (const std::exception& e) {
    bad(std::string("skeleton rotation invalid: ") + e.what());
    return rep;
  }
  if (!euler_ok(st.skel_rotation, st.skel_present)) {
    bad("skeleton embedding fails the Euler check");
    return rep;
  }
  if (!is_two_connected(st.skel_rotation, st.skel_present)) bad("skeleton is not 2-connected");

  // edges among skeleton vertices: present skeleton edges exist in h, and
  // every h edge between skeleton vertices is black
  for (int u = 0; u < base; ++u) {
    if (!st.skel_present[u]) continue;
    for (int w : st.skel_rotation[u])
      if (u < w && h.edge(u, w) != EdgeColor::Black) {
        os << "skeleton edge " << u << "-" << w << ": not a black edge of the trigraph";
        flush();
      }
    for (int w : h.neighbors(u))
      if (u < w && st.in_skeleton(w) && h.edge(u, w) == EdgeColor::Red) {
        os << "edge " << u << "-" << w << ": red edge inside the skeleton";
        flush();
      }
  }

  // face records must match a fresh trace one-to-one
  const FaceSet fs = trace_faces(st.skel_rotation, st.skel_present);
  if (fs.faces.size() != st.faces.size()) {
    os << "face records: " << st.faces.size() << " stored vs " << fs.faces.size() << " traced";
    flush();
    return rep;
  }
  std::vector<char> claimed(fs.faces.size(), 0);
  for (size_t i = 0; i < st.faces.size(); ++i) {
    const std::vector<int>& cyc = st.faces[i].cycle;
    if (cyc.size() < 3) {
      os << "face " << i << ": boundary shorter than a triangle";
      flush();
      return rep;
    }
    bool shape_ok = true;
    for (int v : cyc)
      if (!st.in_skeleton(v)) {
        os << "face " << i << ": boundary vertex " << v << " not in the skeleton";
        flush();
        shape_ok = false;
      }
    if (!shape_ok) return rep;
    {
      std::vector<int> s = cyc;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        os << "face " << i << ": boundary is not a simple cycle";
        flush();
      }
    }
    const int t = fs.arc_face(cyc[0], cyc[1], st.skel_rotation);
    if (t < 0 || !cyclic_equal_oriented(cyc, fs.faces[t].walk)) {
      os << "face " << i << ": stored boundary does not match any traced face";
      flush();
    } else if (claimed[t]) {
      os << "face " << i << ": traced face claimed twice";
      flush();
    } else {
      claimed[t] = 1;
    }
  }
  if (st.outer_face < 0 || st.outer_face >= static_cast<int>(st.faces.size())) {
    bad("outer face index out of range");
    return rep;
  }

  // assignment: a partition of the alive non-skeleton vertices such that each
  // component of h minus the skeleton sits in one face, with its skeleton
  // neighbors on that face's boundary
  std::vector<int> face_of(h.id_bound(), -1);
  for (size_t i = 0; i < st.faces.size(); ++i) {
    for (int v : st.faces[i].assigned) {
      if (v < 0 || v >= h.id_bound() || !h.alive(v)) {
        os << "face " << i << ": assigned vertex " << v << " is not alive";
        flush();
        continue;
      }
      if (st.in_skeleton(v)) {
        os << "face " << i << ": skeleton vertex " << v << " listed as assigned";
        flush();
        continue;
      }
      if (face_of[v] >= 0) {
        os << "vertex " << v << ": assigned to faces " << face_of[v] << " and " << i;
        flush();
        continue;
      }
      face_of[v] = static_cast<int>(i);
    }
  }
  for (int v : alive)
    if (!st.in_skeleton(v) && face_of[v] < 0) {
      os << "vertex " << v << ": alive outside the skeleton but assigned to no face";
      flush();
    }
  {
    std::vector<char> visited(h.id_bound(), 0);
    for (int s : alive) {
      if (st.in_skeleton(s) || visited[s] || face_of[s] < 0) continue;
      const int f = face_of[s];
      std::set<int> cyc_set(st.faces[f].cycle.begin(), st.faces[f].cycle.end());
      std::vector<int> stack{s};
      visited[s] = 1;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : h.neighbors(u)) {
          if (st.in_skeleton(w)) {
            if (!cyc_set.count(w)) {
              os << "vertex " << u << ": neighbor " << w << " lies outside the boundary of face " << f;
              flush();
            }
            continue;
          }
          if (face_of[w] != f && face_of[w] >= 0) {
            os << "vertices " << u << " and " << w << ": one component split across faces " << f << " and "
               << face_of[w];
            flush();
          }
          if (!visited[w]) {
            visited[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }
  }

  // status budget: at most one rich face, nothing over the limit, empty faces
  // are triangles
  {
    int rich = 0;
    for (size_t i = 0; i < st.faces.size(); ++i) {
      const FaceStatus s = classify_face(st, static_cast<int>(i));
      if (s == FaceStatus::OverLimit) {
        os << "face " << i << ": some layer holds more than 3 assigned vertices";
        flush();
      }
      if (s == FaceStatus::Rich) ++rich;
      if (s == FaceStatus::Empty && st.faces[i].cycle.size() != 3) {
        os << "face " << i << ": empty face is not a triangle";
        flush();
      }
    }
    if (rich > 1) {
      os << rich << " rich faces (limit 1)";
      flush();
    }
  }

  // the tree is a BFS tree of the skeleton and layers agree with its depths
  {
    if (!st.in_skeleton(st.tree.root)) {
      bad("tree root is not a skeleton vertex");
      return rep;
    }
    const BfsTree fresh = bfs_tree(st.skel_rotation, st.skel_present, st.tree.root);
    for (int v = 0; v < base; ++v) {
      if (st.skel_present[v] != (st.tree.contains(v) ? 1 : 0)) {
        os << "vertex " << v << ": tree membership disagrees with the skeleton";
        flush();
        continue;
      }
      if (!st.skel_present[v]) continue;
      if (st.tree.depth[v] != fresh.depth[v]) {
        os << "vertex " << v << ": tree depth " << st.tree.depth[v] << " is not its skeleton distance "
           << fresh.depth[v];
        flush();
      }
      if (v != st.tree.root) {
        const int p = st.tree.parent[v];
        if (p < 0 || !st.in_skeleton(p) ||
            std::find(st.skel_rotation[v].begin(), st.skel_rotation[v].end(), p) == st.skel_rotation[v].end()) {
          os << "vertex " << v << ": parent link is not a skeleton edge";
          flush();
        } else if (st.tree.depth[p] + 1 != st.tree.depth[v]) {
          os << "vertex " << v << ": parent depth is not one less";
          flush();
        }
      }
      if (st.layer_of(v) != st.tree.depth[v]) {
        os << "vertex " << v << ": layer " << st.layer_of(v) << " differs from tree depth " << st.tree.depth[v];
        flush();
      }
    }
  }

  // per-face checks: sink, boundary layer counts, the black-edge rule below
  // the sink, and the red budgets
  for (size_t i = 0; i < st.faces.size(); ++i) {
    const FaceRecord& f = st.faces[i];
    if (f.assigned.empty()) continue;

    const auto sink = try_face_sink(st, static_cast<int>(i));
    if (!sink) {
      os << "face " << i << ": no boundary edge splits the cycle into two tree-vertical paths";
      flush();
      continue;
    }
    const int u = sink->sink;
    const int ulayer = st.layer_of(u);

    std::map<int, int> boundary_per_layer;
    for (int v : f.cycle) ++boundary_per_layer[st.layer_of(v)];
    for (auto [li, c] : boundary_per_layer)
      if (c > 2) {
        os << "face " << i << ": boundary meets layer " << li << " in " << c << " vertices (limit 2)";
        flush();
      }

    for (int v : f.cycle)
      if (v != u && st.layer_of(v) <= ulayer) {
        os << "face " << i << ": boundary vertex " << v << " not below the sink's layer";
        flush();
      }
    for (int x : f.assigned) {
      if (st.layer_of(x) <= ulayer) {
        os << "face " << i << ": assigned vertex " << x << " not below the sink's layer";
        flush();
      }
      if (st.layer_of(x) == ulayer + 1) {
        const EdgeColor c = h.edge(u, x);
        if (c == EdgeColor::None) {
          os << "face " << i << ": sink " << u << " misses the black edge to " << x;
          flush();
        } else if (c == EdgeColor::Red) {
          os << "face " << i << ": sink " << u << " has a red edge to " << x;
          flush();
        }
      }
    }

    // red budgets per layer slice of this face
    const std::set<int> uset(f.assigned.begin(), f.assigned.end());
    const std::set<int> cset(f.cycle.begin(), f.cycle.end());
    std::map<int, int> u_per_layer;
    for (int x : f.assigned) ++u_per_layer[st.layer_of(x)];
    auto in_u_layer = [&](int x, int li) { return uset.count(x) && st.layer_of(x) == li; };

    std::set<int> members(f.assigned.begin(), f.assigned.end());
    members.insert(f.cycle.begin(), f.cycle.end());
    for (int v : members) {
      const int li = st.layer_of(v);
      int same = 0, adjacent = 0, above = 0;
      for (int w : h.red_neighbors(v)) {
        const bool in_x_same = st.layer_of(w) == li && (uset.count(w) || cset.count(w));
        if (in_x_same) ++same;
        if (in_u_layer(w, li - 1)) {
          ++adjacent;
          ++above;
        }
        if (in_u_layer(w, li + 1)) ++adjacent;
      }
      if (same > 3) {
        os << "face " << i << ": vertex " << v << " has " << same << " red edges within its layer slice (limit 3)";
        flush();
      }
      if (adjacent > 4) {
        os << "face " << i << ": vertex " << v << " has " << adjacent
           << " red edges into adjacent assigned layers (limit 4)";
        flush();
      }
      auto below = u_per_layer.find(li + 1);
      if (below != u_per_layer.end() && below->second > 1 && above > 2) {
        os << "face " << i << ": vertex " << v << " has " << above
           << " red edges into the layer above while the layer below is crowded (limit 2)";
        flush();
      }
    }
  }

  if (h.max_red_degree() > 11) {
    os << "max red degree " << h.max_red_degree() << " exceeds 11";
    flush();
  }

  return rep;
}

std::string SplendidReport::to_string() const {
  if (violations.empty()) return "ok";
  std::ostringstream os;
  for (const std::string& v : violations) os << v << "\n";
  return os.str();
}

std::string describe(const SkeletalState& st) {
  std::ostringstream os;
  os << "vertices alive: " << st.h.alive_count() << ", skeleton: " << st.skeleton_size()
     << ", max red degree: " << st.h.max_red_degree() << "\n";
  os << "layers:";
  for (int i = 0; i <= st.max_layer(); ++i) os << " " << i << ":" << st.layer_members(i).size();
  os << "\n";
  for (size_t i = 0; i < st.faces.size(); ++i) {
    os << "face " << i << (static_cast<int>(i) == st.outer_face ? " (outer)" : "") << ": "
       << face_status_name(classify_face(st, static_cast<int>(i))) << ", boundary";
    for (int v : st.faces[i].cycle) os << " " << v;
    os << ", assigned " << st.faces[i].assigned.size() << "\n";
  }
  return os.str();
}

}  // namespace tww
