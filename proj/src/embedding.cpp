#include "tww/embedding.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tww {

namespace {

// neighbor -> position in the rotation list, per vertex
std::vector<std::vector<std::pair<int, int>>> rotation_index(const std::vector<std::vector<int>>& rot) {
  std::vector<std::vector<std::pair<int, int>>> idx(rot.size());
  for (size_t v = 0; v < rot.size(); ++v) {
    idx[v].reserve(rot[v].size());
    for (size_t i = 0; i < rot[v].size(); ++i) idx[v].push_back({rot[v][i], static_cast<int>(i)});
    std::sort(idx[v].begin(), idx[v].end());
  }
  return idx;
}

int lookup(const std::vector<std::pair<int, int>>& idx, int neighbor) {
  auto it = std::lower_bound(idx.begin(), idx.end(), std::pair<int, int>{neighbor, -1});
  if (it == idx.end() || it->first != neighbor) return -1;
  return it->second;
}

}  // namespace

void PlaneGraph::rebuild_edges() {
  edges.clear();
  for (int u = 0; u < n; ++u)
    for (int v : rotation[u])
      if (u < v) edges.push_back({u, v});
  std::sort(edges.begin(), edges.end());
}

std::vector<std::pair<int, int>> FaceWalk::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(walk.size());
  for (size_t i = 0; i < walk.size(); ++i) out.push_back({walk[i], walk[(i + 1) % walk.size()]});
  return out;
}

bool FaceWalk::simple() const {
  std::vector<int> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

int FaceSet::arc_face(int u, int v, const std::vector<std::vector<int>>& rotation) const {
  for (size_t i = 0; i < rotation[u].size(); ++i)
    if (rotation[u][i] == v) return face_of_arc[u][i];
  return -1;
}

void validate_rotation(const std::vector<std::vector<int>>& rotation, const std::vector<char>& present) {
  const int n = static_cast<int>(rotation.size());
  auto idx = rotation_index(rotation);
  for (int u = 0; u < n; ++u) {
    if (!present[u]) {
      if (!rotation[u].empty()) throw std::invalid_argument("rotation: absent vertex has neighbors");
      continue;
    }
    for (size_t i = 0; i + 1 < idx[u].size(); ++i)
      if (idx[u][i].first == idx[u][i + 1].first) throw std::invalid_argument("rotation: duplicate neighbor");
    for (int v : rotation[u]) {
      if (v < 0 || v >= n || !present[v]) throw std::invalid_argument("rotation: neighbor out of range");
      if (v == u) throw std::invalid_argument("rotation: self loop");
      if (lookup(idx[v], u) < 0) throw std::invalid_argument("rotation: missing back reference");
    }
  }
}

FaceSet trace_faces(const std::vector<std::vector<int>>& rotation, const std::vector<char>& present) {
  const int n = static_cast<int>(rotation.size());
  auto idx = rotation_index(rotation);

  FaceSet fs;
  fs.face_of_arc.resize(n);
  for (int v = 0; v < n; ++v) fs.face_of_arc[v].assign(rotation[v].size(), -1);

  for (int u = 0; u < n; ++u) {
    if (!present[u]) continue;
    for (size_t i0 = 0; i0 < rotation[u].size(); ++i0) {
      if (fs.face_of_arc[u][i0] >= 0) continue;
      const int id = static_cast<int>(fs.faces.size());
      FaceWalk face;
      int a = u, ai = static_cast<int>(i0);
      do {
        fs.face_of_arc[a][ai] = id;
        face.walk.push_back(a);
        const int b = rotation[a][ai];
        // successor of a in the rotation at b
        const int pos = lookup(idx[b], a);
        if (pos < 0) throw std::invalid_argument("trace_faces: inconsistent rotation");
        const int next_i = (pos + 1) % static_cast<int>(rotation[b].size());
        a = b;
        ai = next_i;
      } while (fs.face_of_arc[a][ai] < 0);
      fs.faces.push_back(std::move(face));
    }
  }
  return fs;
}

FaceSet trace_faces(const PlaneGraph& g) {
  return trace_faces(g.rotation, std::vector<char>(g.n, 1));
}

int component_count(const std::vector<std::vector<int>>& adj, const std::vector<char>& present) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (!present[s] || seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (present[v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return comps;
}

bool euler_ok(const std::vector<std::vector<int>>& rotation, const std::vector<char>& present) {
  validate_rotation(rotation, present);
  const int n = static_cast<int>(rotation.size());
  int vcount = 0;
  long long arc_total = 0;
  for (int v = 0; v < n; ++v)
    if (present[v]) {
      ++vcount;
      arc_total += static_cast<long long>(rotation[v].size());
    }
  const long long ecount = arc_total / 2;
  const FaceSet fs = trace_faces(rotation, present);

  // Tracing gives each component with edges two for the Euler sum and each
  // isolated vertex one.
  std::vector<char> seen(n, 0);
  long long expected = 0;
  for (int s = 0; s < n; ++s) {
    if (!present[s] || seen[s]) continue;
    bool has_edge = false;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (!rotation[u].empty()) has_edge = true;
      for (int v : rotation[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    expected += has_edge ? 2 : 1;
  }
  return vcount - ecount + static_cast<long long>(fs.faces.size()) == expected;
}

bool euler_ok(const PlaneGraph& g) {
  return euler_ok(g.rotation, std::vector<char>(g.n, 1));
}

CycleSides cycle_sides(const std::vector<std::vector<int>>& rotation, const std::vector<char>& present,
                       const FaceSet& fs, const std::vector<int>& cycle, int outer_face) {
  const int n = static_cast<int>(rotation.size());
  const int f = static_cast<int>(fs.faces.size());
  if (outer_face < 0 || outer_face >= f) throw std::invalid_argument("cycle_sides: bad outer face");

  auto key = [n](int u, int v) { return static_cast<long long>(std::min(u, v)) * n + std::max(u, v); };
  std::vector<long long> blocked;
  blocked.reserve(cycle.size());
  for (size_t i = 0; i < cycle.size(); ++i) blocked.push_back(key(cycle[i], cycle[(i + 1) % cycle.size()]));
  std::sort(blocked.begin(), blocked.end());
  auto is_blocked = [&](int u, int v) { return std::binary_search(blocked.begin(), blocked.end(), key(u, v)); };

  CycleSides out;
  out.face_interior.assign(f, 1);
  std::vector<int> stack{outer_face};
  out.face_interior[outer_face] = 0;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (auto [u, v] : fs.faces[cur].arcs()) {
      if (is_blocked(u, v)) continue;
      const int other = fs.arc_face(v, u, rotation);  // face on the opposite side
      if (other >= 0 && out.face_interior[other]) {
        out.face_interior[other] = 0;
        stack.push_back(other);
      }
    }
  }

  for (int i = 0; i < f; ++i)
    if (out.face_interior[i]) out.interior_faces.push_back(i);

  std::vector<char> on_cycle(n, 0);
  for (int v : cycle) on_cycle[v] = 1;
  for (int v = 0; v < n; ++v) {
    if (!present[v] || on_cycle[v] || rotation[v].empty()) continue;
    bool all_inside = true;
    for (size_t i = 0; i < rotation[v].size() && all_inside; ++i)
      all_inside = out.face_interior[fs.face_of_arc[v][i]];
    if (all_inside) out.interior_vertices.push_back(v);
  }
  return out;
}

CycleSides cycle_sides(const PlaneGraph& g, const std::vector<int>& cycle, int outer_face) {
  const std::vector<char> present(g.n, 1);
  return cycle_sides(g.rotation, present, trace_faces(g), cycle, outer_face);
}

PlaneGraph star_augment(const PlaneGraph& g) {
  const std::vector<char> present(g.n, 1);
  validate_rotation(g.rotation, present);
  const FaceSet fs = trace_faces(g);

  PlaneGraph out;
  out.n = g.n + static_cast<int>(fs.faces.size());
  out.rotation = g.rotation;
  out.rotation.resize(out.n);

  for (size_t f = 0; f < fs.faces.size(); ++f) {
    const int hub = g.n + static_cast<int>(f);
    const std::vector<int>& walk = fs.faces[f].walk;
    const int len = static_cast<int>(walk.size());

    std::vector<char> seen(g.n, 0);
    std::vector<int> landing;  // first occurrence order
    for (int i = 0; i < len; ++i) {
      const int v = walk[i];
      if (seen[v]) continue;
      seen[v] = 1;
      landing.push_back(v);
      // Insert the hub into v's rotation at this corner of the face, i.e.
      // directly after the walk predecessor of v.
      const int pred = walk[(i + len - 1) % len];
      auto& rv = out.rotation[v];
      auto it = std::find(rv.begin(), rv.end(), pred);
      if (it == rv.end()) throw std::logic_error("star_augment: predecessor missing");
      rv.insert(it + 1, hub);
    }
    // Around the hub, landings appear in reverse walk order.
    std::reverse(landing.begin(), landing.end());
    out.rotation[hub] = std::move(landing);
  }

  out.rebuild_edges();
  out.outer_face.reset();
  return out;
}

bool all_faces_triangles(const PlaneGraph& g) {
  for (const FaceWalk& f : trace_faces(g).faces)
    if (f.length() != 3 || !f.simple()) return false;
  return true;
}

std::vector<int> articulation_points(const std::vector<std::vector<int>>& adj, const std::vector<char>& present) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_cut(n, 0);
  int timer = 0;

  // iterative lowpoint DFS
  for (int s = 0; s < n; ++s) {
    if (!present[s] || disc[s] >= 0) continue;
    std::vector<std::pair<int, size_t>> stack{{s, 0}};
    disc[s] = low[s] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < adj[u].size()) {
        const int v = adj[u][i++];
        if (!present[v]) continue;
        if (disc[v] < 0) {
          parent[v] = u;
          disc[v] = low[v] = timer++;
          if (u == s) ++root_children;
          stack.push_back({v, 0});
        } else if (v != parent[u]) {
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          const int p = stack.back().first;
          low[p] = std::min(low[p], low[u]);
          if (p != s && low[u] >= disc[p]) is_cut[p] = 1;
        }
      }
    }
    if (root_children >= 2) is_cut[s] = 1;
  }

  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

bool is_two_connected(const std::vector<std::vector<int>>& adj, const std::vector<char>& present) {
  int vcount = 0;
  for (char p : present) vcount += p;
  if (vcount < 3) return false;
  if (component_count(adj, present) != 1) return false;
  return articulation_points(adj, present).empty();
}

bool is_two_connected(const PlaneGraph& g) {
  return is_two_connected(g.rotation, std::vector<char>(g.n, 1));
}

TriangulationResult make_triangulation(const PlaneGraph& g) {
  if (g.n < 1) throw std::invalid_argument("make_triangulation: need at least one vertex");
  std::vector<char> present(g.n, 1);
  validate_rotation(g.rotation, present);
  if (!euler_ok(g)) throw std::invalid_argument("make_triangulation: rotation is not genus zero");

  PlaneGraph work = g;

  // Disconnected or trivial input first gets a single anchor vertex adjacent
  // to the smallest vertex of every component, drawn in the shared region.
  bool needs_anchor = component_count(work.rotation, std::vector<char>(work.n, 1)) > 1;
  for (int v = 0; v < work.n && !needs_anchor; ++v)
    if (work.rotation[v].empty()) needs_anchor = true;
  if (needs_anchor) {
    std::vector<char> seen(work.n, 0);
    std::vector<int> reps;
    for (int s = 0; s < work.n; ++s) {
      if (seen[s]) continue;
      reps.push_back(s);
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : work.rotation[u])
          if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
      }
    }
    const int anchor = work.n;
    work.n += 1;
    work.rotation.resize(work.n);
    for (int r : reps) {
      work.rotation[r].push_back(anchor);
      work.rotation[anchor].push_back(r);
    }
    work.rebuild_edges();
    if (!euler_ok(work)) throw std::logic_error("make_triangulation: anchor pass broke the embedding");
  }

  TriangulationResult result;
  for (int round = 0; round <= 3; ++round) {
    if (is_two_connected(work) && all_faces_triangles(work)) {
      result.rounds = round;
      work.rebuild_edges();
      const FaceSet fs = trace_faces(work);
      if (!work.outer_face || find_face_matching_cycle(fs, *work.outer_face) < 0)
        work.outer_face = fs.faces.front().walk;
      result.graph = std::move(work);
      return result;
    }
    if (round == 3) break;
    work = star_augment(work);
    if (!euler_ok(work)) throw std::logic_error("make_triangulation: augmentation broke the embedding");
  }
  throw std::logic_error("make_triangulation: not triangulated after three rounds");
}

bool cyclic_equal_oriented(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const size_t off = static_cast<size_t>(it - b.begin());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(off + i) % b.size()]) return false;
  return true;
}

int find_face_matching_cycle(const FaceSet& fs, const std::vector<int>& cycle) {
  auto canonical = [](std::vector<int> c) {
    if (c.empty()) return c;
    auto rotate_min = [](std::vector<int>& v) {
      auto it = std::min_element(v.begin(), v.end());
      std::rotate(v.begin(), it, v.end());
    };
    std::vector<int> fwd = c, rev = c;
    std::reverse(rev.begin(), rev.end());
    rotate_min(fwd);
    rotate_min(rev);
    return std::min(fwd, rev);
  };
  const std::vector<int> want = canonical(cycle);
  for (size_t i = 0; i < fs.faces.size(); ++i)
    if (canonical(fs.faces[i].walk) == want) return static_cast<int>(i);
  return -1;
}

}  // namespace tww
