#include "tww/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tww {

namespace {

void insert_after(std::vector<int>& rot, int after, int value) {
  auto it = std::find(rot.begin(), rot.end(), after);
  if (it == rot.end()) throw std::logic_error("generator: rotation entry missing");
  rot.insert(it + 1, value);
}

}  // namespace

PlaneGraph gen_stacked_triangulation(int n, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_stacked_triangulation: need at least 3 vertices");
  SplitMix64 rng(seed);

  PlaneGraph g;
  g.n = n;
  g.rotation.assign(n, {});
  g.rotation[0] = {1, 2};
  g.rotation[1] = {2, 0};
  g.rotation[2] = {0, 1};
  g.outer_face = std::vector<int>{0, 2, 1};

  // inner faces as corner triples (a,b,c) in walk order
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  for (int k = 3; k < n; ++k) {
    const size_t pick = static_cast<size_t>(rng.below(faces.size()));
    const auto [a, b, c] = faces[pick];
    // same corner rule as star augmentation: k enters each corner's rotation
    // right after that corner's predecessor on the face walk
    insert_after(g.rotation[a], c, k);
    insert_after(g.rotation[b], a, k);
    insert_after(g.rotation[c], b, k);
    g.rotation[k] = {a, c, b};
    faces[pick] = {a, b, k};
    faces.push_back({b, c, k});
    faces.push_back({c, a, k});
  }
  g.rebuild_edges();
  return g;
}

PlaneGraph gen_grid(int w, int h) {
  if (w < 1 || h < 1 || static_cast<long long>(w) * h < 2)
    throw std::invalid_argument("gen_grid: need at least two vertices");

  PlaneGraph g;
  g.n = w * h;
  g.rotation.assign(g.n, {});
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      auto& rot = g.rotation[r * w + c];
      if (r > 0) rot.push_back((r - 1) * w + c);
      if (c + 1 < w) rot.push_back(r * w + c + 1);
      if (r + 1 < h) rot.push_back((r + 1) * w + c);
      if (c > 0) rot.push_back(r * w + c - 1);
    }
  g.rebuild_edges();

  // the boundary is the longest walk; corner 0 lies on it
  const FaceSet fs = trace_faces(g);
  size_t best = 0;
  for (size_t i = 1; i < fs.faces.size(); ++i)
    if (fs.faces[i].length() > fs.faces[best].length()) best = i;
  g.outer_face = fs.faces[best].walk;
  return g;
}

PlaneGraph gen_wheel(int n) {
  if (n < 4) throw std::invalid_argument("gen_wheel: need at least 4 vertices");
  const int rim = n - 1;

  PlaneGraph g;
  g.n = n;
  g.rotation.assign(n, {});
  for (int i = rim; i >= 1; --i) g.rotation[0].push_back(i);
  for (int i = 1; i <= rim; ++i) {
    const int prev = i == 1 ? rim : i - 1;
    const int next = i == rim ? 1 : i + 1;
    g.rotation[i] = {prev, 0, next};
  }
  g.rebuild_edges();

  // the rim bounds the one face that misses the hub
  const FaceSet fs = trace_faces(g);
  for (const FaceWalk& f : fs.faces)
    if (std::find(f.walk.begin(), f.walk.end(), 0) == f.walk.end()) {
      g.outer_face = f.walk;
      break;
    }
  return g;
}

PlaneGraph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: need at least 3 vertices");
  PlaneGraph g;
  g.n = n;
  g.rotation.assign(n, {});
  for (int i = 0; i < n; ++i) g.rotation[i] = {(i + n - 1) % n, (i + 1) % n};
  g.rebuild_edges();
  g.outer_face = trace_faces(g).faces.front().walk;
  return g;
}

PlaneGraph gen_random_planar(int n, double p, uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_random_planar: p outside [0,1]");
  PlaneGraph g = gen_stacked_triangulation(n, seed);
  SplitMix64 rng(seed ^ 0x5bd1e995bd1e995ULL);

  const std::vector<std::pair<int, int>> candidates = g.edges;
  const std::vector<char> present(g.n, 1);
  for (auto [u, v] : candidates) {
    if (rng.unit() >= p) continue;
    auto& ru = g.rotation[u];
    auto& rv = g.rotation[v];
    const size_t pu = std::find(ru.begin(), ru.end(), v) - ru.begin();
    const size_t pv = std::find(rv.begin(), rv.end(), u) - rv.begin();
    ru.erase(ru.begin() + pu);
    rv.erase(rv.begin() + pv);
    if (component_count(g.rotation, present) > 1) {
      // deletion would disconnect; put the edge back where it was
      ru.insert(ru.begin() + pu, v);
      rv.insert(rv.begin() + pv, u);
    }
  }
  g.rebuild_edges();
  g.outer_face.reset();
  return g;
}

}  // namespace tww
