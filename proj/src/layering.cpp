#include "tww/layering.hpp"

#include <algorithm>
#include <stdexcept>

namespace tww {

int BfsTree::leaf_count() const { return static_cast<int>(leaves().size()); }

std::vector<int> BfsTree::leaves() const {
  const int n = static_cast<int>(depth.size());
  std::vector<char> has_child(n, 0);
  for (int v = 0; v < n; ++v)
    if (depth[v] > 0) has_child[parent[v]] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (depth[v] >= 0 && !has_child[v] && v != root) out.push_back(v);
  // A root with no children (single-vertex tree) is not counted as a leaf.
  return out;
}

void Layering::set(int v, int value) {
  if (v < 0) throw std::invalid_argument("layering: negative vertex");
  if (v >= static_cast<int>(layer.size())) layer.resize(v + 1, -1);
  layer[v] = value;
}

int Layering::max_layer() const {
  int best = -1;
  for (int l : layer) best = std::max(best, l);
  return best;
}

std::vector<int> Layering::members(int value) const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(layer.size()); ++v)
    if (layer[v] == value) out.push_back(v);
  return out;
}

BfsTree bfs_tree(const std::vector<std::vector<int>>& adj, const std::vector<char>& present, int root) {
  const int n = static_cast<int>(adj.size());
  if (root < 0 || root >= n || !present[root]) throw std::invalid_argument("bfs_tree: bad root");

  BfsTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.depth.assign(n, -1);
  t.depth[root] = 0;

  std::vector<int> frontier{root};
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<int> next;
    for (int u : frontier) {
      std::vector<int> nbrs = adj[u];
      std::sort(nbrs.begin(), nbrs.end());
      for (int v : nbrs) {
        if (!present[v] || t.depth[v] >= 0) continue;
        t.depth[v] = t.depth[u] + 1;
        t.parent[v] = u;
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return t;
}

BfsTree bfs_tree(const std::vector<std::vector<int>>& adj, int root) {
  return bfs_tree(adj, std::vector<char>(adj.size(), 1), root);
}

Layering layering_of(const BfsTree& tree) {
  Layering l;
  l.layer = tree.depth;
  return l;
}

bool is_vertical(const BfsTree& tree, const std::vector<int>& path) {
  if (path.size() <= 1) return true;
  auto chain = [&](bool upward) {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      const int a = path[i], b = path[i + 1];
      if (!tree.contains(a) || !tree.contains(b)) return false;
      if (upward ? tree.parent[a] != b : tree.parent[b] != a) return false;
    }
    return true;
  };
  return chain(true) || chain(false);
}

}  // namespace tww
