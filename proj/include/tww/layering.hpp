#pragma once

#include <vector>

namespace tww {

// Rooted BFS tree over a vertex subset. parent[root] = -1; vertices outside
// the tree have depth -1.
struct BfsTree {
  int root = -1;
  std::vector<int> parent;
  std::vector<int> depth;

  bool contains(int v) const { return v >= 0 && v < static_cast<int>(depth.size()) && depth[v] >= 0; }
  int leaf_count() const;
  std::vector<int> leaves() const;
};

// Assigns every vertex a layer index; -1 marks absent vertices. Valid iff
// every edge joins vertices whose layers differ by at most one.
struct Layering {
  std::vector<int> layer;

  int of(int v) const { return v >= 0 && v < static_cast<int>(layer.size()) ? layer[v] : -1; }
  void set(int v, int value);
  int max_layer() const;
  std::vector<int> members(int value) const;
};

// Deterministic BFS: layers are processed in ascending vertex id and each
// neighbor list is scanned in ascending id, so parents are reproducible.
BfsTree bfs_tree(const std::vector<std::vector<int>>& adj, const std::vector<char>& present, int root);
BfsTree bfs_tree(const std::vector<std::vector<int>>& adj, int root);

Layering layering_of(const BfsTree& tree);

// True iff the path is a chain of parent links walked in one direction
// (a subpath of some leaf-to-root path). Empty and single-vertex paths count.
bool is_vertical(const BfsTree& tree, const std::vector<int>& path);

}  // namespace tww
