#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "tww/layering.hpp"

using namespace tww;

namespace {

std::vector<std::vector<int>> path_adj(int n) {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i + 1 < n; ++i) {
    adj[i].push_back(i + 1);
    adj[i + 1].push_back(i);
  }
  return adj;
}

std::vector<std::vector<int>> cycle_adj(int n) {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    adj[i].push_back((i + 1) % n);
    adj[(i + 1) % n].push_back(i);
  }
  return adj;
}

}  // namespace

TEST_CASE("bfs on a path") {
  const BfsTree t = bfs_tree(path_adj(5), 0);
  CHECK(t.root == 0);
  CHECK(t.depth == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(t.parent == std::vector<int>{-1, 0, 1, 2, 3});
  CHECK(t.leaves() == std::vector<int>{4});
  CHECK(t.leaf_count() == 1);
  CHECK(t.contains(4));
  CHECK_FALSE(t.contains(5));
  CHECK_FALSE(t.contains(-1));
}

TEST_CASE("bfs on a six-cycle breaks ties toward smaller ids") {
  const BfsTree t = bfs_tree(cycle_adj(6), 0);
  CHECK(t.depth == std::vector<int>{0, 1, 2, 3, 2, 1});
  CHECK(t.parent[3] == 2);  // 2 is scanned before 4
  CHECK(t.leaves() == std::vector<int>{3, 4});
}

TEST_CASE("bfs respects the present mask") {
  std::vector<char> present(6, 1);
  present[2] = 0;
  const BfsTree t = bfs_tree(cycle_adj(6), present, 0);
  CHECK(t.depth[1] == 1);
  CHECK(t.depth[2] == -1);
  CHECK(t.depth[3] == 3);  // only reachable the long way around
  CHECK(t.parent[3] == 4);
}

TEST_CASE("bfs leaves unreachable vertices out") {
  std::vector<std::vector<int>> two_edges{{1}, {0}, {3}, {2}};
  const BfsTree t = bfs_tree(two_edges, 0);
  CHECK(t.depth == std::vector<int>{0, 1, -1, -1});
  CHECK_FALSE(t.contains(2));
  CHECK(t.leaves() == std::vector<int>{1});
}

TEST_CASE("bfs rejects bad roots") {
  CHECK_THROWS_AS(bfs_tree(path_adj(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(bfs_tree(path_adj(3), -1), std::invalid_argument);
  std::vector<char> present(3, 1);
  present[1] = 0;
  CHECK_THROWS_AS(bfs_tree(path_adj(3), present, 1), std::invalid_argument);
}

TEST_CASE("a single-vertex tree has no leaves") {
  const BfsTree t = bfs_tree(std::vector<std::vector<int>>{{}}, 0);
  CHECK(t.leaf_count() == 0);
  CHECK(t.depth == std::vector<int>{0});
}

TEST_CASE("layering accessors") {
  const BfsTree t = bfs_tree(cycle_adj(6), 0);
  Layering l = layering_of(t);
  CHECK(l.of(3) == 3);
  CHECK(l.of(99) == -1);
  CHECK(l.max_layer() == 3);
  CHECK(l.members(2) == std::vector<int>{2, 4});

  l.set(7, 2);
  CHECK(l.of(7) == 2);
  CHECK(l.of(6) == -1);
  CHECK(l.members(2) == std::vector<int>{2, 4, 7});
  CHECK_THROWS_AS(l.set(-1, 0), std::invalid_argument);
}

TEST_CASE("vertical paths walk parent links one way") {
  const BfsTree t = bfs_tree(cycle_adj(6), 0);
  CHECK(is_vertical(t, {3, 2, 1, 0}));
  CHECK(is_vertical(t, {0, 1, 2, 3}));
  CHECK(is_vertical(t, {2, 1}));
  CHECK(is_vertical(t, {4}));
  CHECK(is_vertical(t, {}));
  CHECK_FALSE(is_vertical(t, {1, 0, 5}));  // turns at the root
  CHECK_FALSE(is_vertical(t, {2, 3, 4}));  // 3-4 is not a tree edge
  CHECK_FALSE(is_vertical(t, {1, 3}));
}
