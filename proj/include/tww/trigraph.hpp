#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tww/sequence.hpp"

namespace tww {

enum class EdgeColor { None, Black, Red };

// Simple graph whose edges are partitioned into black and red.
// Vertex ids are dense: 0..initial_count-1 at construction, fresh ids appended
// by contraction. Dead vertices keep their slot but drop out of all queries.
class Trigraph {
 public:
  Trigraph() = default;
  static Trigraph from_edges(int n, const std::vector<std::pair<int, int>>& black_edges);

  int initial_count() const { return initial_count_; }
  int contractions_done() const { return contractions_; }
  // One past the largest id ever allocated.
  int id_bound() const { return static_cast<int>(alive_.size()); }

  bool alive(int v) const { return v >= 0 && v < id_bound() && alive_[v]; }
  int alive_count() const { return alive_count_; }
  std::vector<int> vertices() const;  // sorted alive ids

  void add_black_edge(int u, int v);
  void add_red_edge(int u, int v);
  void make_red(int u, int v);  // recolor an existing black edge

  EdgeColor edge(int u, int v) const;
  const std::vector<int>& black_neighbors(int v) const;
  const std::vector<int>& red_neighbors(int v) const;
  std::vector<int> neighbors(int v) const;  // black ∪ red, sorted

  int degree(int v) const;
  int red_degree(int v) const;
  int max_red_degree() const;

  // Contracts a and b into a fresh vertex and returns (successor, fresh id).
  // Common black neighbors of a and b stay black; every other inherited
  // neighbor becomes red. Does not mutate *this.
  std::pair<Trigraph, int> contract(int a, int b) const;

  bool operator==(const Trigraph& other) const;

 private:
  void check_vertex(int v, const char* who) const;

  int initial_count_ = 0;
  int contractions_ = 0;
  int alive_count_ = 0;
  std::vector<char> alive_;
  std::vector<std::vector<int>> black_;  // sorted neighbor lists
  std::vector<std::vector<int>> red_;
};

}  // namespace tww
