#pragma once

#include <utility>
#include <vector>

#include "tww/sequence.hpp"

namespace tww {

// Adjacency-matrix trigraph used for replaying contraction sequences. This is
// a second, deliberately separate implementation of the contraction rule: it
// evaluates the defining set formulas verbatim instead of merging neighbor
// lists, so agreement with Trigraph is evidence rather than tautology.
class MatrixTrigraph {
 public:
  MatrixTrigraph(int n, const std::vector<std::pair<int, int>>& black_edges,
                 const std::vector<std::pair<int, int>>& red_edges = {});

  int initial_count() const { return initial_; }
  int slot_bound() const { return slots_; }
  int alive_count() const { return alive_count_; }
  bool alive(int v) const { return v >= 0 && v < slots_ && alive_[v]; }

  // 0 none, 1 black, 2 red
  char color(int u, int v) const;
  std::vector<std::pair<int, int>> red_edge_list() const;  // u < v, both alive
  int red_degree(int v) const;
  int max_red_degree() const;

  // Applies one contraction in place and returns the fresh id
  // (initial count plus contractions done so far).
  int contract(int a, int b);

 private:
  int initial_ = 0;
  int slots_ = 0;
  int next_ = 0;
  int alive_count_ = 0;
  std::vector<char> alive_;
  std::vector<char> cell_;  // slots_ x slots_
  std::vector<int> red_deg_;

  char& at(int u, int v) { return cell_[static_cast<size_t>(u) * slots_ + v]; }
  char get(int u, int v) const { return cell_[static_cast<size_t>(u) * slots_ + v]; }
};

struct ReplayOptions {
  bool require_full = true;  // reject sequences that stop before one vertex
};

struct ReplayResult {
  int width = 0;              // max red degree over the initial and every state
  std::vector<int> red_after; // max red degree after each step
};

// Replays seq on the plain graph (n, edges) and reports the width. Throws
// std::invalid_argument on dangling or dead vertex references, fresh-id
// mismatches, a count mismatch between graph and sequence, or a sequence that
// is not full when options demand one.
ReplayResult replay(int n, const std::vector<std::pair<int, int>>& edges,
                    const ContractionSequence& seq, const ReplayOptions& opts = {});

}  // namespace tww
