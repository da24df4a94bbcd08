#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "tww/embedding.hpp"
#include "tww/skeletal.hpp"

namespace tww {

// Cut edge chosen among the skeleton's non-tree edges: the closing edge e,
// the cycle it forms with the tree, the vertical path of skeleton vertices
// strictly inside that cycle, and the faces strictly inside (as indices into
// the state's face records).
struct CutChoice {
  std::pair<int, int> e{-1, -1};
  std::vector<int> cycle;
  std::vector<int> q;  // interior path, leaf first, ending next to the cycle
  std::vector<int> interior_vertices;
  std::vector<int> interior_faces;
};

// Scans candidate edges whose cycle traps at least one tree leaf but not the
// root and returns one minimizing the number of trapped skeleton vertices,
// ties broken by the smallest endpoint pair. Verifies on every call that the
// winner traps exactly one leaf and that the trapped vertices form a single
// vertical path hanging from it; failures throw internal_error.
CutChoice choose_cut_edge(const SkeletalState& st);

struct StepResult {
  SkeletalState state;
  int branch = 0;  // 1..4
  std::vector<ContractionStep> emitted;
};

// One transition; the first matching branch fires.
//   1: empty skeleton. Contract the two smallest vertices of the deepest
//      occupied layer, or its lone vertex into the layer above it.
//   2: every face empty or reduced and the tree has at most two leaves.
//      Drop the skeleton; at most four vertices per layer from here on.
//   3: some face neither empty nor reduced. Contract the two smallest
//      assigned vertices in its deepest multiply-occupied layer.
//   4: otherwise. choose_cut_edge, delete the trapped path plus every edge
//      with both sides strictly inside the cycle, and merge the interior
//      faces into one face bounded by the cycle; no contraction emitted.
// The sum of alive vertices and skeleton vertices drops every time.
StepResult step(const SkeletalState& st);

struct RunOptions {
  bool check_each_step = false;   // audit the state after every transition
  std::ostream* trace = nullptr;  // one line per transition when set
};

struct RunStats {
  int steps = 0;
  int max_red_seen = 0;
  int branch_count[5] = {0, 0, 0, 0, 0};
};

// Drives step until a single vertex is alive. The initial state is audited
// once up front; intermediate audits are controlled by the options. Audit
// failures throw internal_error carrying the violation report.
ContractionSequence run(SkeletalState st, const RunOptions& opts = {}, RunStats* stats = nullptr);

// Starting state for a triangulation: all-black trigraph, the whole graph as
// its own skeleton, BFS tree from the root, tree depths as layers, one empty
// face record per traced face. The outer face is taken from g.outer_face if
// that face exists and touches the root, otherwise the first traced face
// touching the root.
SkeletalState initial_state(const PlaneGraph& g, int root);

// Projects a sequence onto the id prefix 0..original_count-1. A step whose
// two sides both still meet the prefix survives with renumbered ids; every
// other step is dropped.
ContractionSequence restrict_sequence(const ContractionSequence& seq, int original_count);

struct Synthesis {
  ContractionSequence seq;       // over the input graph
  bool used_pipeline = false;
  PlaneGraph gplus;              // only meaningful when used_pipeline
  ContractionSequence full_seq;  // ditto
  RunStats stats;
};

// End-to-end: inputs with at most three vertices are contracted in id order;
// anything larger is triangulated, rooted at vertex 0, run through the
// engine, and the sequence restricted back to the input vertices.
Synthesis synthesize_planar(const PlaneGraph& g, const RunOptions& opts = {});

}  // namespace tww
