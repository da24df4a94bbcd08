#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tww/layering.hpp"
#include "tww/trigraph.hpp"

namespace tww {

enum class FaceStatus { Empty, Reduced, Rich, OverLimit };

const char* face_status_name(FaceStatus s);

// One face of the plane skeleton: boundary cycle in traced order plus the
// trigraph vertices assigned to it (sorted ids).
struct FaceRecord {
  std::vector<int> cycle;
  std::vector<int> assigned;
};

// Snapshot of the state the synthesis engine walks through: the trigraph h, a
// plane skeleton over ids below h.initial_count() with its own rotation
// system, a BFS tree of the skeleton, one layer index per alive vertex, and
// the face assignment of non-skeleton vertices.
//
// Red degree stays at most 11 in every state accepted by check_splendid; the
// checker audits that bound explicitly along with the structural rules.
struct SkeletalState {
  Trigraph h;
  std::vector<char> skel_present;
  std::vector<std::vector<int>> skel_rotation;
  BfsTree tree;
  std::vector<int> layer;              // by vertex id, -1 unknown
  std::vector<FaceRecord> faces;
  int outer_face = -1;                 // index into faces, -1 iff skeleton empty
  std::vector<std::vector<int>> parts; // by vertex id: base ids merged into it

  bool skeleton_empty() const;
  int skeleton_size() const;
  bool in_skeleton(int v) const;
  int layer_of(int v) const;
  int max_layer() const;
  std::vector<int> layer_members(int i) const;  // alive vertices, ascending
};

// Empty: no assigned vertices. Reduced: at most one assigned vertex per
// layer. Rich: at most three per layer. OverLimit: some layer exceeds three
// (never part of a valid state, reported for diagnostics).
FaceStatus classify_face(const SkeletalState& st, int face);

struct SinkResult {
  int sink = -1;
  std::pair<int, int> witness_edge{-1, -1};
};

// The sink of a face is the unique boundary vertex closest to the tree root,
// witnessed by a boundary edge whose removal leaves two tree-vertical paths
// meeting there. try_face_sink returns nullopt when no boundary edge works;
// face_sink throws instead.
std::optional<SinkResult> try_face_sink(const SkeletalState& st, int face);
SinkResult face_sink(const SkeletalState& st, int face);

struct SplendidReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Full audit of a state. Never throws on rule violations: every broken rule
// is reported as one line. Covers the skeleton structure (plane, 2-connected,
// only black edges among skeleton vertices), face records against a fresh
// trace, the assignment partition, layering validity, the per-face status
// budget, sink existence and the black-edge rule below sinks, the per-layer
// red budgets on non-empty faces, the empty-skeleton layer cap, and the
// red-degree ceiling of 11.
SplendidReport check_splendid(const SkeletalState& st);

// Human-readable dump: layer histogram, skeleton size, one line per face.
std::string describe(const SkeletalState& st);

}  // namespace tww
