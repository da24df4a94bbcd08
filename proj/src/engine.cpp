#include "tww/engine.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tww/errors.hpp"

namespace tww {

namespace {

// cycle of tree + {a,b}: the tree path from a to b, closed by the edge itself
std::vector<int> tree_cycle(const BfsTree& t, int a, int b) {
  std::vector<int> pa{a}, pb{b};
  int x = a, y = b;
  while (t.depth[x] > t.depth[y]) pa.push_back(x = t.parent[x]);
  while (t.depth[y] > t.depth[x]) pb.push_back(y = t.parent[y]);
  while (x != y) {
    pa.push_back(x = t.parent[x]);
    pb.push_back(y = t.parent[y]);
  }
  pb.pop_back();  // shared top vertex already in pa
  pa.insert(pa.end(), pb.rbegin(), pb.rend());
  return pa;
}

// traced face id for each stored record; throws when records and trace drift
std::vector<int> match_records(const SkeletalState& s, const FaceSet& fs) {
  if (fs.faces.size() != s.faces.size()) throw internal_error("face records out of sync with the trace");
  std::vector<int> traced(s.faces.size(), -1);
  std::vector<char> used(fs.faces.size(), 0);
  for (size_t i = 0; i < s.faces.size(); ++i) {
    const std::vector<int>& cyc = s.faces[i].cycle;
    const int t = fs.arc_face(cyc[0], cyc[1], s.skel_rotation);
    if (t < 0 || used[t] || !cyclic_equal_oriented(cyc, fs.faces[t].walk))
      throw internal_error("face record does not match the trace");
    traced[i] = t;
    used[t] = 1;
  }
  return traced;
}

// The duals of non-tree skeleton edges form a spanning tree of the face set;
// rooting it at the outer face makes "strictly inside the cycle of e" the
// subtree hanging below e's dual. Subtree sums then answer, per candidate
// edge in O(1), how many tree leaves and skeleton vertices are trapped.
struct DualIndex {
  int count = 0;
  std::vector<int> parent;  // by traced face id, root = outer
  std::vector<int> order;   // BFS order from the root
  std::vector<int> tin, tout;
  std::vector<std::vector<int>> up;
  int log = 1;

  bool anc(int a, int d) const { return tin[a] <= tin[d] && tin[d] < tout[a]; }

  int lca(int a, int b) const {
    if (anc(a, b)) return a;
    if (anc(b, a)) return b;
    for (int k = log - 1; k >= 0; --k)
      if (!anc(up[k][a], b)) a = up[k][a];
    return up[0][a];
  }

  std::vector<long long> subtree_sums(const std::vector<long long>& base) const {
    std::vector<long long> sums = base;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (*it != order.front()) sums[parent[*it]] += sums[*it];
    return sums;
  }
};

DualIndex build_dual_index(const SkeletalState& s, const FaceSet& fs, int outer_traced) {
  const int f = static_cast<int>(fs.faces.size());
  std::vector<std::vector<int>> adj(f);
  const int base = s.h.initial_count();
  for (int u = 0; u < base; ++u) {
    if (!s.skel_present[u]) continue;
    for (size_t i = 0; i < s.skel_rotation[u].size(); ++i) {
      const int v = s.skel_rotation[u][i];
      if (v < u) continue;
      if (s.tree.parent[u] == v || s.tree.parent[v] == u) continue;
      const int f1 = fs.face_of_arc[u][i];
      const int f2 = fs.arc_face(v, u, s.skel_rotation);
      adj[f1].push_back(f2);
      adj[f2].push_back(f1);
    }
  }

  DualIndex d;
  d.count = f;
  d.parent.assign(f, -1);
  d.order.reserve(f);
  std::vector<char> seen(f, 0);
  d.order.push_back(outer_traced);
  seen[outer_traced] = 1;
  for (size_t head = 0; head < d.order.size(); ++head) {
    const int cur = d.order[head];
    for (int nxt : adj[cur])
      if (!seen[nxt]) {
        seen[nxt] = 1;
        d.parent[nxt] = cur;
        d.order.push_back(nxt);
      }
  }
  if (static_cast<int>(d.order.size()) != f) throw internal_error("dual of the non-tree edges is not connected");

  // children lists, then entry/exit stamps
  std::vector<std::vector<int>> kids(f);
  for (int x : d.order)
    if (d.parent[x] >= 0) kids[d.parent[x]].push_back(x);
  d.tin.assign(f, 0);
  d.tout.assign(f, 0);
  int clock = 0;
  std::vector<std::pair<int, size_t>> stack{{outer_traced, 0}};
  d.tin[outer_traced] = clock++;
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < kids[x].size()) {
      const int c = kids[x][i++];
      d.tin[c] = clock++;
      stack.push_back({c, 0});
    } else {
      d.tout[x] = clock;
      stack.pop_back();
    }
  }

  while ((1 << d.log) < f) ++d.log;
  d.up.assign(d.log, std::vector<int>(f));
  for (int x = 0; x < f; ++x) d.up[0][x] = d.parent[x] >= 0 ? d.parent[x] : x;
  for (int k = 1; k < d.log; ++k)
    for (int x = 0; x < f; ++x) d.up[k][x] = d.up[k - 1][d.up[k - 1][x]];
  return d;
}

int contract_into(SkeletalState& s, int a, int b, int lay) {
  auto [h2, c] = s.h.contract(a, b);
  s.h = std::move(h2);
  if (static_cast<int>(s.layer.size()) < s.h.id_bound()) s.layer.resize(s.h.id_bound(), -1);
  if (static_cast<int>(s.parts.size()) < s.h.id_bound()) s.parts.resize(s.h.id_bound());
  s.layer[c] = lay;
  s.layer[a] = s.layer[b] = -1;
  std::vector<int> merged;
  std::set_union(s.parts[a].begin(), s.parts[a].end(), s.parts[b].begin(), s.parts[b].end(),
                 std::back_inserter(merged));
  s.parts[c] = std::move(merged);
  s.parts[a].clear();
  s.parts[b].clear();
  return c;
}

void apply_cut(SkeletalState& s, const CutChoice& cc) {
  const int base = s.h.initial_count();
  const FaceSet fs = trace_faces(s.skel_rotation, s.skel_present);
  const std::vector<int> traced_of = match_records(s, fs);

  std::vector<char> interior_traced(fs.faces.size(), 0);
  for (int rec : cc.interior_faces) interior_traced[traced_of[rec]] = 1;

  // an edge vanishes exactly when both of its sides are trapped; this covers
  // every edge touching the trapped path and every chord drawn inside
  std::set<std::pair<int, int>> dead;
  for (int u = 0; u < base; ++u) {
    if (!s.skel_present[u]) continue;
    for (size_t i = 0; i < s.skel_rotation[u].size(); ++i) {
      const int v = s.skel_rotation[u][i];
      if (v < u) continue;
      if (interior_traced[fs.face_of_arc[u][i]] && interior_traced[fs.arc_face(v, u, s.skel_rotation)])
        dead.insert({u, v});
    }
  }

  const std::set<int> qset(cc.q.begin(), cc.q.end());
  for (int v = 0; v < base; ++v) {
    if (!s.skel_present[v]) continue;
    if (qset.count(v)) {
      s.skel_present[v] = 0;
      s.skel_rotation[v].clear();
      s.tree.parent[v] = -1;
      s.tree.depth[v] = -1;
      continue;
    }
    auto& rot = s.skel_rotation[v];
    rot.erase(std::remove_if(rot.begin(), rot.end(),
                             [&](int w) {
                               return qset.count(w) ||
                                      dead.count({std::min(v, w), std::max(v, w)}) > 0;
                             }),
              rot.end());
  }

  if (!euler_ok(s.skel_rotation, s.skel_present)) throw internal_error("cut surgery broke the embedding");

  // rebuild the face records: every untouched face reappears with the same
  // boundary, and exactly one new face bounded by the cut cycle absorbs the
  // trapped faces' assignments plus the trapped path
  const FaceSet fs2 = trace_faces(s.skel_rotation, s.skel_present);
  if (fs2.faces.size() + cc.interior_faces.size() != fs.faces.size() + 1)
    throw internal_error("cut surgery produced an unexpected face count");

  std::vector<FaceRecord> rebuilt(fs2.faces.size());
  std::vector<char> claimed(fs2.faces.size(), 0);
  int new_outer = -1;
  for (size_t i = 0; i < s.faces.size(); ++i) {
    if (interior_traced[traced_of[i]]) continue;
    const std::vector<int>& cyc = s.faces[i].cycle;
    const int t = fs2.arc_face(cyc[0], cyc[1], s.skel_rotation);
    if (t < 0 || claimed[t] || !cyclic_equal_oriented(cyc, fs2.faces[t].walk))
      throw internal_error("a face outside the cut cycle changed shape");
    rebuilt[t] = FaceRecord{fs2.faces[t].walk, s.faces[i].assigned};
    claimed[t] = 1;
    if (static_cast<int>(i) == s.outer_face) new_outer = t;
  }
  if (new_outer < 0) throw internal_error("outer face trapped inside the cut cycle");

  int merged = -1;
  for (size_t t = 0; t < claimed.size(); ++t)
    if (!claimed[t]) {
      if (merged >= 0) throw internal_error("more than one new face after the cut");
      merged = static_cast<int>(t);
    }
  if (merged < 0) throw internal_error("no new face after the cut");
  {
    std::vector<int> reflected(fs2.faces[merged].walk.rbegin(), fs2.faces[merged].walk.rend());
    if (!cyclic_equal_oriented(fs2.faces[merged].walk, cc.cycle) &&
        !cyclic_equal_oriented(reflected, cc.cycle))
      throw internal_error("the new face is not bounded by the cut cycle");
  }

  std::vector<int> assigned(cc.q.begin(), cc.q.end());
  for (int rec : cc.interior_faces)
    assigned.insert(assigned.end(), s.faces[rec].assigned.begin(), s.faces[rec].assigned.end());
  std::sort(assigned.begin(), assigned.end());
  rebuilt[merged] = FaceRecord{fs2.faces[merged].walk, std::move(assigned)};

  s.faces = std::move(rebuilt);
  s.outer_face = new_outer;
}

}  // namespace

CutChoice choose_cut_edge(const SkeletalState& st) {
  if (st.skeleton_empty()) throw std::invalid_argument("choose_cut_edge: empty skeleton");
  if (st.outer_face < 0) throw std::invalid_argument("choose_cut_edge: no outer face");
  {
    const std::vector<int>& oc = st.faces[st.outer_face].cycle;
    if (std::find(oc.begin(), oc.end(), st.tree.root) == oc.end())
      throw std::invalid_argument("choose_cut_edge: root not on the outer face");
  }

  const FaceSet fs = trace_faces(st.skel_rotation, st.skel_present);
  const std::vector<int> traced_of = match_records(st, fs);
  const int outer_traced = traced_of[st.outer_face];
  const DualIndex dual = build_dual_index(st, fs, outer_traced);

  const int base = st.h.initial_count();

  // deepest dual-tree node whose subtree holds every face around v; v lies
  // strictly inside the cycle of e exactly when that node sits below e's dual
  std::vector<int> anchor(base, -1);
  for (int v = 0; v < base; ++v) {
    if (!st.skel_present[v]) continue;
    int a = -1;
    for (size_t i = 0; i < st.skel_rotation[v].size(); ++i) {
      const int f = fs.face_of_arc[v][i];
      a = a < 0 ? f : dual.lca(a, f);
    }
    anchor[v] = a;
  }

  std::vector<long long> leaf_base(fs.faces.size(), 0), vert_base(fs.faces.size(), 0);
  for (int v = 0; v < base; ++v)
    if (st.skel_present[v]) ++vert_base[anchor[v]];
  for (int leaf : st.tree.leaves()) ++leaf_base[anchor[leaf]];
  const std::vector<long long> leaf_in = dual.subtree_sums(leaf_base);
  const std::vector<long long> vert_in = dual.subtree_sums(vert_base);
  const int root_anchor = anchor[st.tree.root];

  long long best_verts = -1;
  std::pair<int, int> best_edge{-1, -1};
  for (int u = 0; u < base; ++u) {
    if (!st.skel_present[u]) continue;
    for (size_t i = 0; i < st.skel_rotation[u].size(); ++i) {
      const int v = st.skel_rotation[u][i];
      if (v < u) continue;
      if (st.tree.parent[u] == v || st.tree.parent[v] == u) continue;
      const int f1 = fs.face_of_arc[u][i];
      const int f2 = fs.arc_face(v, u, st.skel_rotation);
      int child;
      if (dual.parent[f1] == f2) child = f1;
      else if (dual.parent[f2] == f1) child = f2;
      else throw internal_error("non-tree edge whose dual is not a dual-tree link");
      if (leaf_in[child] < 1) continue;
      if (dual.anc(child, root_anchor)) continue;  // root trapped
      const long long verts = vert_in[child];
      const std::pair<int, int> edge{u, v};
      if (best_verts < 0 || verts < best_verts || (verts == best_verts && edge < best_edge)) {
        best_verts = verts;
        best_edge = edge;
      }
    }
  }
  if (best_verts < 0) throw std::invalid_argument("choose_cut_edge: no candidate edge");

  CutChoice cc;
  cc.e = best_edge;
  cc.cycle = tree_cycle(st.tree, best_edge.first, best_edge.second);

  // independent check of the winner via explicit dual reachability
  const CycleSides sides =
      cycle_sides(st.skel_rotation, st.skel_present, fs, cc.cycle, outer_traced);
  cc.interior_vertices = sides.interior_vertices;
  {
    std::vector<int> rec_of_traced(fs.faces.size(), -1);
    for (size_t i = 0; i < traced_of.size(); ++i) rec_of_traced[traced_of[i]] = static_cast<int>(i);
    for (int t : sides.interior_faces) cc.interior_faces.push_back(rec_of_traced[t]);
    std::sort(cc.interior_faces.begin(), cc.interior_faces.end());
  }

  if (static_cast<long long>(cc.interior_vertices.size()) != best_verts)
    throw internal_error("trapped vertex count disagrees with the dual-tree tally");
  std::vector<int> trapped_leaves;
  for (int leaf : st.tree.leaves())
    if (std::binary_search(cc.interior_vertices.begin(), cc.interior_vertices.end(), leaf))
      trapped_leaves.push_back(leaf);
  if (trapped_leaves.size() != 1) throw internal_error("cut cycle must trap exactly one tree leaf");
  if (std::binary_search(cc.interior_vertices.begin(), cc.interior_vertices.end(), st.tree.root))
    throw internal_error("cut cycle must not trap the root");

  // the trapped vertices must be exactly the vertical path up from the leaf
  const std::set<int> interior(cc.interior_vertices.begin(), cc.interior_vertices.end());
  int walk = trapped_leaves[0];
  while (walk >= 0 && interior.count(walk)) {
    cc.q.push_back(walk);
    walk = st.tree.parent[walk];
  }
  if (cc.q.size() != interior.size()) throw internal_error("trapped vertices do not form one vertical path");
  if (cc.interior_faces.empty()) throw internal_error("cut cycle traps a vertex but no face");

  return cc;
}

SkeletalState initial_state(const PlaneGraph& g, int root) {
  if (root < 0 || root >= g.n) throw std::invalid_argument("initial_state: root out of range");
  const std::vector<char> present(g.n, 1);
  validate_rotation(g.rotation, present);
  if (!euler_ok(g)) throw std::invalid_argument("initial_state: embedding fails the Euler check");

  SkeletalState st;
  st.h = Trigraph::from_edges(g.n, g.edges);
  st.skel_present.assign(g.n, 1);
  st.skel_rotation = g.rotation;
  st.tree = bfs_tree(g.rotation, root);
  for (int v = 0; v < g.n; ++v)
    if (!st.tree.contains(v)) throw std::invalid_argument("initial_state: graph is not connected");
  st.layer = st.tree.depth;
  st.parts.resize(g.n);
  for (int v = 0; v < g.n; ++v) st.parts[v] = {v};

  const FaceSet fs = trace_faces(g);
  st.faces.reserve(fs.faces.size());
  for (const FaceWalk& f : fs.faces) st.faces.push_back(FaceRecord{f.walk, {}});

  if (g.outer_face) {
    const int t = find_face_matching_cycle(fs, *g.outer_face);
    if (t >= 0 &&
        std::find(fs.faces[t].walk.begin(), fs.faces[t].walk.end(), root) != fs.faces[t].walk.end())
      st.outer_face = t;
  }
  if (st.outer_face < 0) {
    for (size_t t = 0; t < fs.faces.size() && st.outer_face < 0; ++t)
      if (std::find(fs.faces[t].walk.begin(), fs.faces[t].walk.end(), root) != fs.faces[t].walk.end())
        st.outer_face = static_cast<int>(t);
  }
  if (st.outer_face < 0) throw std::invalid_argument("initial_state: root touches no face");
  return st;
}

StepResult step(const SkeletalState& st) {
  StepResult out;
  out.state = st;
  SkeletalState& s = out.state;

  if (s.h.alive_count() <= 1 && s.skeleton_empty())
    throw std::invalid_argument("step: nothing left to do");

  if (s.skeleton_empty()) {
    out.branch = 1;
    const int top = s.max_layer();
    const std::vector<int> members = s.layer_members(top);
    int a, b, lay;
    if (members.size() >= 2) {
      a = members[0];
      b = members[1];
      lay = top;
    } else {
      if (top == 0) throw internal_error("lone vertex in the first layer with others alive");
      const std::vector<int> above = s.layer_members(top - 1);
      if (above.empty()) throw internal_error("occupied layer above an empty one");
      a = std::min(above[0], members[0]);
      b = std::max(above[0], members[0]);
      lay = top - 1;
    }
    const int c = contract_into(s, a, b, lay);
    out.emitted.push_back({a, b, c});
    return out;
  }

  int rich = -1;
  for (size_t i = 0; i < s.faces.size(); ++i) {
    const FaceStatus fserr = classify_face(s, static_cast<int>(i));
    if (fserr == FaceStatus::OverLimit)
      throw internal_error("face " + std::to_string(i) + " exceeds the per-layer limit");
    if (fserr == FaceStatus::Rich) {
      if (rich >= 0) throw internal_error("two faces are neither empty nor reduced");
      rich = static_cast<int>(i);
    }
  }

  if (rich >= 0) {
    out.branch = 3;
    FaceRecord& face = s.faces[rich];
    std::map<int, std::vector<int>> per_layer;
    for (int v : face.assigned) per_layer[s.layer_of(v)].push_back(v);
    int lay = -1;
    for (const auto& [li, vs] : per_layer)
      if (vs.size() > 1) lay = std::max(lay, li);
    if (lay < 0) throw internal_error("face classified rich without a crowded layer");
    const int a = per_layer[lay][0];
    const int b = per_layer[lay][1];
    const int c = contract_into(s, a, b, lay);
    auto& asg = face.assigned;
    asg.erase(std::remove_if(asg.begin(), asg.end(), [&](int v) { return v == a || v == b; }), asg.end());
    asg.insert(std::lower_bound(asg.begin(), asg.end(), c), c);
    out.emitted.push_back({a, b, c});
    return out;
  }

  if (s.tree.leaf_count() <= 2) {
    out.branch = 2;
    s.skel_present.assign(s.skel_present.size(), 0);
    for (auto& rot : s.skel_rotation) rot.clear();
    s.faces.clear();
    s.outer_face = -1;
    s.tree = BfsTree{};
    for (int i = 0; i <= s.max_layer(); ++i) {
      const int c = static_cast<int>(s.layer_members(i).size());
      if (c > 4)
        throw internal_error("layer " + std::to_string(i) + " holds " + std::to_string(c) +
                             " vertices after dropping the skeleton");
    }
    return out;
  }

  out.branch = 4;
  const CutChoice cc = choose_cut_edge(s);
  apply_cut(s, cc);
  return out;
}

ContractionSequence run(SkeletalState st, const RunOptions& opts, RunStats* stats) {
  auto audit = [](const SkeletalState& s, const char* when) {
    const SplendidReport rep = check_splendid(s);
    if (!rep.ok())
      throw internal_error(std::string("state audit failed ") + when + ":\n" + rep.to_string() + describe(s));
  };
  audit(st, "at the start");

  ContractionSequence seq;
  seq.initial_count = st.h.initial_count();
  RunStats local;
  RunStats& rs = stats ? *stats : local;
  rs = RunStats{};
  rs.max_red_seen = st.h.max_red_degree();

  while (st.h.alive_count() > 1 || !st.skeleton_empty()) {
    const int before = st.h.alive_count() + st.skeleton_size();
    StepResult r = step(st);
    st = std::move(r.state);
    if (st.h.alive_count() + st.skeleton_size() >= before) throw internal_error("step made no progress");

    seq.steps.insert(seq.steps.end(), r.emitted.begin(), r.emitted.end());
    ++rs.steps;
    ++rs.branch_count[r.branch];
    rs.max_red_seen = std::max(rs.max_red_seen, st.h.max_red_degree());

    if (opts.trace) {
      int empty = 0, reduced = 0, richc = 0;
      for (size_t i = 0; i < st.faces.size(); ++i) {
        switch (classify_face(st, static_cast<int>(i))) {
          case FaceStatus::Empty: ++empty; break;
          case FaceStatus::Reduced: ++reduced; break;
          default: ++richc; break;
        }
      }
      *opts.trace << "step " << rs.steps << ": branch " << r.branch << ", alive " << st.h.alive_count()
                  << ", skeleton " << st.skeleton_size() << ", max red " << st.h.max_red_degree()
                  << ", faces " << empty << "/" << reduced << "/" << richc;
      for (const ContractionStep& e : r.emitted)
        *opts.trace << ", contract " << e.a << "+" << e.b << " -> " << e.result;
      *opts.trace << "\n";
    }
    if (opts.check_each_step) audit(st, "after a step");
  }

  if (!seq.full()) throw internal_error("run ended without a full sequence");
  return seq;
}

ContractionSequence restrict_sequence(const ContractionSequence& seq, int original_count) {
  if (original_count < 0 || original_count > seq.initial_count)
    throw std::invalid_argument("restrict_sequence: bad original count");

  std::vector<int> proj(seq.initial_count + seq.steps.size(), -1);
  for (int v = 0; v < original_count; ++v) proj[v] = v;

  ContractionSequence out;
  out.initial_count = original_count;
  int next = original_count;
  int expected = seq.initial_count;
  for (const ContractionStep& stp : seq.steps) {
    if (stp.a < 0 || stp.b < 0 || stp.a >= expected || stp.b >= expected || stp.result != expected)
      throw std::invalid_argument("restrict_sequence: malformed step ids");
    ++expected;
    const int pa = proj[stp.a];
    const int pb = proj[stp.b];
    if (pa >= 0 && pb >= 0) {
      out.steps.push_back({pa, pb, next});
      proj[stp.result] = next++;
    } else {
      proj[stp.result] = std::max(pa, pb);
    }
  }
  return out;
}

Synthesis synthesize_planar(const PlaneGraph& g, const RunOptions& opts) {
  if (g.n < 1) throw std::invalid_argument("synthesize_planar: empty graph");
  validate_rotation(g.rotation, std::vector<char>(g.n, 1));
  if (!euler_ok(g)) throw std::invalid_argument("synthesize_planar: embedding fails the Euler check");

  Synthesis out;
  if (g.n <= 3) {
    out.seq.initial_count = g.n;
    if (g.n >= 2) out.seq.steps.push_back({0, 1, g.n});
    if (g.n == 3) out.seq.steps.push_back({2, g.n, g.n + 1});
    return out;
  }

  out.used_pipeline = true;
  out.gplus = make_triangulation(g).graph;
  SkeletalState st = initial_state(out.gplus, 0);
  out.full_seq = run(std::move(st), opts, &out.stats);
  out.seq = restrict_sequence(out.full_seq, g.n);
  return out;
}

}  // namespace tww
