#include "tww/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace tww {

namespace {

// trigraph on k re-indexed vertices; cell values 0 none, 1 black, 2 red
struct Compact {
  int k = 0;
  std::vector<uint8_t> cell;  // k * k

  uint8_t at(int i, int j) const { return cell[static_cast<size_t>(i) * k + j]; }
  void set(int i, int j, uint8_t c) {
    cell[static_cast<size_t>(i) * k + j] = c;
    cell[static_cast<size_t>(j) * k + i] = c;
  }

  int red_degree(int i) const {
    int d = 0;
    for (int j = 0; j < k; ++j) d += at(i, j) == 2;
    return d;
  }

  int max_red_degree() const {
    int best = 0;
    for (int i = 0; i < k; ++i) best = std::max(best, red_degree(i));
    return best;
  }

  // contract re-indexed vertices i and j; the merge lands on index i and the
  // last vertex slides into j's slot
  Compact contracted(int i, int j) const {
    Compact g = *this;
    for (int v = 0; v < k; ++v) {
      if (v == i || v == j) continue;
      const uint8_t a = at(i, v), b = at(j, v);
      g.set(i, v, (a == 0 && b == 0) ? 0 : (a == 1 && b == 1) ? 1 : 2);
    }

    Compact out;
    out.k = k - 1;
    out.cell.assign(static_cast<size_t>(out.k) * out.k, 0);
    auto old_index = [&](int r) { return r == j ? k - 1 : r; };
    for (int r = 0; r < out.k; ++r)
      for (int c = 0; c < out.k; ++c)
        if (r != c) out.cell[static_cast<size_t>(r) * out.k + c] = g.at(old_index(r), old_index(c));
    return out;
  }
};

std::string raw_key(const Compact& g) {
  std::string s;
  s.reserve(1 + g.cell.size());
  s.push_back(static_cast<char>(g.k));
  for (int i = 0; i < g.k; ++i)
    for (int j = i + 1; j < g.k; ++j) s.push_back(static_cast<char>(g.at(i, j)));
  return s;
}

std::string canonical_key(const Compact& g) {
  std::vector<int> perm(g.k);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    s.reserve(1 + static_cast<size_t>(g.k) * (g.k - 1) / 2);
    s.push_back(static_cast<char>(g.k));
    for (int i = 0; i < g.k; ++i)
      for (int j = i + 1; j < g.k; ++j) s.push_back(static_cast<char>(g.at(perm[i], perm[j])));
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string state_key(const Compact& g) { return g.k <= 7 ? canonical_key(g) : raw_key(g); }

// true when some completion keeps every red degree at most w
bool feasible(const Compact& g, int w, std::unordered_set<std::string>& dead_ends) {
  if (g.k <= 2 || g.k - 2 <= w) return true;  // red degrees can never exceed alive-2 from here

  const std::string key = state_key(g);
  if (dead_ends.count(key)) return false;

  std::vector<std::pair<int, std::pair<int, int>>> moves;
  for (int i = 0; i < g.k; ++i)
    for (int j = i + 1; j < g.k; ++j) {
      const Compact h = g.contracted(i, j);
      const int r = h.max_red_degree();
      if (r <= w) moves.push_back({r, {i, j}});
    }
  std::sort(moves.begin(), moves.end());
  for (const auto& [r, ij] : moves)
    if (feasible(g.contracted(ij.first, ij.second), w, dead_ends)) return true;

  dead_ends.insert(key);
  return false;
}

Compact from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Compact g;
  g.k = n;
  g.cell.assign(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("oracle: bad edge endpoint");
    g.set(u, v, 1);
  }
  return g;
}

}  // namespace

ExactResult exact_twinwidth(int n, const std::vector<std::pair<int, int>>& edges, int cap) {
  if (n < 1) throw std::invalid_argument("exact_twinwidth: need at least one vertex");
  if (n > cap)
    throw std::invalid_argument("exact_twinwidth: " + std::to_string(n) + " vertices exceeds the cap " +
                                std::to_string(cap));

  const Compact start = from_edges(n, edges);
  int width = 0;
  std::unordered_set<std::string> dead_ends;
  for (;; ++width) {
    dead_ends.clear();
    if (feasible(start, width, dead_ends)) break;
  }

  // rebuild one witness by always taking a move that stays feasible
  ExactResult out;
  out.width = width;
  out.witness.initial_count = n;
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  Compact cur = start;
  int next_id = n;
  while (cur.k > 1) {
    bool advanced = false;
    std::vector<std::pair<int, std::pair<int, int>>> moves;
    for (int i = 0; i < cur.k; ++i)
      for (int j = i + 1; j < cur.k; ++j) {
        const Compact h = cur.contracted(i, j);
        const int r = h.max_red_degree();
        if (r <= width) moves.push_back({r, {i, j}});
      }
    std::sort(moves.begin(), moves.end());
    for (const auto& [r, ij] : moves) {
      const Compact h = cur.contracted(ij.first, ij.second);
      if (!feasible(h, width, dead_ends)) continue;
      const auto [i, j] = ij;
      out.witness.steps.push_back({label[i], label[j], next_id});
      label[i] = next_id++;
      label[j] = label[cur.k - 1];
      label.pop_back();
      cur = h;
      advanced = true;
      break;
    }
    if (!advanced) throw std::logic_error("exact_twinwidth: witness reconstruction lost feasibility");
  }
  return out;
}

namespace {

int naive_best(const Compact& g) {
  if (g.k <= 1) return 0;
  int best = g.k;  // any sequence stays below the vertex count
  for (int i = 0; i < g.k; ++i)
    for (int j = i + 1; j < g.k; ++j) {
      const Compact h = g.contracted(i, j);
      best = std::min(best, std::max(h.max_red_degree(), naive_best(h)));
    }
  return best;
}

}  // namespace

int exact_twinwidth_naive(int n, const std::vector<std::pair<int, int>>& edges, int cap) {
  if (n < 1) throw std::invalid_argument("exact_twinwidth_naive: need at least one vertex");
  if (n > cap)
    throw std::invalid_argument("exact_twinwidth_naive: " + std::to_string(n) +
                                " vertices exceeds the cap " + std::to_string(cap));
  return naive_best(from_edges(n, edges));
}

}  // namespace tww
