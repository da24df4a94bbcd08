#include "tww/verifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace tww {

MatrixTrigraph::MatrixTrigraph(int n, const std::vector<std::pair<int, int>>& black_edges,
                               const std::vector<std::pair<int, int>>& red_edges) {
  if (n < 0) throw std::invalid_argument("MatrixTrigraph: negative vertex count");
  initial_ = n;
  next_ = n;
  alive_count_ = n;
  slots_ = n > 0 ? 2 * n - 1 : 0;  // room for every contraction of a full sequence
  alive_.assign(slots_, 0);
  std::fill(alive_.begin(), alive_.begin() + n, 1);
  cell_.assign(static_cast<size_t>(slots_) * slots_, 0);
  red_deg_.assign(slots_, 0);

  auto put = [&](int u, int v, char c) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw std::invalid_argument("MatrixTrigraph: bad edge endpoint");
    if (get(u, v) != 0) throw std::invalid_argument("MatrixTrigraph: duplicate edge");
    at(u, v) = at(v, u) = c;
    if (c == 2) {
      ++red_deg_[u];
      ++red_deg_[v];
    }
  };
  for (auto [u, v] : black_edges) put(u, v, 1);
  for (auto [u, v] : red_edges) put(u, v, 2);
}

char MatrixTrigraph::color(int u, int v) const {
  if (!alive(u) || !alive(v)) throw std::invalid_argument("MatrixTrigraph: dead vertex in query");
  return u == v ? 0 : get(u, v);
}

std::vector<std::pair<int, int>> MatrixTrigraph::red_edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < slots_; ++u) {
    if (!alive_[u]) continue;
    for (int v = u + 1; v < slots_; ++v)
      if (alive_[v] && get(u, v) == 2) out.push_back({u, v});
  }
  return out;
}

int MatrixTrigraph::red_degree(int v) const {
  if (!alive(v)) throw std::invalid_argument("MatrixTrigraph: dead vertex in query");
  return red_deg_[v];
}

int MatrixTrigraph::max_red_degree() const {
  int best = 0;
  for (int v = 0; v < slots_; ++v)
    if (alive_[v]) best = std::max(best, red_deg_[v]);
  return best;
}

int MatrixTrigraph::contract(int a, int b) {
  if (!alive(a) || !alive(b)) throw std::invalid_argument("MatrixTrigraph: contract needs alive vertices");
  if (a == b) throw std::invalid_argument("MatrixTrigraph: contract needs two distinct vertices");
  if (next_ >= slots_) throw std::invalid_argument("MatrixTrigraph: sequence longer than a full one");
  const int c = next_++;

  // the defining formulas, evaluated literally on vertex sets:
  //   N(c)  = (N(a) u N(b)) \ {a, b}
  //   Nr(c) = (Nr(a) u Nr(b) u (N(a) ^ N(b))) \ {a, b}
  std::set<int> na, nb, ra, rb;
  for (int v = 0; v < slots_; ++v) {
    if (!alive_[v]) continue;
    if (get(a, v) != 0) na.insert(v);
    if (get(b, v) != 0) nb.insert(v);
    if (get(a, v) == 2) ra.insert(v);
    if (get(b, v) == 2) rb.insert(v);
  }

  std::set<int> n_union;
  std::set_union(na.begin(), na.end(), nb.begin(), nb.end(), std::inserter(n_union, n_union.end()));
  std::set<int> sym_diff;
  std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(),
                                std::inserter(sym_diff, sym_diff.end()));
  std::set<int> red;
  std::set_union(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(red, red.end()));
  red.insert(sym_diff.begin(), sym_diff.end());

  n_union.erase(a);
  n_union.erase(b);
  red.erase(a);
  red.erase(b);

  for (int dead : {a, b}) {
    for (int v = 0; v < slots_; ++v) {
      if (get(dead, v) == 2 && alive_[v]) --red_deg_[v];
      at(dead, v) = at(v, dead) = 0;
    }
    red_deg_[dead] = 0;
    alive_[dead] = 0;
  }

  alive_[c] = 1;
  for (int v : n_union) {
    const char col = red.count(v) ? 2 : 1;
    at(c, v) = at(v, c) = col;
    if (col == 2) {
      ++red_deg_[c];
      ++red_deg_[v];
    }
  }
  --alive_count_;
  return c;
}

ReplayResult replay(int n, const std::vector<std::pair<int, int>>& edges,
                    const ContractionSequence& seq, const ReplayOptions& opts) {
  if (seq.initial_count != n)
    throw std::invalid_argument("replay: sequence counts " + std::to_string(seq.initial_count) +
                                " vertices, graph has " + std::to_string(n));
  if (opts.require_full && !seq.full())
    throw std::invalid_argument("replay: sequence is not full (" + std::to_string(seq.steps.size()) +
                                " steps for " + std::to_string(n) + " vertices)");
  if (static_cast<int>(seq.steps.size()) + 1 > std::max(n, 1))
    throw std::invalid_argument("replay: more steps than a full sequence");

  MatrixTrigraph g(n, edges);
  ReplayResult out;
  out.width = g.max_red_degree();
  out.red_after.reserve(seq.steps.size());
  int expected = n;
  for (const ContractionStep& s : seq.steps) {
    if (s.result != expected)
      throw std::invalid_argument("replay: step result " + std::to_string(s.result) +
                                  " out of order, expected " + std::to_string(expected));
    if (!g.alive(s.a) || !g.alive(s.b))
      throw std::invalid_argument("replay: step consumes a dead or unknown vertex");
    if (s.a == s.b) throw std::invalid_argument("replay: step contracts a vertex with itself");
    g.contract(s.a, s.b);
    ++expected;
    out.red_after.push_back(g.max_red_degree());
    out.width = std::max(out.width, out.red_after.back());
  }
  return out;
}

}  // namespace tww
