#include "tww/trigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tww {

namespace {

bool sorted_contains(const std::vector<int>& xs, int v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

void sorted_insert(std::vector<int>& xs, int v) {
  xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
}

void sorted_erase(std::vector<int>& xs, int v) {
  auto it = std::lower_bound(xs.begin(), xs.end(), v);
  if (it != xs.end() && *it == v) xs.erase(it);
}

}  // namespace

Trigraph Trigraph::from_edges(int n, const std::vector<std::pair<int, int>>& black_edges) {
  if (n < 0) throw std::invalid_argument("trigraph: negative vertex count");
  Trigraph g;
  g.initial_count_ = n;
  g.alive_count_ = n;
  g.alive_.assign(n, 1);
  g.black_.assign(n, {});
  g.red_.assign(n, {});
  for (auto [u, v] : black_edges) g.add_black_edge(u, v);
  return g;
}

void Trigraph::check_vertex(int v, const char* who) const {
  if (!alive(v)) throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) + " is not alive");
}

std::vector<int> Trigraph::vertices() const {
  std::vector<int> out;
  out.reserve(alive_count_);
  for (int v = 0; v < id_bound(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

void Trigraph::add_black_edge(int u, int v) {
  check_vertex(u, "add_black_edge");
  check_vertex(v, "add_black_edge");
  if (u == v) throw std::invalid_argument("add_black_edge: self loop");
  if (edge(u, v) != EdgeColor::None) throw std::invalid_argument("add_black_edge: edge already present");
  sorted_insert(black_[u], v);
  sorted_insert(black_[v], u);
}

void Trigraph::add_red_edge(int u, int v) {
  check_vertex(u, "add_red_edge");
  check_vertex(v, "add_red_edge");
  if (u == v) throw std::invalid_argument("add_red_edge: self loop");
  if (edge(u, v) != EdgeColor::None) throw std::invalid_argument("add_red_edge: edge already present");
  sorted_insert(red_[u], v);
  sorted_insert(red_[v], u);
}

void Trigraph::make_red(int u, int v) {
  if (edge(u, v) != EdgeColor::Black) throw std::invalid_argument("make_red: no black edge to recolor");
  sorted_erase(black_[u], v);
  sorted_erase(black_[v], u);
  sorted_insert(red_[u], v);
  sorted_insert(red_[v], u);
}

EdgeColor Trigraph::edge(int u, int v) const {
  check_vertex(u, "edge");
  check_vertex(v, "edge");
  if (sorted_contains(black_[u], v)) return EdgeColor::Black;
  if (sorted_contains(red_[u], v)) return EdgeColor::Red;
  return EdgeColor::None;
}

const std::vector<int>& Trigraph::black_neighbors(int v) const {
  check_vertex(v, "black_neighbors");
  return black_[v];
}

const std::vector<int>& Trigraph::red_neighbors(int v) const {
  check_vertex(v, "red_neighbors");
  return red_[v];
}

std::vector<int> Trigraph::neighbors(int v) const {
  check_vertex(v, "neighbors");
  std::vector<int> out;
  out.reserve(black_[v].size() + red_[v].size());
  std::merge(black_[v].begin(), black_[v].end(), red_[v].begin(), red_[v].end(), std::back_inserter(out));
  return out;
}

int Trigraph::degree(int v) const {
  check_vertex(v, "degree");
  return static_cast<int>(black_[v].size() + red_[v].size());
}

int Trigraph::red_degree(int v) const {
  check_vertex(v, "red_degree");
  return static_cast<int>(red_[v].size());
}

int Trigraph::max_red_degree() const {
  int best = 0;
  for (int v = 0; v < id_bound(); ++v)
    if (alive_[v]) best = std::max(best, static_cast<int>(red_[v].size()));
  return best;
}

std::pair<Trigraph, int> Trigraph::contract(int a, int b) const {
  check_vertex(a, "contract");
  check_vertex(b, "contract");
  if (a == b) throw std::invalid_argument("contract: need two distinct vertices");

  Trigraph g = *this;
  const int c = g.initial_count_ + g.contractions_;
  if (c != g.id_bound()) throw std::logic_error("contract: id allocation out of sync");
  ++g.contractions_;
  g.alive_.push_back(1);
  g.black_.emplace_back();
  g.red_.emplace_back();

  // Union of both neighborhoods minus the contracted pair; a neighbor stays
  // black only when it was a black neighbor of both endpoints.
  const std::vector<int> na = neighbors(a), nb = neighbors(b);
  std::vector<int> nbrs;
  std::set_union(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(nbrs));

  for (int u : nbrs) {
    if (u == a || u == b) continue;
    const bool black = edge(a, u) == EdgeColor::Black && edge(b, u) == EdgeColor::Black;
    if (black) {
      sorted_insert(g.black_[c], u);
      sorted_insert(g.black_[u], c);
    } else {
      sorted_insert(g.red_[c], u);
      sorted_insert(g.red_[u], c);
    }
  }

  for (int dead : {a, b}) {
    for (int u : g.black_[dead]) sorted_erase(g.black_[u], dead);
    for (int u : g.red_[dead]) sorted_erase(g.red_[u], dead);
    g.black_[dead].clear();
    g.red_[dead].clear();
    g.alive_[dead] = 0;
  }
  g.alive_count_ = alive_count_ - 1;
  return {std::move(g), c};
}

bool Trigraph::operator==(const Trigraph& other) const {
  if (alive_count_ != other.alive_count_) return false;
  const int bound = std::max(id_bound(), other.id_bound());
  for (int v = 0; v < bound; ++v) {
    const bool a1 = alive(v), a2 = other.alive(v);
    if (a1 != a2) return false;
    if (!a1) continue;
    if (black_[v] != other.black_[v] || red_[v] != other.red_[v]) return false;
  }
  return true;
}

}  // namespace tww
