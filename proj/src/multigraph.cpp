#include "ftfvs/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ftfvs {

void MultiGraph::add_vertex(int v) { adj_.try_emplace(v); }

void MultiGraph::add_edge(int u, int v, int count) {
  if (u == v) throw error("self-loops are not allowed");
  if (count <= 0) throw error("edge count must be positive");
  add_vertex(u);
  add_vertex(v);
  adj_[u][v] += count;
  adj_[v][u] += count;
  edges_ += count;
}

void MultiGraph::set_multiplicity(int u, int v, int count) {
  if (u == v) throw error("self-loops are not allowed");
  if (count < 0) throw error("negative multiplicity");
  if (!has_vertex(u) || !has_vertex(v))
    throw error("set_multiplicity: unknown vertex");
  int old = multiplicity(u, v);
  edges_ += count - old;
  if (count == 0) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  } else {
    adj_[u][v] = count;
    adj_[v][u] = count;
  }
}

void MultiGraph::remove_vertex(int v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (const auto& [w, m] : it->second) {
    edges_ -= m;
    adj_[w].erase(v);
  }
  adj_.erase(it);
}

int MultiGraph::multiplicity(int u, int v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return 0;
  auto jt = it->second.find(v);
  return jt == it->second.end() ? 0 : jt->second;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const auto& [w, m] : neighbors(v)) {
    (void)w;
    d += m;
  }
  return d;
}

const std::map<int, int>& MultiGraph::neighbors(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end())
    throw error("unknown vertex " + std::to_string(v));
  return it->second;
}

int MultiGraph::max_vertex_id() const {
  return adj_.empty() ? 0 : adj_.rbegin()->first;
}

std::vector<int> MultiGraph::vertices() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (const auto& [v, nbrs] : adj_) {
    (void)nbrs;
    out.push_back(v);
  }
  return out;
}

std::pair<MultiGraph, int> contract_edge(const MultiGraph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw error("contract_edge: no edge between " + std::to_string(u) +
                " and " + std::to_string(v));
  int merged = g.max_vertex_id() + 1;
  MultiGraph out;
  for (int x : g.vertices())
    if (x != u && x != v) out.add_vertex(x);
  out.add_vertex(merged);
  for (int x : g.vertices()) {
    if (x == u || x == v) continue;
    for (const auto& [y, m] : g.neighbors(x)) {
      if (y == u || y == v || y < x) continue;
      out.add_edge(x, y, m);
    }
  }
  for (const auto& [x, m] : g.neighbors(u))
    if (x != v) out.add_edge(merged, x, m);
  for (const auto& [y, m] : g.neighbors(v))
    if (y != u) out.add_edge(merged, y, m);
  return {std::move(out), merged};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Dense re-indexing by vertex id; ids stay small (contractions allocate
// max_id + 1), so a direct vector is cheap.
std::vector<int> dense_index(const MultiGraph& g) {
  std::vector<int> idx(static_cast<size_t>(g.max_vertex_id()) + 1, -1);
  int n = 0;
  for (int v : g.vertices()) idx[static_cast<size_t>(v)] = n++;
  return idx;
}

}  // namespace

bool is_forest(const MultiGraph& g) {
  if (g.num_vertices() == 0) return true;
  auto idx = dense_index(g);
  UnionFind uf(static_cast<size_t>(g.num_vertices()));
  for (int v : g.vertices()) {
    for (const auto& [w, m] : g.neighbors(v)) {
      if (w < v) continue;
      if (m >= 2) return false;
      if (!uf.unite(idx[static_cast<size_t>(v)], idx[static_cast<size_t>(w)]))
        return false;
    }
  }
  return true;
}

bool is_simple(const MultiGraph& g) {
  for (int v : g.vertices())
    for (const auto& [w, m] : g.neighbors(v)) {
      (void)w;
      if (m >= 2) return false;
    }
  return true;
}

MultiGraph remove_vertices(const MultiGraph& g, const std::set<int>& drop) {
  MultiGraph out;
  for (int v : g.vertices())
    if (!drop.count(v)) out.add_vertex(v);
  for (int v : g.vertices()) {
    if (drop.count(v)) continue;
    for (const auto& [w, m] : g.neighbors(v))
      if (w > v && !drop.count(w)) out.add_edge(v, w, m);
  }
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::set<int>& keep) {
  std::set<int> drop;
  for (int v : g.vertices())
    if (!keep.count(v)) drop.insert(v);
  return remove_vertices(g, drop);
}

std::set<int> vertices_on_cycles(const MultiGraph& g) {
  std::set<int> result;
  std::map<int, int> disc, low;
  int timer = 0;
  std::vector<std::pair<int, int>> edge_stack;

  struct Frame {
    int v;
    int parent;
    std::map<int, int>::const_iterator it, end;
  };

  for (int root : g.vertices()) {
    if (disc.count(root)) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, g.neighbors(root).begin(), g.neighbors(root).end()});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.it != f.end) {
        int w = f.it->first;
        int mult = f.it->second;
        ++f.it;
        if (!disc.count(w)) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, g.neighbors(w).begin(), g.neighbors(w).end()});
        } else if (w == f.parent) {
          // A parallel copy of the tree edge is a genuine back edge.
          if (mult >= 2 && disc[w] < disc[f.v]) {
            edge_stack.emplace_back(f.v, w);
            low[f.v] = std::min(low[f.v], disc[w]);
          }
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        int parent = f.parent;
        stack.pop_back();
        if (parent == -1) continue;
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] >= disc[parent]) {
          // pop the block ending with tree edge (parent, v)
          std::set<int> block;
          while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == parent && b == v) break;
          }
          bool cyclic = block.size() >= 3;
          if (block.size() == 2) {
            auto it2 = block.begin();
            int a = *it2++;
            int b = *it2;
            cyclic = g.multiplicity(a, b) >= 2;
          }
          if (cyclic) result.insert(block.begin(), block.end());
        }
      }
    }
  }
  return result;
}

std::vector<std::vector<int>> components(const MultiGraph& g) {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (int s : g.vertices()) {
    if (seen.count(s)) continue;
    std::vector<int> queue{s};
    seen.insert(s);
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      for (const auto& [w, m] : g.neighbors(v)) {
        (void)m;
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(std::move(queue));
  }
  return out;
}

std::optional<CycleWitness> find_any_cycle(const MultiGraph& g) {
  for (int v : g.vertices())
    for (const auto& [w, m] : g.neighbors(v))
      if (w > v && m >= 2) return CycleWitness{{v, w}};

  std::map<int, int> parent;
  std::set<int> visited, done;
  for (int root : g.vertices()) {
    if (visited.count(root)) continue;
    visited.insert(root);
    parent[root] = -1;
    std::vector<std::pair<int, std::map<int, int>::const_iterator>> stack;
    stack.emplace_back(root, g.neighbors(root).begin());
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      if (it == g.neighbors(v).end()) {
        done.insert(v);
        stack.pop_back();
        continue;
      }
      int w = (it++)->first;
      if (w == parent[v]) continue;
      if (!visited.count(w)) {
        visited.insert(w);
        parent[w] = v;
        stack.emplace_back(w, g.neighbors(w).begin());
      } else if (!done.count(w)) {
        // back edge to an ancestor: walk v..w
        std::vector<int> cyc;
        for (int x = v; x != w; x = parent[x]) cyc.push_back(x);
        cyc.push_back(w);
        std::reverse(cyc.begin(), cyc.end());
        return CycleWitness{std::move(cyc)};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct BfsSnapshot {
  std::vector<int> level, parent;
};

}  // namespace

std::optional<CycleWitness> shortest_cycle(const MultiGraph& g) {
  // A parallel pair is a globally shortest cycle.
  for (int v : g.vertices())
    for (const auto& [w, m] : g.neighbors(v))
      if (w > v && m >= 2) return CycleWitness{{v, w}};

  if (g.num_vertices() == 0) return std::nullopt;
  size_t cap = static_cast<size_t>(g.max_vertex_id()) + 1;
  int best_len = std::numeric_limits<int>::max();
  int best_u = -1, best_v = -1;
  BfsSnapshot best;

  std::vector<int> level(cap), parent(cap);
  for (int root : g.vertices()) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{root};
    level[static_cast<size_t>(root)] = 0;
    parent[static_cast<size_t>(root)] = -1;
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      // Deeper layers cannot close a cycle shorter than best_len when the
      // root lies on a shortest cycle, which is all exactness needs.
      if (2 * level[static_cast<size_t>(v)] > best_len) break;
      for (const auto& [w, m] : g.neighbors(v)) {
        (void)m;
        if (level[static_cast<size_t>(w)] == -1) {
          level[static_cast<size_t>(w)] = level[static_cast<size_t>(v)] + 1;
          parent[static_cast<size_t>(w)] = v;
          queue.push_back(w);
        } else if (w != parent[static_cast<size_t>(v)] && w < v) {
          // non-tree edge (each scanned once via w < v)
          int a = v, b = w;
          // walk to the common ancestor to get the exact cycle length
          int la = level[static_cast<size_t>(a)], lb = level[static_cast<size_t>(b)];
          int x = a, y = b;
          while (level[static_cast<size_t>(x)] > level[static_cast<size_t>(y)])
            x = parent[static_cast<size_t>(x)];
          while (level[static_cast<size_t>(y)] > level[static_cast<size_t>(x)])
            y = parent[static_cast<size_t>(y)];
          while (x != y) {
            x = parent[static_cast<size_t>(x)];
            y = parent[static_cast<size_t>(y)];
          }
          int len = la + lb + 1 - 2 * level[static_cast<size_t>(x)];
          if (len < best_len) {
            best_len = len;
            best_u = a;
            best_v = b;
            best.level = level;
            best.parent = parent;
          }
        }
      }
    }
    if (best_len == 3) break;  // no simple cycle beats a triangle
  }

  if (best_u == -1) return std::nullopt;
  // Reconstruct from the snapshot: v-path and u-path to their LCA.
  auto up = [&](int x) { return best.parent[static_cast<size_t>(x)]; };
  auto lv = [&](int x) { return best.level[static_cast<size_t>(x)]; };
  std::vector<int> pa, pb;
  int x = best_u, y = best_v;
  while (lv(x) > lv(y)) {
    pa.push_back(x);
    x = up(x);
  }
  while (lv(y) > lv(x)) {
    pb.push_back(y);
    y = up(y);
  }
  while (x != y) {
    pa.push_back(x);
    pb.push_back(y);
    x = up(x);
    y = up(y);
  }
  std::vector<int> cyc;
  cyc.push_back(x);  // the LCA
  for (auto it = pa.rbegin(); it != pa.rend(); ++it) cyc.push_back(*it);
  for (int v : pb) cyc.push_back(v);
  return CycleWitness{std::move(cyc)};
}

CycleWitness short_cycle_min_degree3(const MultiGraph& g) {
  for (int v : g.vertices())
    if (g.degree(v) < 3)
      throw error("short_cycle_min_degree3: vertex " + std::to_string(v) +
                  " has degree " + std::to_string(g.degree(v)));
  auto c = shortest_cycle(g);
  if (!c) throw internal_error("min-degree-3 graph without a cycle");
  return *c;
}

bool is_valid_cycle(const MultiGraph& g, const CycleWitness& c) {
  size_t n = c.vertices.size();
  if (n < 2) return false;
  std::set<int> distinct(c.vertices.begin(), c.vertices.end());
  if (distinct.size() != n) return false;
  for (int v : c.vertices)
    if (!g.has_vertex(v)) return false;
  if (n == 2) return g.multiplicity(c.vertices[0], c.vertices[1]) >= 2;
  for (size_t i = 0; i < n; ++i)
    if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % n])) return false;
  return true;
}

}  // namespace ftfvs
