#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ftfvs/errors.hpp"

namespace ftfvs {

// Closed walk on distinct vertices; length() counts edges. A length-2
// witness is only meaningful through a parallel edge pair.
struct CycleWitness {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const CycleWitness&) const = default;
};

// Undirected multigraph. Parallel edges are stored as multiplicity
// counters (only "1" vs ">= 2" ever matters here), self-loops are
// rejected, and vertex ids are stable across deletions. Iteration order
// is ascending by id everywhere, so algorithms on top are reproducible.
class MultiGraph {
 public:
  void add_vertex(int v);
  // Adds `count` parallel copies; creates missing endpoints.
  void add_edge(int u, int v, int count = 1);
  // count == 0 removes the edge entirely.
  void set_multiplicity(int u, int v, int count);
  void remove_vertex(int v);  // no-op when absent

  bool has_vertex(int v) const { return adj_.count(v) != 0; }
  bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }
  int multiplicity(int u, int v) const;
  int degree(int v) const;  // sum of multiplicities at v
  const std::map<int, int>& neighbors(int v) const;  // neighbor -> multiplicity

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  long long num_edges() const { return edges_; }  // counted with multiplicity
  int max_vertex_id() const;                      // 0 when empty
  std::vector<int> vertices() const;              // ascending

  bool operator==(const MultiGraph&) const = default;

 private:
  std::map<int, std::map<int, int>> adj_;
  long long edges_ = 0;
};

// Contracts edge (u,v): both endpoints are replaced by a fresh vertex
// adjacent to their former neighbors, multiplicities summed for common
// neighbors and parallel edges preserved; all u-v edges vanish. Strict:
// a missing edge is a logic bug in the caller.
std::pair<MultiGraph, int> contract_edge(const MultiGraph& g, int u, int v);

// True iff g has no parallel edges and no cycle.
bool is_forest(const MultiGraph& g);

bool is_simple(const MultiGraph& g);

// Induced subgraph on V(g) minus drop; ids outside g are ignored.
MultiGraph remove_vertices(const MultiGraph& g, const std::set<int>& drop);

MultiGraph induced_subgraph(const MultiGraph& g, const std::set<int>& keep);

// Exactly the vertices lying on at least one cycle, via block
// decomposition: a block carries a cycle iff it has >= 3 vertices or is
// a 2-vertex block with a parallel edge pair.
std::set<int> vertices_on_cycles(const MultiGraph& g);

// Connected components ordered by smallest contained vertex id, each
// component's vertices ascending.
std::vector<std::vector<int>> components(const MultiGraph& g);

// Some cycle if any exists (deterministic choice).
std::optional<CycleWitness> find_any_cycle(const MultiGraph& g);

// An exact shortest cycle (girth witness), or nullopt on forests.
std::optional<CycleWitness> shortest_cycle(const MultiGraph& g);

// Requires minimum degree >= 3 (throws naming an offending vertex);
// returns a cycle of length <= 2*log2(|V|) found by BFS traversals.
CycleWitness short_cycle_min_degree3(const MultiGraph& g);

// Witness replay: distinct vertices, cyclically adjacent, length >= 2,
// and a length-2 witness needs a parallel pair.
bool is_valid_cycle(const MultiGraph& g, const CycleWitness& c);

}  // namespace ftfvs
