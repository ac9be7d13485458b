#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "qchroma/coloring.hpp"
#include "qchroma/graph.hpp"

namespace qchroma {

// One tree of an increasing forest: vertices ascending (vertices[0] is the
// root), parent[i] the parent of vertices[i] (parent[0] = 0); parent < child.
struct IncreasingTree {
  std::vector<int> vertices;
  std::vector<int> parent;
};

// Spanning increasing forest on [n], stored as a parent array: parent_of[v-1]
// is 0 for roots, else a vertex < v. Trees are ordered by their roots.
class IncreasingForest {
 public:
  IncreasingForest() = default;
  explicit IncreasingForest(std::vector<int> parent_of);

  int n() const { return static_cast<int>(parent_of_.size()); }
  int parent(int v) const { return parent_of_[v - 1]; }
  const std::vector<int>& parent_array() const { return parent_of_; }
  std::vector<IncreasingTree> trees() const;
  std::vector<int> tree_index() const;  // 1-based tree number per vertex

  bool operator==(const IncreasingForest&) const = default;

 private:
  std::vector<int> parent_of_;
};

// True iff every parent edge of F lies in E(G) (sizes must match).
bool is_spanning_for(const SimpleGraph& g, const IncreasingForest& f);

// Parent-choice enumeration: vertex v picks 0 or a smaller G-neighbor.
std::vector<IncreasingForest> enumerate_isf(const SimpleGraph& g);
long long isf_count(const SimpleGraph& g);

// Cross-tree inversions: edges (u,v), u<v, with u in a later tree than v.
std::vector<std::pair<int, int>> g_inversions(const SimpleGraph& g,
                                              const IncreasingForest& f);
// wt = #inversions + per parent edge (u,v): #{w in V(T): u <= w < v, (w,v) in E}.
long long wt(const SimpleGraph& g, const IncreasingForest& f);

// W grows from {v} by scanning S upward: w joins when some u in W has
// u < w, (u,w) in E, kappa(u) < kappa(w).
std::vector<int> get_w(const SimpleGraph& g, int v, std::uint64_t s_mask,
                       const Word& kappa);

struct PhiStep {  // one attachment of the trace
  int vertex;
  std::vector<int> larger_set;  // L: smaller in-tree neighbors of vertex
  int r;                        // #{u in L : kappa(u) < kappa(vertex)}
  int parent;
};

IncreasingForest phi(const SimpleGraph& g, const Word& kappa);
IncreasingForest phi_traced(const SimpleGraph& g, const Word& kappa,
                            std::vector<PhiStep>* trace);

// Position-indexed coloring of T by {d, ..., d+|T|-1}.
std::vector<int> colortree(const SimpleGraph& g, const IncreasingTree& t, int d);

// Section of phi: a permutation with phi(g, f_section(g, F)) = F.
Word f_section(const SimpleGraph& g, const IncreasingForest& f);

std::uint64_t coinv_of_forest(const IntervalGraph& g, const IncreasingForest& f);

// "[1:3<1 | 2:4<2,5<2,6<2,7<5,8<6]"; singleton trees print as bare roots.
std::string to_string(const IncreasingForest& f);
IncreasingForest parse_forest(const std::string& text);

}  // namespace qchroma
