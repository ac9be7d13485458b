#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qchroma/rational.hpp"

namespace qchroma {

struct NotIntervalError : std::runtime_error {
  explicit NotIntervalError(const std::string& what) : std::runtime_error(what) {}
};

// Labeled simple graph on [n], n <= 63. Adjacency rows are bitmasks with
// bit (u-1) standing for vertex u.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return (adj_[u - 1] >> (v - 1)) & 1ull;
  }
  std::uint64_t adj_mask(int v) const { return adj_[v - 1]; }
  std::uint64_t up_mask(int v) const {  // neighbors strictly above v
    return adj_[v - 1] & ~((v == 64) ? ~0ull : ((1ull << v) - 1));
  }
  std::uint64_t down_mask(int v) const {  // neighbors strictly below v
    return adj_[v - 1] & ((1ull << (v - 1)) - 1);
  }
  std::vector<std::pair<int, int>> edge_list() const;  // (i,j), i<j, lex order
  int edge_count() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  void check_vertex(int v) const;
};

// Interval graph in the column encoding: (i,j) is an edge iff i < j <= m_i.
class IntervalGraph {
 public:
  IntervalGraph() = default;
  explicit IntervalGraph(std::vector<int> m);

  int n() const { return static_cast<int>(m_.size()); }
  const std::vector<int>& m() const { return m_; }
  const SimpleGraph& simple() const { return g_; }
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
  std::string key() const;  // "m=3,7,6,4,7,8,8,8"

  bool operator==(const IntervalGraph& o) const { return m_ == o.m_; }

 private:
  std::vector<int> m_;
  SimpleGraph g_;
};

// True iff every upward neighborhood is a contiguous block {v+1,...,m_v}.
bool is_interval(const SimpleGraph& g);
IntervalGraph interval_from_simple(const SimpleGraph& g);  // NotIntervalError
IntervalGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

SimpleGraph flip(const SimpleGraph& g);  // vertex map v -> n+1-v
bool is_dyck(const IntervalGraph& g);

// Lexicographic in m; counts are n! and Catalan(n).
std::vector<IntervalGraph> enumerate_interval(int n);
std::vector<IntervalGraph> enumerate_dyck(int n);

// Subgraph on sorted vertex subset s, relabeled monotonically to [|s|].
IntervalGraph induced_subgraph(const IntervalGraph& g, const std::vector<int>& s);

struct Interval {
  Rat lo, hi;
  bool operator==(const Interval&) const = default;
};

// I_j = [j, n+1] when m_j = n, else [j, m_j + 1/2]; overlap graph equals G.
std::vector<Interval> interval_realization(const IntervalGraph& g);

}  // namespace qchroma
