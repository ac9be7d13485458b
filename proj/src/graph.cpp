#include "qchroma/graph.hpp"

#include <algorithm>
#include <bit>

namespace qchroma {

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > 63) throw std::invalid_argument("SimpleGraph: n out of range");
  adj_.assign(n, 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : SimpleGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops not allowed");
  adj_[u - 1] |= 1ull << (v - 1);
  adj_[v - 1] |= 1ull << (u - 1);
}

std::vector<std::pair<int, int>> SimpleGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    std::uint64_t up = up_mask(i);
    while (up) {
      int j = std::countr_zero(up) + 1;
      out.emplace_back(i, j);
      up &= up - 1;
    }
  }
  return out;
}

int SimpleGraph::edge_count() const {
  int c = 0;
  for (int v = 1; v <= n_; ++v) c += std::popcount(up_mask(v));
  return c;
}

IntervalGraph::IntervalGraph(std::vector<int> m) : m_(std::move(m)) {
  int n = static_cast<int>(m_.size());
  if (n > 63) throw std::invalid_argument("IntervalGraph: n out of range");
  g_ = SimpleGraph(n);
  for (int i = 1; i <= n; ++i) {
    if (m_[i - 1] < i || m_[i - 1] > n)
      throw std::invalid_argument("IntervalGraph: need i <= m_i <= n");
    for (int j = i + 1; j <= m_[i - 1]; ++j) g_.add_edge(i, j);
  }
}

std::string IntervalGraph::key() const {
  std::string s = "m=";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    s += std::to_string(m_[i]);
  }
  return s;
}

bool is_interval(const SimpleGraph& g) {
  for (int v = 1; v <= g.n(); ++v) {
    std::uint64_t up = g.up_mask(v) >> v;  // bit 0 <-> vertex v+1
    if (up == 0) continue;
    if ((up & 1) == 0) return false;        // gap right above v
    if ((up & (up + 1)) != 0) return false; // not of the form 2^k - 1
  }
  return true;
}

IntervalGraph interval_from_simple(const SimpleGraph& g) {
  if (!is_interval(g))
    throw NotIntervalError("upward neighborhood has a gap");
  std::vector<int> m(g.n());
  for (int v = 1; v <= g.n(); ++v)
    m[v - 1] = v + std::popcount(g.up_mask(v));
  return IntervalGraph(std::move(m));
}

IntervalGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  return interval_from_simple(SimpleGraph(n, edges));
}

SimpleGraph flip(const SimpleGraph& g) {
  int n = g.n();
  SimpleGraph out(n);
  for (auto [u, v] : g.edge_list()) out.add_edge(n + 1 - v, n + 1 - u);
  return out;
}

bool is_dyck(const IntervalGraph& g) { return is_interval(flip(g.simple())); }

std::vector<IntervalGraph> enumerate_interval(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_interval: n >= 1 required");
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i + 1;
  std::vector<IntervalGraph> out;
  while (true) {
    out.emplace_back(m);
    int i = n - 1;
    while (i >= 0 && m[i] == n) {
      m[i] = i + 1;
      --i;
    }
    if (i < 0) break;
    ++m[i];
  }
  return out;
}

std::vector<IntervalGraph> enumerate_dyck(int n) {
  std::vector<IntervalGraph> out;
  for (IntervalGraph& g : enumerate_interval(n))
    if (is_dyck(g)) out.push_back(std::move(g));
  return out;
}

IntervalGraph induced_subgraph(const IntervalGraph& g, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("induced_subgraph: empty subset");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > g.n())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (i && s[i] <= s[i - 1])
      throw std::invalid_argument("induced_subgraph: subset must be sorted");
  }
  int k = static_cast<int>(s.size());
  SimpleGraph sub(k);
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      if (g.has_edge(s[a - 1], s[b - 1])) sub.add_edge(a, b);
  return interval_from_simple(sub);
}

std::vector<Interval> interval_realization(const IntervalGraph& g) {
  int n = g.n();
  std::vector<Interval> out;
  out.reserve(n);
  for (int j = 1; j <= n; ++j) {
    int mj = g.m()[j - 1];
    Rat hi = (mj == n) ? Rat(n + 1) : Rat(2 * mj + 1, 2);
    out.push_back({Rat(j), hi});
  }
  return out;
}

}  // namespace qchroma
