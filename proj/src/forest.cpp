#include "qchroma/forest.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qchroma {

IncreasingForest::IncreasingForest(std::vector<int> parent_of)
    : parent_of_(std::move(parent_of)) {
  for (std::size_t i = 0; i < parent_of_.size(); ++i) {
    int v = static_cast<int>(i + 1), p = parent_of_[i];
    if (p < 0 || p >= v)
      throw std::invalid_argument("IncreasingForest: parent must be 0 or < child");
  }
}

std::vector<int> IncreasingForest::tree_index() const {
  int n = this->n();
  std::vector<int> root(n + 1, 0), idx(n + 1, 0);
  int trees = 0;
  for (int v = 1; v <= n; ++v) {
    int p = parent_of_[v - 1];
    root[v] = (p == 0) ? v : root[p];
    if (p == 0) idx[v] = ++trees;  // roots appear in increasing order
  }
  std::vector<int> out(n);
  for (int v = 1; v <= n; ++v) out[v - 1] = idx[root[v]];
  return out;
}

std::vector<IncreasingTree> IncreasingForest::trees() const {
  int n = this->n();
  std::vector<int> tidx = tree_index();
  int count = 0;
  for (int v = 1; v <= n; ++v) count = std::max(count, tidx[v - 1]);
  std::vector<IncreasingTree> out(count);
  for (int v = 1; v <= n; ++v) {
    IncreasingTree& t = out[tidx[v - 1] - 1];
    t.vertices.push_back(v);
    t.parent.push_back(parent_of_[v - 1]);
  }
  return out;
}

bool is_spanning_for(const SimpleGraph& g, const IncreasingForest& f) {
  if (f.n() != g.n()) return false;
  for (int v = 1; v <= g.n(); ++v) {
    int p = f.parent(v);
    if (p != 0 && !g.has_edge(p, v)) return false;
  }
  return true;
}

std::vector<IncreasingForest> enumerate_isf(const SimpleGraph& g) {
  int n = g.n();
  std::vector<std::vector<int>> choices(n);
  for (int v = 1; v <= n; ++v) {
    choices[v - 1].push_back(0);
    std::uint64_t down = g.down_mask(v);
    while (down) {
      int u = std::countr_zero(down) + 1;
      down &= down - 1;
      choices[v - 1].push_back(u);
    }
  }
  std::vector<IncreasingForest> out;
  std::vector<int> pick(n, 0), parent(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) parent[i] = choices[i][pick[i]];
    out.emplace_back(parent);
    int i = n - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(choices[i].size())) {
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

long long isf_count(const SimpleGraph& g) {
  long long c = 1;
  for (int v = 1; v <= g.n(); ++v)
    c *= 1 + std::popcount(g.down_mask(v));
  return c;
}

std::vector<std::pair<int, int>> g_inversions(const SimpleGraph& g,
                                              const IncreasingForest& f) {
  if (!is_spanning_for(g, f))
    throw std::invalid_argument("g_inversions: forest does not span G");
  std::vector<int> tidx = f.tree_index();
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edge_list())
    if (tidx[u - 1] > tidx[v - 1]) out.emplace_back(u, v);
  return out;
}

long long wt(const SimpleGraph& g, const IncreasingForest& f) {
  if (!is_spanning_for(g, f))
    throw std::invalid_argument("wt: forest does not span G");
  std::vector<int> tidx = f.tree_index();
  long long total = 0;
  for (auto [u, v] : g.edge_list())
    if (tidx[u - 1] > tidx[v - 1]) ++total;
  int n = g.n();
  std::vector<std::uint64_t> tree_mask(n + 1, 0);
  for (int v = 1; v <= n; ++v) tree_mask[tidx[v - 1]] |= 1ull << (v - 1);
  for (int v = 1; v <= n; ++v) {
    int u = f.parent(v);
    if (u == 0) continue;
    // w in the same tree with u <= w < v and (w,v) in E
    std::uint64_t range = ((1ull << (v - 1)) - 1) & ~((1ull << (u - 1)) - 1);
    total += std::popcount(g.adj_mask(v) & tree_mask[tidx[v - 1]] & range);
  }
  return total;
}

std::vector<int> get_w(const SimpleGraph& g, int v, std::uint64_t s_mask,
                       const Word& kappa) {
  std::uint64_t w_mask = 1ull << (v - 1);
  std::uint64_t rest = s_mask;
  while (rest) {
    int w = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    std::uint64_t candidates = g.adj_mask(w) & w_mask & ((1ull << (w - 1)) - 1);
    bool add = false;
    while (candidates) {
      int u = std::countr_zero(candidates) + 1;
      candidates &= candidates - 1;
      if (kappa[u - 1] < kappa[w - 1]) {
        add = true;
        break;
      }
    }
    if (add) w_mask |= 1ull << (w - 1);
  }
  std::vector<int> out;
  while (w_mask) {
    out.push_back(std::countr_zero(w_mask) + 1);
    w_mask &= w_mask - 1;
  }
  return out;
}

IncreasingForest phi_traced(const SimpleGraph& g, const Word& kappa,
                            std::vector<PhiStep>* trace) {
  int n = g.n();
  if (static_cast<int>(kappa.size()) != n)
    throw std::invalid_argument("phi: coloring length mismatch");
  if (!is_proper(g, kappa)) throw std::invalid_argument("phi: coloring not proper");
  std::vector<int> parent(n, 0);
  std::uint64_t s_mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
  while (s_mask) {
    int v = std::countr_zero(s_mask) + 1;
    s_mask &= s_mask - 1;  // S := S \ {v}
    std::vector<int> w_set = get_w(g, v, s_mask, kappa);
    for (int x : w_set) s_mask &= ~(1ull << (x - 1));
    for (std::size_t i = 1; i < w_set.size(); ++i) {
      int wi = w_set[i];
      std::vector<int> larger;  // L: in-tree smaller neighbors of wi
      for (std::size_t j = 0; j < i; ++j)
        if (g.has_edge(w_set[j], wi)) larger.push_back(w_set[j]);
      int r = 0;
      for (int u : larger)
        if (kappa[u - 1] < kappa[wi - 1]) ++r;
      int par = larger[larger.size() - r];  // L_{#L-r+1}, 1-based
      parent[wi - 1] = par;
      if (trace) trace->push_back({wi, larger, r, par});
    }
  }
  return IncreasingForest(std::move(parent));
}

IncreasingForest phi(const SimpleGraph& g, const Word& kappa) {
  return phi_traced(g, kappa, nullptr);
}

std::vector<int> colortree(const SimpleGraph& g, const IncreasingTree& t, int d) {
  int k = static_cast<int>(t.vertices.size());
  if (k == 0) throw std::invalid_argument("colortree: empty tree");
  for (int i = 0; i < k; ++i) {
    if (i && t.vertices[i] <= t.vertices[i - 1])
      throw std::invalid_argument("colortree: vertices must be ascending");
    if (i == 0) {
      if (t.parent[0] != 0) throw std::invalid_argument("colortree: root has a parent");
    } else {
      if (t.parent[i] >= t.vertices[i] ||
          std::find(t.vertices.begin(), t.vertices.end(), t.parent[i]) ==
              t.vertices.end() ||
          !g.has_edge(t.parent[i], t.vertices[i]))
        throw std::invalid_argument("colortree: tree not increasing in G");
    }
  }
  std::vector<int> colors(k);
  colors[0] = d;
  for (int i = 1; i < k; ++i) {
    int b = t.vertices[i], a = t.parent[i];
    std::vector<int> cl;  // colors of smaller G-neighbors of b, by vertex
    int r = 0;
    for (int j = 0; j < i; ++j)
      if (g.has_edge(t.vertices[j], b)) {
        cl.push_back(colors[j]);
        if (t.vertices[j] > a) ++r;
      }
    std::nth_element(cl.begin(), cl.begin() + r, cl.end());
    int fresh = cl[r] + 1;  // (r+1)-th smallest existing color, plus one
    for (int j = 0; j < i; ++j)
      if (colors[j] >= fresh) ++colors[j];
    colors[i] = fresh;
  }
  return colors;
}

Word f_section(const SimpleGraph& g, const IncreasingForest& f) {
  if (!is_spanning_for(g, f))
    throw std::invalid_argument("f_section: forest does not span G");
  int n = g.n();
  Word sigma(n, 0);
  int cum = 0;
  for (const IncreasingTree& t : f.trees()) {
    cum += static_cast<int>(t.vertices.size());
    int d = n + 1 - cum;
    std::vector<int> colors = colortree(g, t, d);
    for (std::size_t r = 0; r < t.vertices.size(); ++r)
      sigma[t.vertices[r] - 1] = colors[r];
  }
  return sigma;
}

std::uint64_t coinv_of_forest(const IntervalGraph& g, const IncreasingForest& f) {
  return coinv_edge_mask(g.simple(), f_section(g.simple(), f));
}

std::string to_string(const IncreasingForest& f) {
  std::string out = "[";
  bool first_tree = true;
  for (const IncreasingTree& t : f.trees()) {
    if (!first_tree) out += " | ";
    first_tree = false;
    out += std::to_string(t.vertices[0]);
    if (t.vertices.size() > 1) {
      out += ":";
      for (std::size_t i = 1; i < t.vertices.size(); ++i) {
        if (i > 1) out += ",";
        out += std::to_string(t.vertices[i]) + "<" + std::to_string(t.parent[i]);
      }
    }
  }
  return out + "]";
}

IncreasingForest parse_forest(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("parse_forest: missing brackets");
  s = s.substr(1, s.size() - 2);
  std::vector<std::pair<int, int>> child_parent;  // (child, parent), parent 0 = root
  std::size_t pos = 0;
  auto read_int = [&](const std::string& str, std::size_t& p) {
    if (p >= str.size() || !isdigit(static_cast<unsigned char>(str[p])))
      throw std::invalid_argument("parse_forest: expected number");
    int v = 0;
    while (p < str.size() && isdigit(static_cast<unsigned char>(str[p])))
      v = v * 10 + (str[p++] - '0');
    return v;
  };
  while (pos <= s.size()) {
    std::size_t bar = s.find('|', pos);
    std::string tree = s.substr(pos, bar == std::string::npos ? std::string::npos
                                                              : bar - pos);
    std::size_t p = 0;
    int root = read_int(tree, p);
    child_parent.emplace_back(root, 0);
    if (p < tree.size()) {
      if (tree[p] != ':') throw std::invalid_argument("parse_forest: expected ':'");
      ++p;
      while (p < tree.size()) {
        int child = read_int(tree, p);
        if (p >= tree.size() || tree[p] != '<')
          throw std::invalid_argument("parse_forest: expected '<'");
        ++p;
        int par = read_int(tree, p);
        child_parent.emplace_back(child, par);
        if (p < tree.size()) {
          if (tree[p] != ',') throw std::invalid_argument("parse_forest: expected ','");
          ++p;
        }
      }
    }
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  int n = 0;
  for (auto [child, par] : child_parent) n = std::max(n, child);
  std::vector<int> parent(n, -1);
  for (auto [child, par] : child_parent) {
    if (child < 1 || parent[child - 1] != -1)
      throw std::invalid_argument("parse_forest: duplicate or bad vertex");
    parent[child - 1] = par;
  }
  for (int v = 1; v <= n; ++v)
    if (parent[v - 1] == -1)
      throw std::invalid_argument("parse_forest: vertex missing: " + std::to_string(v));
  return IncreasingForest(std::move(parent));
}

}  // namespace qchroma
