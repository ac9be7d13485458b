#include "qchroma/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace qchroma {

bool is_permutation(const Word& w) {
  int n = static_cast<int>(w.size());
  std::uint64_t seen = 0;
  for (int v : w) {
    if (v < 1 || v > n) return false;
    std::uint64_t b = 1ull << (v - 1);
    if (seen & b) return false;
    seen |= b;
  }
  return true;
}

Word inverse_perm(const Word& sigma) {
  if (!is_permutation(sigma)) throw std::invalid_argument("not a permutation");
  Word inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i] - 1] = static_cast<int>(i + 1);
  return inv;
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

int edge_index(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }

std::uint64_t inv_edge_mask(const SimpleGraph& g, const Word& kappa) {
  std::uint64_t out = 0;
  for (int j = 2; j <= g.n(); ++j) {
    std::uint64_t down = g.down_mask(j);
    while (down) {
      int i = std::countr_zero(down) + 1;
      down &= down - 1;
      if (kappa[i - 1] > kappa[j - 1]) out |= 1ull << edge_index(i, j);
    }
  }
  return out;
}

std::uint64_t coinv_edge_mask(const SimpleGraph& g, const Word& kappa) {
  std::uint64_t out = 0;
  for (int j = 2; j <= g.n(); ++j) {
    std::uint64_t down = g.down_mask(j);
    while (down) {
      int i = std::countr_zero(down) + 1;
      down &= down - 1;
      if (kappa[i - 1] < kappa[j - 1]) out |= 1ull << edge_index(i, j);
    }
  }
  return out;
}

namespace {
std::vector<std::pair<int, int>> decode_edges(std::uint64_t mask, int n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (mask & (1ull << edge_index(i, j))) out.emplace_back(i, j);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

std::vector<std::pair<int, int>> inv_set(const SimpleGraph& g, const Word& kappa) {
  return decode_edges(inv_edge_mask(g, kappa), g.n());
}

std::vector<std::pair<int, int>> coinv_set(const SimpleGraph& g, const Word& kappa) {
  return decode_edges(coinv_edge_mask(g, kappa), g.n());
}

long long inv(const SimpleGraph& g, const Word& kappa) {
  return std::popcount(inv_edge_mask(g, kappa));
}

long long coinv(const SimpleGraph& g, const Word& kappa) {
  return std::popcount(coinv_edge_mask(g, kappa));
}

bool is_proper(const SimpleGraph& g, const Word& kappa) {
  for (int j = 2; j <= g.n(); ++j) {
    std::uint64_t down = g.down_mask(j);
    while (down) {
      int i = std::countr_zero(down) + 1;
      down &= down - 1;
      if (kappa[i - 1] == kappa[j - 1]) return false;
    }
  }
  return true;
}

Word standardize(const Word& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
  Word out(n);
  for (int r = 0; r < n; ++r) out[idx[r]] = r + 1;
  return out;
}

std::uint64_t des_mask(const Word& w) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out |= 1ull << i;
  return out;
}

std::uint64_t des_g_mask(const SimpleGraph& g, const Word& t) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] > t[i + 1] || g.has_edge(t[i], t[i + 1])) out |= 1ull << i;
  return out;
}

std::uint64_t des_g_rev_mask(const SimpleGraph& g, const Word& t) {
  std::uint64_t out = 0;
  std::size_t n = t.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    int a = t[n - 1 - i], b = t[n - 2 - i];  // reversal positions i, i+1
    if (a > b || g.has_edge(a, b)) out |= 1ull << i;
  }
  return out;
}

std::uint64_t tilde_des_mask(const SimpleGraph& g, const Word& sigma) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] > sigma[i + 1] && !g.has_edge(sigma[i], sigma[i + 1]))
      out |= 1ull << i;
  return out;
}

long long word_inversions(const Word& w) {
  long long c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

long long tilde_inv(const SimpleGraph& g, const Word& sigma) {
  long long c = 0;
  std::size_t n = sigma.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sigma[i] > sigma[j] && g.has_edge(sigma[i], sigma[j])) ++c;
  return c;
}

Composition alpha_g(const SimpleGraph& g, const Word& sigma) {
  int n = static_cast<int>(sigma.size());
  std::uint64_t desrev = des_g_rev_mask(g, sigma);
  std::uint64_t mask = 0;
  for (int s = 1; s < n; ++s)
    if (!(desrev & (1ull << (s - 1)))) mask |= 1ull << (n - s - 1);
  return comp_of(n, mask);
}

long long maj_comp(const SimpleGraph& g, const Word& sigma) {
  // eta(alpha_g(sigma)) without building the composition: the partial sums of
  // alpha_G are the elements n-s over s outside Des_G(reverse(sigma)).
  int n = static_cast<int>(sigma.size());
  std::uint64_t desrev = des_g_rev_mask(g, sigma);
  long long maj = 0;
  for (int s = 1; s < n; ++s)
    if (!(desrev >> (s - 1) & 1)) maj += n - s;
  return maj;
}

std::vector<Word> rearrangements(const Composition& beta) {
  Word w;
  for (int i = 0; i < beta.length(); ++i)
    w.insert(w.end(), beta.part(i), i + 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Word sigma_beta(const Word& sigma, const Composition& beta) {
  int n = static_cast<int>(sigma.size());
  if (beta.total() != n) throw std::invalid_argument("sigma_beta: size mismatch");
  std::vector<int> block_of_pos(n);
  int pos = 0;
  for (int i = 0; i < beta.length(); ++i)
    for (int k = 0; k < beta.part(i); ++k) block_of_pos[pos++] = i + 1;
  Word out(n);
  for (int p = 0; p < n; ++p) out[sigma[p] - 1] = block_of_pos[p];
  return out;
}

bool in_n_class(const SimpleGraph& g, const Composition& alpha, const Word& sigma) {
  if (alpha.total() != static_cast<int>(sigma.size()))
    throw std::invalid_argument("in_n_class: size mismatch");
  int start = 0;
  for (int b = 0; b < alpha.length(); ++b) {
    int len = alpha.part(b);
    for (int i = start; i + 1 < start + len; ++i)
      if (sigma[i] > sigma[i + 1] && !g.has_edge(sigma[i], sigma[i + 1]))
        return false;  // G-descent inside the segment
    for (int r = start + 1; r < start + len; ++r) {
      bool beats_all = true;
      for (int s = start; s < r; ++s)
        if (!(sigma[s] < sigma[r] && !g.has_edge(sigma[s], sigma[r]))) {
          beats_all = false;
          break;
        }
      if (beats_all) return false;  // nontrivial left-to-right G-maximum
    }
    start += len;
  }
  return true;
}

std::vector<Word> packed_proper_colorings(const SimpleGraph& g) {
  // Packed words of length n are exactly the rearrangement classes R(beta)
  // over beta |= n; keep the proper ones.
  int n = g.n();
  std::vector<Word> out;
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask)
    for (const Word& w : rearrangements(comp_of(n, mask)))
      if (is_proper(g, w)) out.push_back(w);
  return out;
}

Composition ev(const Word& packed) {
  int maxc = 0;
  for (int c : packed) maxc = std::max(maxc, c);
  std::vector<int> counts(maxc, 0);
  for (int c : packed) {
    if (c < 1) throw std::invalid_argument("ev: colors must be positive");
    ++counts[c - 1];
  }
  for (int c : counts)
    if (c == 0) throw std::invalid_argument("ev: coloring not packed");
  return Composition(std::move(counts));
}

}  // namespace qchroma
