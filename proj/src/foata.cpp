#include "qchroma/foata.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace qchroma {

namespace {

std::uint64_t r_mask_checked(const SimpleGraph& g, const int* w, int len, int x) {
  std::uint64_t rmask = 0;
  int min_r = INT_MAX, max_l = INT_MIN;
  for (int j = 0; j < len; ++j) {
    if (w[j] > x && !g.has_edge(x, w[j])) {
      rmask |= 1ull << j;
      min_r = std::min(min_r, w[j]);
    } else {
      max_l = std::max(max_l, w[j]);
    }
  }
  if (min_r != INT_MAX && max_l >= min_r)
    throw std::logic_error(
        "gamma_step: an L-letter is not smaller than an R-letter; "
        "the graph is outside the interval hypothesis");
  return rmask;
}

void gamma_step_inplace(const SimpleGraph& g, int* w, int len, int x) {
  if (len == 0) return;
  const std::uint64_t rmask = r_mask_checked(g, w, len, x);
  // Blocks end at marked positions; the last position is always marked.
  const bool last_in_r = rmask >> (len - 1) & 1;
  const std::uint64_t marks = last_in_r ? rmask : ~rmask;
  int start = 0;
  for (int j = 0; j < len; ++j)
    if (marks >> j & 1) {
      std::rotate(w + start, w + j, w + j + 1);
      start = j + 1;
    }
}

void gamma_unstep_inplace(const SimpleGraph& g, int* w, int len, int x) {
  if (len == 0) return;
  const std::uint64_t rmask = r_mask_checked(g, w, len, x);
  // Blocks start at marked positions; the first position is always marked.
  const bool first_in_r = rmask & 1;
  const std::uint64_t marks = first_in_r ? rmask : ~rmask;
  int start = 0;
  for (int j = 1; j <= len; ++j)
    if (j == len || (marks >> j & 1)) {
      std::rotate(w + start, w + start + 1, w + j);
      start = j;
    }
}

void require_perm(const IntervalGraph& g, const Word& w, const char* who) {
  if (static_cast<int>(w.size()) != g.n() || !is_permutation(w))
    throw std::invalid_argument(std::string(who) + ": want a permutation of [n]");
}

}  // namespace

Word gamma_step(const SimpleGraph& g, const Word& w, int x) {
  if (x < 1 || x > g.n()) throw std::invalid_argument("gamma_step: x out of range");
  for (int v : w)
    if (v < 1 || v > g.n())
      throw std::invalid_argument("gamma_step: word letter out of range");
  Word out = w;
  gamma_step_inplace(g, out.data(), static_cast<int>(out.size()), x);
  return out;
}

Word phi_foata(const IntervalGraph& g, const Word& sigma) {
  require_perm(g, sigma, "phi_foata");
  Word w(sigma.size());
  int len = 0;
  for (int x : sigma) {
    gamma_step_inplace(g.simple(), w.data(), len, x);
    w[len++] = x;
  }
  return w;
}

Word phi_foata_inv(const IntervalGraph& g, const Word& tau) {
  require_perm(g, tau, "phi_foata_inv");
  Word w = tau;
  Word sigma(tau.size());
  for (int len = static_cast<int>(tau.size()); len > 0; --len) {
    const int x = w[len - 1];
    sigma[len - 1] = x;
    gamma_unstep_inplace(g.simple(), w.data(), len - 1, x);
  }
  return sigma;
}

}  // namespace qchroma
