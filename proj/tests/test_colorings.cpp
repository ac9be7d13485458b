#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qchroma/coloring.hpp"
#include "qchroma/composition.hpp"
#include "qchroma/graph.hpp"

using namespace qchroma;

namespace {

const std::vector<int> kBigM = {3, 7, 6, 4, 7, 8, 8, 8};
const Word kBigSigma = {3, 1, 8, 5, 2, 6, 4, 7};

std::uint64_t positions(std::initializer_list<int> set) {
  std::uint64_t mask = 0;
  for (int s : set) mask |= 1ull << (s - 1);
  return mask;
}

std::vector<Word> s_n(int n) {
  Word w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation utilities") {
  CHECK(is_permutation(kBigSigma));
  CHECK(!is_permutation(Word{1, 1, 2}));
  CHECK(!is_permutation(Word{2, 3}));
  CHECK(inverse_perm(kBigSigma) == Word{2, 5, 1, 7, 4, 6, 8, 3});
  CHECK(inverse_perm(inverse_perm(kBigSigma)) == kBigSigma);
  CHECK(reverse_word(Word{1, 2, 3}) == Word{3, 2, 1});
  CHECK(standardize(Word{3, 1, 3, 2}) == Word{3, 1, 4, 2});
  CHECK(standardize(Word{2, 2, 1}) == Word{2, 3, 1});
  CHECK(word_inversions(Word{3, 1, 2}) == 2);
  CHECK(des_mask(Word{3, 1, 4, 2}) == positions({1, 3}));
}

TEST_CASE("graph inversions of the running example permutation") {
  const IntervalGraph g(kBigM);
  const auto& gs = g.simple();

  const std::vector<std::pair<int, int>> want_inv = {
      {1, 2}, {3, 4}, {3, 5}, {3, 6}, {6, 7}};
  const std::vector<std::pair<int, int>> want_coinv = {
      {1, 3}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
      {2, 7}, {5, 6}, {5, 7}, {6, 8}, {7, 8}};
  CHECK(inv_set(gs, kBigSigma) == want_inv);
  CHECK(coinv_set(gs, kBigSigma) == want_coinv);
  CHECK(inv(gs, kBigSigma) == 5);
  CHECK(coinv(gs, kBigSigma) == 10);

  // inv and coinv partition the edge set.
  const std::uint64_t im = inv_edge_mask(gs, kBigSigma);
  const std::uint64_t cm = coinv_edge_mask(gs, kBigSigma);
  CHECK((im & cm) == 0);
  CHECK(std::popcount(im) + std::popcount(cm) == gs.edge_count());
  CHECK(std::popcount(im) == 5);
  for (auto [i, j] : want_inv) CHECK(((im >> edge_index(i, j)) & 1) == 1);
}

TEST_CASE("inv + coinv = |E| for every coloring word") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_interval(n)) {
      const auto& gs = g.simple();
      for (const auto& sigma : s_n(n))
        CHECK(inv(gs, sigma) + coinv(gs, sigma) == gs.edge_count());
    }
  }
}

TEST_CASE("descent statistics of the running example permutation") {
  const IntervalGraph g(kBigM);
  const auto& gs = g.simple();

  CHECK(des_g_mask(gs, reverse_word(kBigSigma)) == positions({1, 3, 4, 6, 7}));
  CHECK(des_g_rev_mask(gs, kBigSigma) == positions({1, 3, 4, 6, 7}));
  CHECK(tilde_des_mask(gs, kBigSigma) == positions({3, 6}));
  CHECK(alpha_g(gs, kBigSigma) == Composition({3, 3, 2}));
  CHECK(maj_comp(gs, kBigSigma) == 9);
  CHECK(eta(alpha_g(gs, kBigSigma)) == 9);
}

TEST_CASE("descent set duality and inversion transfer") {
  // With S = tilde-descents of sigma: [n-1] minus (n - S) equals the
  // G-descent set of the reversal of sigma, and tilde_inv(sigma) counts the
  // G-inversions of the inverse permutation.
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t full = (n == 1) ? 0 : ((1ull << (n - 1)) - 1);
    const auto perms = s_n(n);
    for (const auto& g : enumerate_interval(n)) {
      const auto& gs = g.simple();
      for (const auto& sigma : perms) {
        std::uint64_t tilde = tilde_des_mask(gs, sigma);
        std::uint64_t n_minus = 0;
        for (int s = 1; s < n; ++s)
          if ((tilde >> (s - 1)) & 1) n_minus |= 1ull << (n - s - 1);
        CHECK((full & ~n_minus) == des_g_mask(gs, reverse_word(sigma)));
        CHECK(tilde_inv(gs, sigma) == inv(gs, inverse_perm(sigma)));
      }
    }
  }
}

TEST_CASE("three routes to the tilde-major index agree") {
  for (int n = 1; n <= 6; ++n) {
    const auto perms = s_n(n);
    for (const auto& g : enumerate_interval(n)) {
      const auto& gs = g.simple();
      for (const auto& sigma : perms) {
        long long by_positions = 0;
        const std::uint64_t tilde = tilde_des_mask(gs, sigma);
        for (int s = 1; s < n; ++s)
          if ((tilde >> (s - 1)) & 1) by_positions += s;
        CHECK(maj_comp(gs, sigma) == by_positions);
        CHECK(maj_comp(gs, sigma) == eta(alpha_g(gs, sigma)));
      }
    }
  }
}

TEST_CASE("alpha_g composition from the rev-descent mask") {
  // alpha_G(sigma) = comp(n - ([n-1] \ Des_G(reverse sigma))).
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t full = (n == 1) ? 0 : ((1ull << (n - 1)) - 1);
    const auto perms = s_n(n);
    for (const auto& g : enumerate_interval(n)) {
      const auto& gs = g.simple();
      for (const auto& sigma : perms) {
        const std::uint64_t rev = des_g_rev_mask(gs, sigma);
        std::uint64_t alpha_mask = 0;
        for (int s = 1; s < n; ++s)
          if ((full & ~rev) >> (s - 1) & 1) alpha_mask |= 1ull << (n - s - 1);
        CHECK(set_of(alpha_g(gs, sigma)) == alpha_mask);
      }
    }
  }
}

TEST_CASE("rearrangements of a content vector") {
  const auto r21 = rearrangements(Composition({2, 1}));
  CHECK(r21 == std::vector<Word>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  CHECK(rearrangements(Composition({3})).size() == 1);
  // Sum over compositions of n of |R(beta)| is the ordered Bell number.
  long long fubini4 = 0;
  for (const auto& beta : enumerate_compositions(4))
    fubini4 += static_cast<long long>(rearrangements(beta).size());
  CHECK(fubini4 == 75);
}

TEST_CASE("sigma_beta compresses a permutation to content beta") {
  CHECK(sigma_beta(Word{4, 1, 6, 3, 2, 7, 5}, Composition({1, 2, 1, 3})) ==
        Word{2, 4, 3, 1, 4, 2, 4});
  CHECK(sigma_beta(Word{2, 1, 3}, Composition({1, 1, 1})) == Word{2, 1, 3});
  CHECK(sigma_beta(Word{2, 1, 3}, Composition({3})) == Word{1, 1, 1});
}

TEST_CASE("left-to-right maxima classes") {
  const IntervalGraph g({4, 3, 4, 6, 7, 6, 7});
  const auto& gs = g.simple();
  const Composition alpha({1, 2, 1, 3});
  CHECK(in_n_class(gs, alpha, Word{2, 5, 6, 7, 1, 4, 3}));
  CHECK(!in_n_class(gs, alpha, Word{5, 2, 6, 7, 1, 4, 3}));
}

TEST_CASE("packed proper colorings") {
  // Edgeless graphs admit every packed word; n=3 has 13 of them.
  CHECK(packed_proper_colorings(SimpleGraph(3)).size() == 13);
  // Complete graphs admit only permutations.
  const auto k3 = packed_proper_colorings(IntervalGraph({3, 3, 3}).simple());
  CHECK(k3.size() == 6);

  const auto words = packed_proper_colorings(IntervalGraph({3, 2, 3}).simple());
  const std::set<Word> seen(words.begin(), words.end());
  CHECK(seen.size() == words.size());
  CHECK(seen.count(Word{1, 2, 2}) == 1);
  CHECK(seen.count(Word{2, 1, 1}) == 1);
  CHECK(seen.count(Word{1, 2, 1}) == 0);  // improper: {1,3} colored alike
  for (const auto& w : words) {
    CHECK(is_proper(IntervalGraph({3, 2, 3}).simple(), w));
    CHECK(standardize(w).size() == w.size());
  }

  // Content regression: words with repeated later colors must appear.
  const auto edgeless = packed_proper_colorings(SimpleGraph(3));
  CHECK(std::count(edgeless.begin(), edgeless.end(), Word{2, 1, 1}) == 1);
  CHECK(ev(Word{2, 1, 1}) == Composition({2, 1}));
  CHECK(ev(Word{1, 2, 2}) == Composition({1, 2}));
  CHECK(ev(Word{1, 2, 3}) == Composition({1, 1, 1}));
}

TEST_CASE("is_proper") {
  const SimpleGraph gs = IntervalGraph({3, 2, 3}).simple();
  CHECK(is_proper(gs, Word{1, 2, 2}));
  CHECK(!is_proper(gs, Word{1, 2, 1}));
  CHECK(!is_proper(gs, Word{2, 1, 2}));
  CHECK(is_proper(SimpleGraph(3), Word{1, 1, 1}));
}
