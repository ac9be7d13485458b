#pragma once
#include <cstdint>
#include <vector>

#include "qchroma/composition.hpp"
#include "qchroma/graph.hpp"

namespace qchroma {

// A coloring is a word kappa(1)...kappa(n) of positive integers, indexed by
// vertex. Permutations are the bijective special case.
using Word = std::vector<int>;

bool is_permutation(const Word& w);
Word inverse_perm(const Word& sigma);
Word reverse_word(const Word& w);

// Edge (i,j), i<j of a graph on n <= 9 vertices packs into bit
// (j-1)(j-2)/2 + (i-1) of a 64-bit mask.
int edge_index(int i, int j);

// Inversions/coinversions live on edges: (i,j) in E, i<j, kappa(i) vs kappa(j).
std::uint64_t inv_edge_mask(const SimpleGraph& g, const Word& kappa);
std::uint64_t coinv_edge_mask(const SimpleGraph& g, const Word& kappa);
std::vector<std::pair<int, int>> inv_set(const SimpleGraph& g, const Word& kappa);
std::vector<std::pair<int, int>> coinv_set(const SimpleGraph& g, const Word& kappa);
long long inv(const SimpleGraph& g, const Word& kappa);
long long coinv(const SimpleGraph& g, const Word& kappa);

bool is_proper(const SimpleGraph& g, const Word& kappa);

// Left-to-right standardization; ties broken by position.
Word standardize(const Word& w);

// Descent sets as bitmasks over positions: bit (i-1) for position i in [n-1].
std::uint64_t des_mask(const Word& w);                          // w_i > w_{i+1}
std::uint64_t des_g_mask(const SimpleGraph& g, const Word& t);  // > or edge
std::uint64_t des_g_rev_mask(const SimpleGraph& g, const Word& t);  // of reversal
// Positions i with sigma(i) > sigma(i+1) and {sigma(i),sigma(i+1)} not an edge.
std::uint64_t tilde_des_mask(const SimpleGraph& g, const Word& sigma);

// Pairs i<j with w_i > w_j, no graph involved.
long long word_inversions(const Word& w);

// Position pairs i<j with {sigma(i),sigma(j)} in E and sigma(i) > sigma(j).
long long tilde_inv(const SimpleGraph& g, const Word& sigma);

// alpha_G(sigma) = comp(n - ([n-1] \ Des_G(reverse(sigma)))).
Composition alpha_g(const SimpleGraph& g, const Word& sigma);
// Major index over the complement graph: eta(alpha_G(sigma)).
long long maj_comp(const SimpleGraph& g, const Word& sigma);

// All rearrangements of 1^{b_1} 2^{b_2} ..., lexicographic.
std::vector<Word> rearrangements(const Composition& beta);
// Word whose v-th letter is the index i of the block S_i containing value v,
// where S_i = sigma(i-th position block of sizes beta).
Word sigma_beta(const Word& sigma, const Composition& beta);

// Segment predicate behind the Psi-expansion statements: each alpha-segment
// of sigma has no G-descent and no nontrivial left-to-right G-maximum.
bool in_n_class(const SimpleGraph& g, const Composition& alpha, const Word& sigma);

// Proper colorings whose color set is exactly [r] for some r.
std::vector<Word> packed_proper_colorings(const SimpleGraph& g);
Composition ev(const Word& packed);

}  // namespace qchroma
